#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "la1/machine.hpp"
#include "la1/run.hpp"

namespace la1 {

// Acceptance agreement on every word of length <= max_len over the shared
// input alphabet. Returns nullopt when the machines agree everywhere, else
// the shortest counterexample, ties broken lexicographically by letter name.
// Throws std::invalid_argument when the input alphabets differ as sets and
// std::runtime_error when the engine hits its configuration cap.
std::optional<std::string> language_equiv_bounded(const AnyMachine& a, const AnyMachine& b,
                                                  int max_len, const EngineLimits& limits = {});

// One measured row of the size-gap experiment. A cell is empty when the value
// was not computed; every skip or inapplicable cell leaves a note behind.
struct GapRow {
    int n = 0;
    std::optional<size_t> la_states;
    std::optional<size_t> nfa_states;
    std::optional<size_t> dfa_states;
    std::optional<size_t> min_dfa_states;
    std::optional<size_t> am_dfa_states;
    std::optional<size_t> twdfa_states;
    std::optional<size_t> fooling_lower_bound;
    std::vector<std::string> notes;
};

struct BoundCheck {
    std::string description;
    bool holds = false;
    std::string detail;
};

struct GapReport {
    std::string family; // "kn" or "jn"
    int max_len = 0;
    std::vector<GapRow> rows;
    std::vector<BoundCheck> bounds;
    std::vector<std::pair<std::string, double>> runtimes_ms; // per-row wall time
};

// Builds the witness machine for each n up to max_n, runs the one-way
// conversions and minimization where feasible, measures sizes, certifies the
// fooling-set lower bound, and records every expected size inequality as a
// BoundCheck. Rows beyond the built-in feasibility caps keep their machine
// size and get notes instead of conversion results. Deterministic given
// (family, max_n, max_len).
GapReport gap_experiment(const std::string& family, int max_n, int max_len);

// Human-readable table with notes, bound results and runtimes.
std::string render_table(const GapReport& report);

// Machine-readable document; byte-identical across re-runs with the same
// inputs, so wall-clock runtimes are not part of it.
std::string report_json(const GapReport& report);

// Seeded generator of valid deterministic once-marking machines over {a, b}
// with between 2 and state_budget states, used to fuzz the two-way
// compilation. Same seed, same machine. Throws std::invalid_argument when
// state_budget < 2.
LimitedAutomaton random_domla(uint64_t seed, int state_budget);

} // namespace la1
