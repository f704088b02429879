#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "la1/machine.hpp"

namespace la1 {

struct Cell {
    int symbol = 0;
    bool fresh = true; // true until the first transition executed on this cell

    bool operator==(const Cell&) const = default;
};

// Full machine configuration. head ranges over 0..|w|+2 where |w|+2 is the
// halting position one step past the right end-marker.
struct Configuration {
    int state = 0;
    int head = 1;
    std::vector<Cell> tape; // |- w -|, so |w|+2 cells

    bool terminal() const { return head >= static_cast<int>(tape.size()); }
    bool operator==(const Configuration&) const = default;
};

struct Trace {
    std::vector<Configuration> configs; // starts at the initial configuration
};

struct RunVerdict {
    bool accepted = false;
    std::optional<Trace> certificate; // accepting run when accepted
    size_t explored = 0;              // distinct configurations materialized
};

struct EngineLimits {
    size_t max_configurations = 4'000'000;
};

struct LoopReport {
    enum class Reason { Repeat, Budget } reason = Reason::Repeat;
    size_t step = 0; // index into the trace where the run was cut off
};

struct DetRun {
    Trace trace;
    std::optional<LoopReport> loop; // set when the run did not halt
    bool accepted = false;
};

Configuration initial_configuration(const LimitedAutomaton& la, const std::vector<int>& word);

// All legal successors: transitions on the scanned symbol whose write is
// permitted (anything on a fresh cell, only the scanned symbol on a frozen or
// end-marker cell) and whose move stays on the tape, except for the final
// move past the right end-marker. Terminal configurations have none.
std::vector<Configuration> step_successors(const LimitedAutomaton& la, const Configuration& c);

// Breadth-first exploration of the configuration graph with memoization of
// full configurations. Throws std::runtime_error when limits.max_configurations
// is exceeded, so a resource cap is never reported as a plain reject.
RunVerdict decide_acceptance(const LimitedAutomaton& la, const std::vector<int>& word,
                             const EngineLimits& limits = {});
RunVerdict decide_acceptance(const LimitedAutomaton& la, const std::string& word,
                             const EngineLimits& limits = {});

// Single-run simulation for deterministic machines; throws std::invalid_argument
// when some configuration has more than one successor. A repeated configuration
// is a genuine infinite loop and is reported as such.
DetRun trace_deterministic(const LimitedAutomaton& la, const std::vector<int>& word,
                           size_t max_steps = 1'000'000);

// Acceptance for deterministic machines without building traces or hash sets:
// runs the unique computation with a step budget that exceeds the number of
// distinct configurations reachable along one run, so running out of budget
// proves a loop.
bool accepts_deterministic(const LimitedAutomaton& la, const std::vector<int>& word);

struct DisciplineCheck {
    bool holds = true;
    std::string message;
    std::optional<Trace> witness; // run ending at the offending step
};

struct DisciplineReport {
    DisciplineCheck once_marking;   // at most one cell rewritten, exactly one on
                                    // accepting runs, rewrites are markings
    DisciplineCheck always_marking; // every first visit to an input cell marks it
    size_t explored = 0;
};

// Explores every computation on the given word and checks both marking
// disciplines, reporting a witness run for the first violation of each.
DisciplineReport verify_marking_discipline(const LimitedAutomaton& la,
                                           const std::vector<int>& word,
                                           const EngineLimits& limits = {});

} // namespace la1
