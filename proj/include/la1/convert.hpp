#pragma once

#include <optional>
#include <string>

#include "la1/machine.hpp"
#include "la1/tables.hpp"

namespace la1 {

// One-way NFA over frontier states (table of the frozen prefix, arrival
// state). Reading a letter applies one machine transition: a right move lands
// on the next fresh cell directly, a left move reenters the frozen prefix and
// must first come back through the old table, then cross the newly frozen
// cell through the extended table. States are materialized only as reached;
// at most n * 2^(n^2) exist for an n-state input.
OneWayNfa la_to_ownfa(const LimitedAutomaton& la);

// Subset construction fused into the frontier simulation for machines that
// mark every cell on first visit. The written symbol is then forced by the
// input letter, so the table component evolves deterministically and only the
// arrival states need the subset treatment; all empty subsets collapse into
// one sink. At most (2^n - 1) * 2^(n^2) + 1 states. Throws
// std::invalid_argument unless classify reports structurallyAlwaysMarking.
OneWayDfa amla_to_owdfa(const LimitedAutomaton& la);

// Reachable subset construction; the output is complete, with the empty
// subset materialized as a sink only when some word actually reaches it.
OneWayDfa determinize(const OneWayNfa& nfa);

// Unique minimal complete automaton for the same language: completes with a
// sink when needed, drops unreachable states, then refines the
// final/non-final partition until stable.
OneWayDfa minimize_dfa(const OneWayDfa& dfa);

// Language equality over the same letter set (matched by name, order may
// differ); returns the shortest, lexicographically least word accepted by
// exactly one machine, or nullopt when equivalent. Throws
// std::invalid_argument when the letter sets differ.
std::optional<std::string> dfa_equiv(const OneWayDfa& a, const OneWayDfa& b);

// One-way DFA for a write-free two-way machine: la_to_ownfa plus
// determinization. Because a write-free machine never changes its tape, the
// table component is determined by the input prefix and the reachable subset
// count stays within 2^(k + k^2) for k states. Throws std::invalid_argument
// when the machine writes.
OneWayDfa twofa_to_owdfa(const LimitedAutomaton& la);

} // namespace la1
