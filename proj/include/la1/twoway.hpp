#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "la1/machine.hpp"

namespace la1 {

// The (state, letter) pair of a marking transition: the machine was in
// `state` scanning the plain letter at work-alphabet index `letter` right
// before replacing it with its marked version. A deterministic machine has
// at most one marking step per such pair, so the pair identifies it.
struct MarkRecord {
    int state = 0;
    int letter = 0;

    bool operator==(const MarkRecord&) const = default;
};

// Inverts the symbol-preserving forward steps around state q. `left` and
// `right` carry the work symbols on the two neighbouring cells when those
// cells exist. Returns every (p, d) with delta(p, neighbour at offset -d) =
// (q, same symbol, d), ordered by state index and -1 before +1 on ties.
std::vector<std::pair<int, int>> backward_predecessors(const LimitedAutomaton& la, int q,
                                                       std::optional<int> left,
                                                       std::optional<int> right);

// True when the forward computation from (initial state, cell 1) reaches
// (rec.state, cell j) through symbol-preserving steps only; for a
// deterministic once-marking machine that makes cell j the one marked from
// rec.state. Runs a depth-first search of the predecessor tree rooted at
// (rec.state, j). Cells are 1-based, the word is given as work symbol
// indices of plain letters (the string overload parses first).
bool sipser_search(const LimitedAutomaton& la, const std::vector<int>& word,
                   const MarkRecord& rec, int j);
bool sipser_search(const LimitedAutomaton& la, const std::string& word,
                   const MarkRecord& rec, int j);

// Compiles a deterministic once-marking machine into an equivalent
// deterministic write-free machine with O(n^3) states. The result simulates
// its source directly until the marking fires, then keeps only the mark's
// (state, letter) pair in control and re-reads the unchanged tape; whenever
// the stored letter is scanned, a backward depth-first search compiled into
// head moves decides whether the current cell is the marked one, with a
// forward replay from cell 1 relocating that cell after a successful search.
// Inputs that never mark stay in direct simulation the whole run. Throws
// std::invalid_argument unless the source validates cleanly and classifies
// as deterministic and structurally once-marking.
//
// The simulation assumes marking transitions fire on first visits, which
// holds whenever the source reaches its marking step without revisiting
// cells (random_domla sources and the usual sweep-then-check machines). A
// source that walks back over visited cells and then prescribes a mark
// halts on the blocked rewrite, and the compiled machine cannot observe
// that: it has no record of which cells were visited.
LimitedAutomaton domla_to_twdfa(const LimitedAutomaton& la);

} // namespace la1
