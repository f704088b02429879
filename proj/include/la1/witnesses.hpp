#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "la1/machine.hpp"

namespace la1 {

// Block languages over {a, b} used to measure the conversion gaps. A word is
// split into consecutive blocks of length n.
//
//   kn_member: w = x_1 ... x_k x with k >= 1 and x = x_j for some j <= k
//              (the last block already occurred among the earlier ones)
//   jn_member: w = x x_1 ... x_k with k >= 1 and x = x_j for some j
//              (the first block occurs again among the later ones)
//
// jn is the letter-wise reversal of kn.
bool kn_member(int n, const std::string& w);
bool jn_member(int n, const std::string& w);

// Sweeping machine for kn with 10n+1 states: a nondeterministic first sweep
// marks the end of one earlier block, later sweeps are deterministic and
// compare the chosen block with the last one symbol by symbol.
LimitedAutomaton gen_kn_omla(int n);

// Deterministic machine for jn with 10n+3 states that marks every cell on its
// first visit and replays the first block against each later block.
LimitedAutomaton gen_jn_damla(int n);

// Direct one-way automata for the two languages, used as ground truth.
OneWayDfa kn_reference_dfa(int n);
OneWayDfa jn_reference_dfa(int n);

// { (x, x) : x in {a,b}^n } — pairwise incompatible continuations for jn.
std::vector<std::pair<std::string, std::string>> jn_fooling_set(int n);

struct FoolingOutcome {
    bool certified = false;
    size_t size = 0;       // lower bound on nondeterministic state counts
    int bad_i = -1, bad_j = -1;
    std::string message;
};

// Checks the fooling-set conditions against a membership oracle: every u_i v_i
// belongs to the language and no pair i != j has both cross concatenations in
// it. Certified(size) yields the standard state lower bound for one-way
// nondeterministic automata.
FoolingOutcome verify_fooling_set(const std::function<bool(const std::string&)>& member,
                                  const std::vector<std::pair<std::string, std::string>>& pairs);

} // namespace la1
