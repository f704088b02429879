#pragma once

#include <stdexcept>
#include <string>

#include "la1/machine.hpp"

namespace la1 {

// Parse failure with a 1-based position; line 0 marks problems that concern
// the document as a whole, like a missing declaration. what() includes the
// position when one is known.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& message, int line, int column);
};

// Text format shared by the three machine kinds. Declarations come one per
// line as "name: tokens", with kind, states, input and initial required,
// final optional, and work (extra tape symbols) allowed for LA1 only; the
// remaining lines are transitions. "#" starts a comment. LA1 transitions are
// "q, sym -> p, wsym, +1" with the write omitted exactly when the read is an
// end-marker; NFA/DFA transitions are "q, a -> p". Marked letters use a
// prime suffix, the end-markers are "|-" and "-|".
AnyMachine parse_machine(const std::string& text);

std::string serialize(const LimitedAutomaton& la);
std::string serialize(const OneWayNfa& nfa);
std::string serialize(const OneWayDfa& dfa);
std::string serialize(const AnyMachine& m);

// Graphviz rendering: one node per state, final states double-circled, edge
// labels "read / write, dir" for tape machines and the letter for one-way
// machines; parallel edges share one arrow with stacked labels.
std::string export_dot(const LimitedAutomaton& la);
std::string export_dot(const OneWayNfa& nfa);
std::string export_dot(const OneWayDfa& dfa);
std::string export_dot(const AnyMachine& m);

} // namespace la1
