#include "doctest.h"

#include <stdexcept>

#include "la1/machine.hpp"

using namespace la1;

namespace {

// Deterministic sweeper accepting words that contain a b: the first b is
// marked, everything after it is crossed unchanged.
LimitedAutomaton contains_b() {
    LimitedAutomaton::Builder b;
    b.add_state("q0");
    b.add_state("q1");
    b.add_state("qf");
    b.add_input_letter("a");
    b.add_input_letter("b");
    b.set_initial("q0");
    b.mark_final("qf");
    b.add_transition(b.state("q0"), TapeSymbol::input("a"), b.state("q0"), +1);
    b.add_transition(b.state("q0"), TapeSymbol::input("b"), b.state("q1"),
                     TapeSymbol::marked("b"), +1);
    b.add_transition(b.state("q1"), TapeSymbol::input("a"), b.state("q1"), +1);
    b.add_transition(b.state("q1"), TapeSymbol::input("b"), b.state("q1"), +1);
    b.add_transition(b.state("q1"), TapeSymbol::right_end(), b.state("qf"), +1);
    return b.build();
}

} // namespace

TEST_CASE("builder assembles states, letters and the normalized alphabet") {
    LimitedAutomaton la = contains_b();
    CHECK(la.num_states() == 3);
    CHECK(la.state_name(0) == "q0");
    CHECK(la.state_index("qf") == 2);
    CHECK(la.state_index("nope") == -1);
    CHECK(la.input_letters() == std::vector<std::string>{"a", "b"});
    CHECK(la.initial_state() == 0);
    CHECK(la.is_final(2));
    CHECK_FALSE(la.is_final(0));

    // alphabet: inputs first, referenced extras sorted, end-markers last
    CHECK(la.symbol(0) == TapeSymbol::input("a"));
    CHECK(la.symbol(1) == TapeSymbol::input("b"));
    CHECK(la.symbol_index(TapeSymbol::marked("b")) >= 2);
    CHECK(la.left_end_index() == la.num_symbols() - 2);
    CHECK(la.right_end_index() == la.num_symbols() - 1);
    CHECK(la.input_symbol_index("a") == 0);
}

TEST_CASE("alphabet order does not depend on transition declaration order") {
    auto build = [](bool flip) {
        LimitedAutomaton::Builder b;
        b.add_state("p");
        b.add_input_letter("a");
        b.add_input_letter("b");
        b.set_initial("p");
        if (flip) {
            b.add_transition(0, TapeSymbol::input("b"), 0, TapeSymbol::marked("b"), +1);
            b.add_transition(0, TapeSymbol::input("a"), 0, TapeSymbol::marked("a"), +1);
        } else {
            b.add_transition(0, TapeSymbol::input("a"), 0, TapeSymbol::marked("a"), +1);
            b.add_transition(0, TapeSymbol::input("b"), 0, TapeSymbol::marked("b"), +1);
        }
        return b.build();
    };
    CHECK(build(false) == build(true));
}

TEST_CASE("end-marker reads take the marker as implied write") {
    LimitedAutomaton la = contains_b();
    const auto& steps = la.steps(1, la.right_end_index());
    REQUIRE(steps.size() == 1);
    CHECK(steps[0].write == la.right_end_index());
    CHECK(steps[0].next == 2);
}

TEST_CASE("transition buckets are sorted and counted") {
    LimitedAutomaton::Builder b;
    b.add_state("p");
    b.add_state("q");
    b.add_input_letter("a");
    b.set_initial(0);
    b.add_transition(0, TapeSymbol::input("a"), 1, +1);
    b.add_transition(0, TapeSymbol::input("a"), 0, +1);
    LimitedAutomaton la = b.build();
    const auto& bucket = la.steps(0, 0);
    REQUIRE(bucket.size() == 2);
    CHECK(bucket[0].next == 0);
    CHECK(bucket[1].next == 1);
    CHECK(la.num_transitions() == 2);
}

TEST_CASE("validate accepts the well-formed sweeper") {
    CHECK(validate(contains_b()).empty());
}

TEST_CASE("validate flags end-marker abuse") {
    LimitedAutomaton::Builder b;
    b.add_state("p");
    b.add_input_letter("a");
    b.set_initial(0);
    b.add_transition(0, TapeSymbol::input("a"), 0, TapeSymbol::right_end(), +1);
    auto diags = validate(b.build());
    CHECK_FALSE(diags.empty());
}

TEST_CASE("validate flags a rewritten end-marker read") {
    LimitedAutomaton::Builder b;
    b.add_state("p");
    b.add_input_letter("a");
    b.set_initial(0);
    b.add_transition(0, TapeSymbol::left_end(), 0, TapeSymbol::input("a"), +1);
    CHECK_FALSE(validate(b.build()).empty());
}

TEST_CASE("validate flags a marked letter without input base") {
    LimitedAutomaton::Builder b;
    b.add_state("p");
    b.add_input_letter("a");
    b.set_initial(0);
    b.add_transition(0, TapeSymbol::input("a"), 0, TapeSymbol::marked("c"), +1);
    CHECK_FALSE(validate(b.build()).empty());
}

TEST_CASE("validate flags a bad direction") {
    LimitedAutomaton::Builder b;
    b.add_state("p");
    b.add_input_letter("a");
    b.set_initial(0);
    b.add_transition(0, TapeSymbol::input("a"), 0, TapeSymbol::input("a"), 0);
    CHECK_FALSE(validate(b.build()).empty());
}

TEST_CASE("classify recognizes the sweeper profile") {
    VariantProfile p = classify(contains_b());
    CHECK(p.deterministic);
    CHECK_FALSE(p.write_free);
    CHECK(p.structurally_once_marking);
    CHECK_FALSE(p.structurally_always_marking);
    CHECK(p.sweeping);
}

TEST_CASE("classify requires a marking transition for once-marking") {
    LimitedAutomaton::Builder b;
    b.add_state("p");
    b.add_state("f");
    b.add_input_letter("a");
    b.set_initial(0);
    b.mark_final(1);
    b.add_transition(0, TapeSymbol::input("a"), 0, +1);
    b.add_transition(0, TapeSymbol::right_end(), 1, +1);
    VariantProfile p = classify(b.build());
    CHECK(p.deterministic);
    CHECK(p.write_free);
    CHECK_FALSE(p.structurally_once_marking);
}

TEST_CASE("classify rejects ill-formed machines") {
    LimitedAutomaton::Builder b;
    b.add_state("p");
    b.add_input_letter("a");
    b.set_initial(0);
    b.add_transition(0, TapeSymbol::input("a"), 0, TapeSymbol::right_end(), +1);
    CHECK_THROWS_AS(classify(b.build()), std::invalid_argument);
}

TEST_CASE("words split per character for single-letter alphabets") {
    std::vector<std::string> letters = {"a", "b"};
    CHECK(parse_word(letters, "abba") == std::vector<int>{0, 1, 1, 0});
    CHECK(parse_word(letters, "").empty());
    CHECK(render_word(letters, {1, 0}) == "ba");
    CHECK_THROWS_AS(parse_word(letters, "abc"), std::invalid_argument);
}

TEST_CASE("words split on whitespace for longer letters") {
    std::vector<std::string> letters = {"aa", "b"};
    CHECK(parse_word(letters, "aa b aa") == std::vector<int>{0, 1, 0});
    std::string rendered = render_word(letters, {0, 1});
    CHECK(parse_word(letters, rendered) == std::vector<int>{0, 1});
}

TEST_CASE("one-way automata accept through their delta tables") {
    OneWayNfa nfa;
    nfa.states = {"s", "t"};
    nfa.letters = {"a", "b"};
    nfa.initial = 0;
    nfa.finals = {false, true};
    nfa.delta = {{{0}, {0, 1}}, {{}, {}}};
    CHECK(nfa.accepts(parse_word(nfa.letters, "ab")));
    CHECK_FALSE(nfa.accepts(parse_word(nfa.letters, "ba")));
    CHECK(nfa.letter_index("b") == 1);

    OneWayDfa dfa;
    dfa.states = {"s", "t"};
    dfa.letters = {"a", "b"};
    dfa.initial = 0;
    dfa.finals = {false, true};
    dfa.delta = {{0, 1}, {-1, 1}};
    CHECK(dfa.accepts(parse_word(dfa.letters, "ab")));
    CHECK_FALSE(dfa.accepts(parse_word(dfa.letters, "aba")));
    CHECK_FALSE(dfa.is_total());
}
