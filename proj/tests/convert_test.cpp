#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "la1/analysis.hpp"
#include "la1/convert.hpp"
#include "la1/machine.hpp"
#include "la1/run.hpp"
#include "la1/witnesses.hpp"

using namespace la1;

namespace {

std::vector<std::string> ab_words(int max_len) {
    std::vector<std::string> out = {""};
    for (size_t i = 0; i < out.size(); ++i)
        if (static_cast<int>(out[i].size()) < max_len) {
            out.push_back(out[i] + "a");
            out.push_back(out[i] + "b");
        }
    return out;
}

LimitedAutomaton contains_b() {
    LimitedAutomaton::Builder b;
    b.add_state("q0");
    b.add_state("q1");
    b.add_state("qf");
    b.add_input_letter("a");
    b.add_input_letter("b");
    b.set_initial("q0");
    b.mark_final("qf");
    b.add_transition(0, TapeSymbol::input("a"), 0, +1);
    b.add_transition(0, TapeSymbol::input("b"), 1, TapeSymbol::marked("b"), +1);
    b.add_transition(1, TapeSymbol::input("a"), 1, +1);
    b.add_transition(1, TapeSymbol::input("b"), 1, +1);
    b.add_transition(1, TapeSymbol::right_end(), 2, +1);
    return b.build();
}

// Write-free two-way machine: walk to the right end, step back twice, accept
// when the second letter from the right is an a.
LimitedAutomaton second_from_right_a() {
    LimitedAutomaton::Builder b;
    b.add_state("go");
    b.add_state("back1");
    b.add_state("back2");
    b.add_state("ret");
    b.add_state("fin");
    b.add_input_letter("a");
    b.add_input_letter("b");
    b.set_initial("go");
    b.mark_final("fin");
    for (const char* l : {"a", "b"}) {
        b.add_transition(0, TapeSymbol::input(l), 0, +1);
        b.add_transition(1, TapeSymbol::input(l), 2, -1);
        b.add_transition(3, TapeSymbol::input(l), 3, +1);
    }
    b.add_transition(0, TapeSymbol::right_end(), 1, -1);
    b.add_transition(2, TapeSymbol::input("a"), 3, +1);
    b.add_transition(3, TapeSymbol::right_end(), 4, +1);
    return b.build();
}

bool second_from_right_is_a(const std::string& w) {
    return w.size() >= 2 && w[w.size() - 2] == 'a';
}

OneWayNfa ends_with_ab_nfa() {
    OneWayNfa nfa;
    nfa.states = {"s", "sa", "sab"};
    nfa.letters = {"a", "b"};
    nfa.initial = 0;
    nfa.finals = {false, false, true};
    nfa.delta = {{{0, 1}, {0}}, {{}, {2}}, {{}, {}}};
    return nfa;
}

} // namespace

TEST_CASE("frontier automaton matches the machine language on small machines") {
    std::vector<LimitedAutomaton> machines = {contains_b(), gen_kn_omla(1), gen_jn_damla(1)};
    for (uint64_t seed = 1; seed <= 8; ++seed) machines.push_back(random_domla(seed, 4));

    for (const LimitedAutomaton& la : machines) {
        OneWayNfa nfa = la_to_ownfa(la);
        CHECK(nfa.letters == la.input_letters());
        for (const std::string& w : ab_words(6)) {
            CAPTURE(w);
            REQUIRE(nfa.accepts(parse_word(nfa.letters, w)) ==
                    decide_acceptance(la, w).accepted);
        }
    }
}

TEST_CASE("determinize preserves the language and is total") {
    OneWayNfa nfa = ends_with_ab_nfa();
    OneWayDfa dfa = determinize(nfa);
    CHECK(dfa.is_total());
    for (const std::string& w : ab_words(8)) {
        auto word = parse_word(nfa.letters, w);
        REQUIRE(dfa.accepts(word) == nfa.accepts(word));
    }
}

TEST_CASE("minimization reaches the known minimal size") {
    OneWayDfa dfa = determinize(ends_with_ab_nfa());
    OneWayDfa min = minimize_dfa(dfa);
    CHECK(min.num_states() == 3); // suffix classes: none, a, ab
    CHECK(min.is_total());
    CHECK(min.num_states() <= dfa.num_states());
    CHECK(dfa_equiv(min, dfa) == std::nullopt);

    OneWayDfa again = minimize_dfa(min);
    CHECK(again.num_states() == min.num_states());
}

TEST_CASE("minimization completes partial automata without changing them") {
    OneWayDfa partial;
    partial.states = {"s", "t"};
    partial.letters = {"a", "b"};
    partial.initial = 0;
    partial.finals = {false, true};
    partial.delta = {{1, -1}, {-1, -1}}; // only the word "a" is accepted
    OneWayDfa min = minimize_dfa(partial);
    CHECK(min.is_total());
    for (const std::string& w : ab_words(5))
        REQUIRE(min.accepts(parse_word(min.letters, w)) == (w == "a"));
    CHECK(min.num_states() == 3); // start, accept, sink
}

TEST_CASE("equivalent automata with reordered letters compare equal") {
    OneWayDfa a;
    a.states = {"s", "t"};
    a.letters = {"a", "b"};
    a.initial = 0;
    a.finals = {false, true};
    a.delta = {{1, 0}, {1, 0}}; // last letter is a

    OneWayDfa b;
    b.states = {"u", "v"};
    b.letters = {"b", "a"};
    b.initial = 0;
    b.finals = {false, true};
    b.delta = {{0, 1}, {0, 1}}; // same language, letter columns swapped

    CHECK(dfa_equiv(a, b) == std::nullopt);
}

TEST_CASE("the two witness families part ways at aab") {
    OneWayDfa k1 = kn_reference_dfa(1);
    OneWayDfa j1 = jn_reference_dfa(1);
    auto cex = dfa_equiv(k1, j1);
    REQUIRE(cex.has_value());
    CHECK(*cex == "aab");
}

TEST_CASE("mismatched alphabets are rejected") {
    OneWayDfa a;
    a.states = {"s"};
    a.letters = {"a"};
    a.initial = 0;
    a.finals = {true};
    a.delta = {{0}};
    OneWayDfa b = a;
    b.letters = {"c"};
    CHECK_THROWS_AS(dfa_equiv(a, b), std::invalid_argument);
}

TEST_CASE("always-marking subset construction matches the reference language") {
    LimitedAutomaton la = gen_jn_damla(1);
    OneWayDfa am = minimize_dfa(amla_to_owdfa(la));
    OneWayDfa ref = minimize_dfa(jn_reference_dfa(1));
    CHECK(am.num_states() == ref.num_states());
    CHECK(dfa_equiv(am, ref) == std::nullopt);
}

TEST_CASE("always-marking construction refuses other machines") {
    CHECK_THROWS_AS(amla_to_owdfa(gen_kn_omla(1)), std::invalid_argument);
    CHECK_THROWS_AS(amla_to_owdfa(contains_b()), std::invalid_argument);
}

TEST_CASE("the general and the always-marking pipelines agree") {
    LimitedAutomaton la = gen_jn_damla(1);
    OneWayDfa hard = minimize_dfa(determinize(la_to_ownfa(la)));
    OneWayDfa easy = minimize_dfa(amla_to_owdfa(la));
    CHECK(hard.num_states() == easy.num_states());
    CHECK(dfa_equiv(hard, easy) == std::nullopt);
}

TEST_CASE("write-free two-way machines convert exactly") {
    LimitedAutomaton la = second_from_right_a();
    REQUIRE(validate(la).empty());
    REQUIRE(classify(la).write_free);
    OneWayDfa dfa = twofa_to_owdfa(la);
    for (const std::string& w : ab_words(7)) {
        CAPTURE(w);
        REQUIRE(dfa.accepts(parse_word(dfa.letters, w)) == second_from_right_is_a(w));
        REQUIRE(decide_acceptance(la, w).accepted == second_from_right_is_a(w));
    }
    CHECK(minimize_dfa(dfa).num_states() <= dfa.num_states());
}

TEST_CASE("twofa_to_owdfa refuses writing machines") {
    CHECK_THROWS_AS(twofa_to_owdfa(contains_b()), std::invalid_argument);
}

TEST_CASE("frontier sizes respect the stated ceiling on two-state machines") {
    for (uint64_t seed = 20; seed < 30; ++seed) {
        LimitedAutomaton la = random_domla(seed, 2);
        REQUIRE(la.num_states() == 2);
        OneWayNfa nfa = la_to_ownfa(la);
        CHECK(nfa.num_states() <= 2 * (1 << 4)); // n * 2^(n^2) at n = 2
    }
}
