#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "la1/symbol.hpp"

namespace la1 {

// One nondeterministic choice: next state, written symbol, head direction.
// Symbols are indices into the owning machine's work alphabet.
struct Step {
    int next = 0;
    int write = 0;
    int dir = +1; // -1 or +1

    bool operator==(const Step&) const = default;
    bool operator<(const Step& o) const {
        if (next != o.next) return next < o.next;
        if (write != o.write) return write < o.write;
        return dir < o.dir;
    }
};

// Two-way automaton whose tape cells are rewritable on the first visit only.
// The tape holds |- w -| with the left end-marker at cell 0; the head starts
// on cell 1 and a word is accepted when a computation moves past the right
// end-marker into a final state. End-marker cells are never modified and the
// head cannot leave the tape except through that final right move.
//
// Immutable after construction; cheap to copy, safe to share across threads.
class LimitedAutomaton {
public:
    class Builder;

    int num_states() const { return static_cast<int>(state_names_.size()); }
    int num_symbols() const { return static_cast<int>(work_alphabet_.size()); }
    const std::vector<std::string>& state_names() const { return state_names_; }
    const std::string& state_name(int q) const { return state_names_[q]; }
    const std::vector<std::string>& input_letters() const { return input_letters_; }
    const std::vector<TapeSymbol>& work_alphabet() const { return work_alphabet_; }
    int initial_state() const { return initial_; }
    const std::vector<bool>& final_states() const { return final_; }
    bool is_final(int q) const { return final_[q]; }

    int state_index(const std::string& name) const;   // -1 if absent
    int symbol_index(const TapeSymbol& s) const;       // -1 if absent
    int input_symbol_index(const std::string& letter) const;
    int left_end_index() const { return left_end_; }
    int right_end_index() const { return right_end_; }
    const TapeSymbol& symbol(int i) const { return work_alphabet_[i]; }

    const std::vector<Step>& steps(int state, int symbol) const {
        return delta_[static_cast<size_t>(state) * work_alphabet_.size() + symbol];
    }

    template <typename Fn> // Fn(int state, int symbol, const Step&)
    void for_each_transition(Fn&& fn) const {
        for (int q = 0; q < num_states(); ++q)
            for (int s = 0; s < num_symbols(); ++s)
                for (const Step& st : steps(q, s)) fn(q, s, st);
    }

    size_t num_transitions() const;

    bool operator==(const LimitedAutomaton&) const = default;

private:
    friend class Builder;
    LimitedAutomaton() = default;

    std::vector<std::string> state_names_;
    std::vector<std::string> input_letters_;
    std::vector<TapeSymbol> work_alphabet_; // inputs first, then extras, then |-, -|
    std::vector<std::vector<Step>> delta_;  // indexed state * num_symbols + symbol
    int initial_ = 0;
    std::vector<bool> final_;
    int left_end_ = -1;
    int right_end_ = -1;
    std::map<std::string, int> state_index_;
    std::map<TapeSymbol, int> symbol_index_;
};

// Incremental construction; build() normalizes the work alphabet so that it
// always contains every input letter plus both end-markers (inputs first,
// declared extras next, end-markers last) and sorts each transition bucket.
class LimitedAutomaton::Builder {
public:
    int add_state(const std::string& name);
    void add_input_letter(const std::string& letter);
    void add_work_symbol(const TapeSymbol& s);
    void set_initial(int q) { initial_ = q; }
    void set_initial(const std::string& name);
    void mark_final(int q);
    void mark_final(const std::string& name);
    // End-marker reads take the scanned marker as the implied write.
    void add_transition(int from, const TapeSymbol& read, int to, const TapeSymbol& write, int dir);
    void add_transition(int from, const TapeSymbol& read, int to, int dir); // write = read

    int state(const std::string& name) const; // -1 if absent
    LimitedAutomaton build() const;

private:
    std::vector<std::string> states_;
    std::map<std::string, int> state_ids_;
    std::vector<std::string> inputs_;
    std::vector<TapeSymbol> extras_;
    struct RawTransition {
        int from;
        TapeSymbol read;
        int to;
        TapeSymbol write;
        int dir;
    };
    std::vector<RawTransition> trans_;
    int initial_ = -1;
    std::vector<int> finals_;
};

// ---------------------------------------------------------------------------
// One-way machines produced by the conversions.

struct OneWayNfa {
    std::vector<std::string> states;
    std::vector<std::string> letters;
    int initial = 0;
    std::vector<bool> finals;
    // delta[state][letter] -> sorted target list
    std::vector<std::vector<std::vector<int>>> delta;

    int num_states() const { return static_cast<int>(states.size()); }
    int letter_index(const std::string& l) const;
    bool accepts(const std::vector<int>& word) const;

    bool operator==(const OneWayNfa&) const = default;
};

struct OneWayDfa {
    std::vector<std::string> states;
    std::vector<std::string> letters;
    int initial = 0;
    std::vector<bool> finals;
    // delta[state][letter] -> target, -1 when missing (partial function)
    std::vector<std::vector<int>> delta;

    int num_states() const { return static_cast<int>(states.size()); }
    int letter_index(const std::string& l) const;
    bool is_total() const;
    bool accepts(const std::vector<int>& word) const;

    bool operator==(const OneWayDfa&) const = default;
};

// Any of the three machine kinds the toolkit works with.
using AnyMachine = std::variant<LimitedAutomaton, OneWayNfa, OneWayDfa>;

// Word helpers shared by the engine, conversions and CLI. A word is given as
// a string; when every alphabet letter is a single character the string is
// split per character, otherwise it is split on whitespace. Throws
// std::invalid_argument on letters outside the alphabet.
std::vector<int> parse_word(const std::vector<std::string>& letters, const std::string& word);
std::string render_word(const std::vector<std::string>& letters, const std::vector<int>& word);

// ---------------------------------------------------------------------------
// Structural checks.

struct Diagnostic {
    std::string invariant; // short rule id, e.g. "end-marker written"
    std::string detail;
};

// Structural well-formedness: state/symbol references resolve, end-markers are
// never written and are rewritten unchanged when read, marked letters carry a
// base letter from the input alphabet. Empty result means the machine is valid.
std::vector<Diagnostic> validate(const LimitedAutomaton& la);

struct VariantProfile {
    bool deterministic = false;
    bool write_free = false;
    bool structurally_once_marking = false;
    bool structurally_always_marking = false;
    bool sweeping = false;
};

VariantProfile classify(const LimitedAutomaton& la);

} // namespace la1
