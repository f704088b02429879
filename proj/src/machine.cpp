#include "la1/machine.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace la1 {

int LimitedAutomaton::state_index(const std::string& name) const {
    auto it = state_index_.find(name);
    return it == state_index_.end() ? -1 : it->second;
}

int LimitedAutomaton::symbol_index(const TapeSymbol& s) const {
    auto it = symbol_index_.find(s);
    return it == symbol_index_.end() ? -1 : it->second;
}

int LimitedAutomaton::input_symbol_index(const std::string& letter) const {
    return symbol_index(TapeSymbol::input(letter));
}

size_t LimitedAutomaton::num_transitions() const {
    size_t n = 0;
    for (const auto& bucket : delta_) n += bucket.size();
    return n;
}

int LimitedAutomaton::Builder::add_state(const std::string& name) {
    auto it = state_ids_.find(name);
    if (it != state_ids_.end()) return it->second;
    int id = static_cast<int>(states_.size());
    states_.push_back(name);
    state_ids_[name] = id;
    return id;
}

int LimitedAutomaton::Builder::state(const std::string& name) const {
    auto it = state_ids_.find(name);
    return it == state_ids_.end() ? -1 : it->second;
}

void LimitedAutomaton::Builder::add_input_letter(const std::string& letter) {
    if (std::find(inputs_.begin(), inputs_.end(), letter) == inputs_.end())
        inputs_.push_back(letter);
}

void LimitedAutomaton::Builder::add_work_symbol(const TapeSymbol& s) {
    if (s.is_end_marker()) return;
    if (std::find(extras_.begin(), extras_.end(), s) == extras_.end())
        extras_.push_back(s);
}

void LimitedAutomaton::Builder::set_initial(const std::string& name) {
    initial_ = add_state(name);
}

void LimitedAutomaton::Builder::mark_final(int q) {
    if (std::find(finals_.begin(), finals_.end(), q) == finals_.end())
        finals_.push_back(q);
}

void LimitedAutomaton::Builder::mark_final(const std::string& name) {
    mark_final(add_state(name));
}

void LimitedAutomaton::Builder::add_transition(int from, const TapeSymbol& read, int to,
                                               const TapeSymbol& write, int dir) {
    trans_.push_back({from, read, to, write, dir});
}

void LimitedAutomaton::Builder::add_transition(int from, const TapeSymbol& read, int to, int dir) {
    add_transition(from, read, to, read, dir);
}

LimitedAutomaton LimitedAutomaton::Builder::build() const {
    if (states_.empty()) throw std::invalid_argument("machine needs at least one state");
    if (initial_ < 0 || initial_ >= static_cast<int>(states_.size()))
        throw std::invalid_argument("initial state not set");

    LimitedAutomaton la;
    la.state_names_ = states_;
    la.state_index_ = state_ids_;
    la.input_letters_ = inputs_;
    la.initial_ = initial_;
    la.final_.assign(states_.size(), false);
    for (int f : finals_) la.final_[f] = true;

    auto add_symbol = [&la](const TapeSymbol& s) {
        if (la.symbol_index_.count(s)) return;
        la.symbol_index_[s] = static_cast<int>(la.work_alphabet_.size());
        la.work_alphabet_.push_back(s);
    };
    for (const auto& l : inputs_) add_symbol(TapeSymbol::input(l));
    // every other symbol, declared or only referenced by transitions, joins
    // the work alphabet in one fixed order so the alphabet does not depend
    // on declaration order
    std::vector<TapeSymbol> others(extras_);
    for (const auto& t : trans_) {
        if (!t.read.is_end_marker()) others.push_back(t.read);
        if (!t.write.is_end_marker()) others.push_back(t.write);
    }
    std::sort(others.begin(), others.end());
    for (const auto& s : others) add_symbol(s);
    add_symbol(TapeSymbol::left_end());
    add_symbol(TapeSymbol::right_end());
    la.left_end_ = la.symbol_index_[TapeSymbol::left_end()];
    la.right_end_ = la.symbol_index_[TapeSymbol::right_end()];

    la.delta_.assign(states_.size() * la.work_alphabet_.size(), {});
    for (const auto& t : trans_) {
        if (t.from < 0 || t.from >= static_cast<int>(states_.size()) || t.to < 0 ||
            t.to >= static_cast<int>(states_.size()))
            throw std::invalid_argument("transition references unknown state");
        int rs = la.symbol_index_.at(t.read);
        int ws = la.symbol_index_.at(t.write);
        auto& bucket = la.delta_[static_cast<size_t>(t.from) * la.work_alphabet_.size() + rs];
        Step st{t.to, ws, t.dir};
        if (std::find(bucket.begin(), bucket.end(), st) == bucket.end()) bucket.push_back(st);
    }
    for (auto& bucket : la.delta_) std::sort(bucket.begin(), bucket.end());
    return la;
}

// ---------------------------------------------------------------------------

int OneWayNfa::letter_index(const std::string& l) const {
    for (size_t i = 0; i < letters.size(); ++i)
        if (letters[i] == l) return static_cast<int>(i);
    return -1;
}

bool OneWayNfa::accepts(const std::vector<int>& word) const {
    std::vector<bool> cur(states.size(), false);
    cur[initial] = true;
    for (int letter : word) {
        std::vector<bool> next(states.size(), false);
        for (size_t q = 0; q < states.size(); ++q) {
            if (!cur[q]) continue;
            for (int t : delta[q][letter]) next[t] = true;
        }
        cur.swap(next);
    }
    for (size_t q = 0; q < states.size(); ++q)
        if (cur[q] && finals[q]) return true;
    return false;
}

int OneWayDfa::letter_index(const std::string& l) const {
    for (size_t i = 0; i < letters.size(); ++i)
        if (letters[i] == l) return static_cast<int>(i);
    return -1;
}

bool OneWayDfa::is_total() const {
    for (const auto& row : delta)
        for (int t : row)
            if (t < 0) return false;
    return true;
}

bool OneWayDfa::accepts(const std::vector<int>& word) const {
    int q = initial;
    for (int letter : word) {
        q = delta[q][letter];
        if (q < 0) return false;
    }
    return finals[q];
}

std::vector<int> parse_word(const std::vector<std::string>& letters, const std::string& word) {
    bool single = true;
    for (const auto& l : letters)
        if (l.size() != 1) single = false;

    auto index_of = [&letters](const std::string& tok) {
        for (size_t i = 0; i < letters.size(); ++i)
            if (letters[i] == tok) return static_cast<int>(i);
        throw std::invalid_argument("letter '" + tok + "' is not in the input alphabet");
    };

    std::vector<int> out;
    if (single) {
        for (char c : word) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            out.push_back(index_of(std::string(1, c)));
        }
    } else {
        std::istringstream in(word);
        std::string tok;
        while (in >> tok) out.push_back(index_of(tok));
    }
    return out;
}

std::string render_word(const std::vector<std::string>& letters, const std::vector<int>& word) {
    bool single = true;
    for (const auto& l : letters)
        if (l.size() != 1) single = false;
    std::string out;
    for (size_t i = 0; i < word.size(); ++i) {
        if (!single && i) out += ' ';
        out += letters[word[i]];
    }
    return out;
}

// ---------------------------------------------------------------------------

std::vector<Diagnostic> validate(const LimitedAutomaton& la) {
    std::vector<Diagnostic> out;
    auto flag = [&out](std::string rule, std::string detail) {
        out.push_back({std::move(rule), std::move(detail)});
    };

    std::set<std::string> inputs(la.input_letters().begin(), la.input_letters().end());
    for (const TapeSymbol& s : la.work_alphabet()) {
        if (s.kind == SymbolKind::Marked && !inputs.count(s.letter))
            flag("marked base outside input alphabet", "symbol " + s.text());
        if (s.kind == SymbolKind::Input && !inputs.count(s.letter))
            flag("input letter not declared", "symbol " + s.text());
    }
    for (const auto& l : la.input_letters())
        if (la.input_symbol_index(l) < 0)
            flag("work alphabet misses input letter", l);
    if (la.left_end_index() < 0 || la.right_end_index() < 0)
        flag("work alphabet misses end-marker", "");

    la.for_each_transition([&](int q, int s, const Step& st) {
        const TapeSymbol& read = la.symbol(s);
        const TapeSymbol& write = la.symbol(st.write);
        std::string where = la.state_name(q) + ", " + read.text();
        if (read.is_end_marker()) {
            if (st.write != s) flag("end-marker rewritten", where + " writes " + write.text());
        } else if (write.is_end_marker()) {
            flag("end-marker written", where + " writes " + write.text());
        }
        if (st.dir != -1 && st.dir != +1) flag("bad direction", where);
        if (st.next < 0 || st.next >= la.num_states()) flag("unknown state", where);
    });
    return out;
}

namespace {

// Marking transition: reads an input letter and writes its marked version.
bool is_marking(const LimitedAutomaton& la, int sym, const Step& st) {
    const TapeSymbol& r = la.symbol(sym);
    const TapeSymbol& w = la.symbol(st.write);
    return r.kind == SymbolKind::Input && w.kind == SymbolKind::Marked && w.letter == r.letter;
}

} // namespace

VariantProfile classify(const LimitedAutomaton& la) {
    if (!validate(la).empty())
        throw std::invalid_argument("classify requires a well-formed machine");
    VariantProfile p;
    const int n = la.num_states();

    p.deterministic = true;
    for (int q = 0; q < n; ++q)
        for (int s = 0; s < la.num_symbols(); ++s)
            if (la.steps(q, s).size() > 1) p.deterministic = false;

    p.write_free = true;
    la.for_each_transition([&](int, int s, const Step& st) {
        if (st.write != s) p.write_free = false;
    });

    // The marking variants are restricted to the input letters, their marked
    // versions and the end-markers; a transition touching a plain work letter
    // disqualifies both.
    bool plain_only = true;
    bool always_ok = true; // input reads mark, everything else is preserved
    bool once_writes_ok = true; // input reads preserve or mark, rest preserved
    la.for_each_transition([&](int, int s, const Step& st) {
        const TapeSymbol& r = la.symbol(s);
        const TapeSymbol& w = la.symbol(st.write);
        if (r.kind == SymbolKind::Work || w.kind == SymbolKind::Work) plain_only = false;
        if (r.kind == SymbolKind::Input) {
            if (!is_marking(la, s, st)) always_ok = false;
            if (st.write != s && !is_marking(la, s, st)) once_writes_ok = false;
        } else {
            if (st.write != s) {
                always_ok = false;
                once_writes_ok = false;
            }
        }
    });
    p.structurally_always_marking = plain_only && always_ok;

    // Once-marking additionally needs a state split: marking transitions jump
    // from the pre part to the post part and the post part cannot lead back or
    // mark again. The forward closure of all marking targets is the least
    // candidate for the post part, so checking marking sources against it is
    // enough.
    bool split_ok = true;
    bool has_marking = false; // a machine that never marks is not once-marking
    {
        std::vector<bool> post(n, false);
        std::vector<int> work;
        la.for_each_transition([&](int, int s, const Step& st) {
            if (is_marking(la, s, st)) {
                has_marking = true;
                if (!post[st.next]) {
                    post[st.next] = true;
                    work.push_back(st.next);
                }
            }
        });
        while (!work.empty()) {
            int q = work.back();
            work.pop_back();
            for (int s = 0; s < la.num_symbols(); ++s)
                for (const Step& st : la.steps(q, s))
                    if (!post[st.next]) {
                        post[st.next] = true;
                        work.push_back(st.next);
                    }
        }
        la.for_each_transition([&](int q, int s, const Step& st) {
            if (is_marking(la, s, st) && post[q]) split_ok = false;
        });
    }
    p.structurally_once_marking = plain_only && once_writes_ok && split_ok && has_marking;

    // Sweeping, conservatively: collect the directions with which each state
    // can be entered (the initial state counts as entered rightward); any
    // transition taken away from an end-marker must keep the entry direction,
    // so a reversal can only happen while scanning |- or -|.
    {
        std::vector<std::set<int>> entry(n);
        entry[la.initial_state()].insert(+1);
        la.for_each_transition([&](int, int, const Step& st) { entry[st.next].insert(st.dir); });
        p.sweeping = true;
        la.for_each_transition([&](int q, int s, const Step& st) {
            if (la.symbol(s).is_end_marker()) return;
            for (int d : entry[q])
                if (d != st.dir) p.sweeping = false;
        });
    }
    return p;
}

} // namespace la1
