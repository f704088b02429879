#include "la1/witnesses.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace la1 {

namespace {

void check_n(int n) {
    if (n < 1) throw std::invalid_argument("block length must be positive");
}

bool blocks_ok(int n, const std::string& w) {
    if (w.size() % static_cast<size_t>(n) != 0) return false;
    return w.size() / static_cast<size_t>(n) >= 2; // at least one block plus the probe
}

} // namespace

bool kn_member(int n, const std::string& w) {
    check_n(n);
    if (!blocks_ok(n, w)) return false;
    size_t k = w.size() / n - 1;
    std::string last = w.substr(k * n, n);
    for (size_t j = 0; j < k; ++j)
        if (w.compare(j * n, n, last) == 0) return true;
    return false;
}

bool jn_member(int n, const std::string& w) {
    check_n(n);
    if (!blocks_ok(n, w)) return false;
    std::string first = w.substr(0, n);
    size_t blocks = w.size() / n;
    for (size_t j = 1; j < blocks; ++j)
        if (w.compare(j * n, n, first) == 0) return true;
    return false;
}

// ---------------------------------------------------------------------------

LimitedAutomaton gen_kn_omla(int n) {
    check_n(n);
    LimitedAutomaton::Builder b;
    const std::vector<std::string> letters = {"a", "b"};
    for (const auto& l : letters) b.add_input_letter(l);

    auto name = [](const std::string& stem, int i) { return stem + std::to_string(i); };
    auto input = [](const std::string& l) { return TapeSymbol::input(l); };
    auto marked = [](const std::string& l) { return TapeSymbol::marked(l); };
    const TapeSymbol LE = TapeSymbol::left_end(), RE = TapeSymbol::right_end();

    // first sweep: count block positions, nondeterministically mark one block end
    for (int r = 1; r <= n; ++r) b.add_state(name("p", r));
    for (int i = 0; i < n; ++i) b.add_state(name("q", i));
    for (int j = 0; j < n; ++j) b.add_state(name("r", j));
    // comparison sweeps
    for (int c = 0; c < n; ++c) b.add_state(name("ls", c));
    for (const auto& l : letters)
        for (int c = 0; c < n; ++c) b.add_state("lp_" + l + "_" + std::to_string(c));
    for (const auto& l : letters)
        for (int c = 0; c < n; ++c) b.add_state("lq_" + l + "_" + std::to_string(c));
    for (int c = 0; c < n; ++c) b.add_state(name("w", c));
    for (int m = 1; m < n; ++m) b.add_state(name("s", m));
    b.add_state("t");
    b.add_state("acc");
    b.set_initial("p1");
    b.mark_final("acc");

    auto st = [&b](const std::string& s) { return b.state(s); };

    for (const auto& l : letters) {
        for (int r = 1; r < n; ++r)
            b.add_transition(st(name("p", r)), input(l), st(name("p", r + 1)), +1);
        b.add_transition(st(name("p", n)), input(l), st("p1"), +1);
        b.add_transition(st(name("p", n)), input(l), st("q0"), marked(l), +1);
        for (int i = 0; i + 1 < n; ++i)
            b.add_transition(st(name("q", i)), input(l), st(name("q", i + 1)), +1);
        b.add_transition(st(name("q", n - 1)), input(l), st("r0"), +1);
        for (int j = 0; j < n; ++j)
            b.add_transition(st(name("r", j)), input(l), st(name("r", (j + 1) % n)), +1);
    }
    b.add_transition(st("r0"), RE, st("ls0"), -1);

    for (const auto& l : letters) {
        // looking for the compared cell of the last block (counter hits 0 there)
        for (int c = 1; c < n; ++c)
            b.add_transition(st(name("ls", c)), input(l), st(name("ls", c - 1)), -1);
        b.add_transition(st("ls0"), input(l), st("lp_" + l + "_" + std::to_string(n - 1)), -1);

        for (const auto& m : letters) {
            // letter m remembered, marked block not reached yet
            for (int c = 0; c < n; ++c) {
                std::string cur = "lp_" + m + "_" + std::to_string(c);
                b.add_transition(st(cur), input(l),
                                 st("lp_" + m + "_" + std::to_string((c + n - 1) % n)), -1);
                if (c == 0) {
                    if (l == m) b.add_transition(st(cur), marked(l), st(name("w", n - 1)), -1);
                } else {
                    b.add_transition(st(cur), marked(l),
                                     st("lq_" + m + "_" + std::to_string(c - 1)), -1);
                }
            }
            // inside the marked block, counter 0 selects the compared cell
            for (int c = 0; c < n; ++c) {
                std::string cur = "lq_" + m + "_" + std::to_string(c);
                if (c == 0) {
                    if (l == m) b.add_transition(st(cur), input(l), st(name("w", n - 1)), -1);
                } else {
                    b.add_transition(st(cur), input(l),
                                     st("lq_" + m + "_" + std::to_string(c - 1)), -1);
                }
            }
        }
        for (int c = 0; c < n; ++c) {
            b.add_transition(st(name("w", c)), input(l), st(name("w", (c + n - 1) % n)), -1);
            b.add_transition(st(name("w", c)), marked(l), st(name("w", (c + n - 1) % n)), -1);
        }
        for (int m = 1; m < n; ++m) {
            b.add_transition(st(name("s", m)), input(l), st(name("s", m)), +1);
            b.add_transition(st(name("s", m)), marked(l), st(name("s", m)), +1);
        }
        b.add_transition(st("t"), input(l), st("t"), +1);
        b.add_transition(st("t"), marked(l), st("t"), +1);
    }
    // the counter value at |- equals the finished sweep's index
    for (int c = 0; c < n; ++c) {
        if (c == n - 1)
            b.add_transition(st(name("w", c)), LE, st("t"), +1);
        else
            b.add_transition(st(name("w", c)), LE, st(name("s", c + 1)), +1);
    }
    for (int m = 1; m < n; ++m)
        b.add_transition(st(name("s", m)), RE, st(name("ls", m)), -1);
    b.add_transition(st("t"), RE, st("acc"), +1);
    return b.build();
}

LimitedAutomaton gen_jn_damla(int n) {
    check_n(n);
    LimitedAutomaton::Builder b;
    const std::vector<std::string> letters = {"a", "b"};
    for (const auto& l : letters) b.add_input_letter(l);

    auto input = [](const std::string& l) { return TapeSymbol::input(l); };
    auto marked = [](const std::string& l) { return TapeSymbol::marked(l); };
    const TapeSymbol LE = TapeSymbol::left_end(), RE = TapeSymbol::right_end();
    const int start_res = 1 % n; // residue of block starts (0 when n == 1)

    for (int t = 1; t <= n; ++t) b.add_state("a" + std::to_string(t));
    for (int c = 0; c < n; ++c) b.add_state("f" + std::to_string(c));
    for (const auto& l : letters)
        for (int t = 0; t < n; ++t) b.add_state("bk_" + l + "_" + std::to_string(t));
    for (const auto& l : letters)
        for (int last = 0; last < 2; ++last)
            for (int r = 0; r < n; ++r)
                b.add_state("cm_" + l + "_" + std::to_string(last) + "_" + std::to_string(r));
    b.add_state("ret");
    b.add_state("skb");
    for (int c = 0; c < n; ++c) b.add_state("sk" + std::to_string(c));
    for (int c = 0; c < n; ++c) b.add_state("fin" + std::to_string(c));
    b.add_state("acc");
    b.set_initial("a1");
    b.mark_final("acc");

    auto st = [&b](const std::string& s) { return b.state(s); };
    auto bk = [](const std::string& l, int t) { return "bk_" + l + "_" + std::to_string(t); };
    auto cm = [](const std::string& l, bool last, int r) {
        return "cm_" + l + "_" + (last ? "1" : "0") + "_" + std::to_string(r);
    };

    for (const auto& l : letters) {
        // mark the whole first block
        for (int t = 1; t < n; ++t)
            b.add_transition(st("a" + std::to_string(t)), input(l),
                             st("a" + std::to_string(t + 1)), marked(l), +1);
        b.add_transition(st("a" + std::to_string(n)), input(l), st("ret"), marked(l), -1);

        // fetch the next symbol to inspect: first unmarked cell, position kept mod n
        for (int c = 0; c < n; ++c) {
            b.add_transition(st("f" + std::to_string(c)), marked(l),
                             st("f" + std::to_string((c + 1) % n)), +1);
            b.add_transition(st("f" + std::to_string(c)), input(l), st(bk(l, c)), marked(l), -1);
        }

        // return to |- with the fetched letter and its in-block position
        for (const auto& m : letters)
            for (int t = 0; t < n; ++t)
                b.add_transition(st(bk(m, t)), marked(l), st(bk(m, t)), -1);

        // walk to the matching cell of the first block (r counts the distance)
        for (const auto& m : letters)
            for (int last = 0; last < 2; ++last)
                for (int r = 0; r < n; ++r) {
                    std::string cur = cm(m, last, r);
                    if (r != 0) {
                        b.add_transition(st(cur), marked(l),
                                         st(cm(m, last, (r + n - 1) % n)), +1);
                    } else if (l == m) {
                        if (last)
                            b.add_transition(st(cur), marked(l),
                                             st("fin" + std::to_string(start_res)), +1);
                        else
                            b.add_transition(st(cur), marked(l), st("ret"), -1);
                    } else {
                        b.add_transition(st(cur), marked(l), st("skb"), -1);
                    }
                }

        b.add_transition(st("ret"), marked(l), st("ret"), -1);
        b.add_transition(st("skb"), marked(l), st("skb"), -1);

        // skip the failed block: mark through it, stop on the next block start
        for (int c = 0; c < n; ++c) {
            b.add_transition(st("sk" + std::to_string(c)), marked(l),
                             st("sk" + std::to_string((c + 1) % n)), +1);
            if (c == start_res)
                b.add_transition(st("sk" + std::to_string(c)), input(l), st(bk(l, c)),
                                 marked(l), -1);
            else
                b.add_transition(st("sk" + std::to_string(c)), input(l),
                                 st("sk" + std::to_string((c + 1) % n)), marked(l), +1);
        }

        // a block matched completely: mark the rest, accept when |w| is a
        // multiple of n
        for (int c = 0; c < n; ++c) {
            b.add_transition(st("fin" + std::to_string(c)), marked(l),
                             st("fin" + std::to_string((c + 1) % n)), +1);
            b.add_transition(st("fin" + std::to_string(c)), input(l),
                             st("fin" + std::to_string((c + 1) % n)), marked(l), +1);
        }
    }
    b.add_transition(st("ret"), LE, st("f" + std::to_string(start_res)), +1);
    b.add_transition(st("skb"), LE, st("sk" + std::to_string(start_res)), +1);
    for (const auto& m : letters)
        for (int t = 0; t < n; ++t)
            b.add_transition(st(bk(m, t)), LE, st(cm(m, t == 0, (t + n - 1) % n)), +1);
    b.add_transition(st("fin" + std::to_string(start_res)), RE, st("acc"), +1);
    return b.build();
}

// ---------------------------------------------------------------------------

namespace {

struct DfaSketch {
    std::vector<std::string> letters{"a", "b"};
    std::vector<bool> finals;
    std::vector<std::vector<int>> delta;
    std::vector<std::string> names;

    int add(const std::string& name, bool fin) {
        names.push_back(name);
        finals.push_back(fin);
        delta.emplace_back(letters.size(), -1);
        return static_cast<int>(names.size()) - 1;
    }
    OneWayDfa done() {
        OneWayDfa d;
        d.states = names;
        d.letters = letters;
        d.initial = 0;
        d.finals = finals;
        d.delta = delta;
        return d;
    }
};

} // namespace

OneWayDfa kn_reference_dfa(int n) {
    check_n(n);
    // state: blocks seen before the latest one, whether the latest completed
    // block already occurred, and the partial block in progress
    using Key = std::tuple<std::set<std::string>, bool, std::string>;
    std::map<Key, int> index;
    std::vector<Key> todo;
    DfaSketch d;

    auto intern = [&](const Key& k) {
        auto it = index.find(k);
        if (it != index.end()) return it->second;
        bool fin = std::get<1>(k) && std::get<2>(k).empty();
        int id = d.add("m" + std::to_string(index.size()), fin);
        index.emplace(k, id);
        todo.push_back(k);
        return id;
    };

    intern({{}, false, ""});
    for (size_t i = 0; i < todo.size(); ++i) {
        Key cur = todo[i];
        int from = index.at(cur);
        for (size_t li = 0; li < d.letters.size(); ++li) {
            auto [seen, flag, partial] = cur;
            partial += d.letters[li];
            Key next;
            if (static_cast<int>(partial.size()) == n) {
                bool hit = seen.count(partial) > 0;
                seen.insert(partial);
                next = {seen, hit, ""};
            } else {
                next = {seen, flag, partial};
            }
            d.delta[from][li] = intern(next);
        }
    }
    return d.done();
}

OneWayDfa jn_reference_dfa(int n) {
    check_n(n);
    // phase one reads the first block; afterwards (first block, offset in the
    // current block, prefix still equal, already matched)
    using Key = std::tuple<std::string, int, bool, bool>;
    std::map<Key, int> index;
    std::vector<Key> todo;
    DfaSketch d;

    auto intern = [&](const Key& k) {
        auto it = index.find(k);
        if (it != index.end()) return it->second;
        auto [first, off, eq, matched] = k;
        bool fin = static_cast<int>(first.size()) == n && off == 0 && matched;
        int id = d.add("m" + std::to_string(index.size()), fin);
        index.emplace(k, id);
        todo.push_back(k);
        return id;
    };

    intern({"", 0, true, false});
    for (size_t i = 0; i < todo.size(); ++i) {
        Key cur = todo[i];
        int from = index.at(cur);
        for (size_t li = 0; li < d.letters.size(); ++li) {
            auto [first, off, eq, matched] = cur;
            const std::string& l = d.letters[li];
            Key next;
            if (static_cast<int>(first.size()) < n) {
                first += l;
                next = {first, 0, true, false};
            } else {
                bool eq2 = eq && first[off] == l[0];
                int off2 = off + 1;
                if (off2 == n)
                    next = {first, 0, true, matched || eq2};
                else
                    next = {first, off2, eq2, matched};
            }
            d.delta[from][li] = intern(next);
        }
    }
    return d.done();
}

std::vector<std::pair<std::string, std::string>> jn_fooling_set(int n) {
    check_n(n);
    std::vector<std::pair<std::string, std::string>> out;
    for (int bits = 0; bits < (1 << n); ++bits) {
        std::string x;
        for (int i = n - 1; i >= 0; --i) x += (bits >> i) & 1 ? 'b' : 'a';
        out.emplace_back(x, x);
    }
    return out;
}

FoolingOutcome verify_fooling_set(const std::function<bool(const std::string&)>& member,
                                  const std::vector<std::pair<std::string, std::string>>& pairs) {
    FoolingOutcome out;
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (!member(pairs[i].first + pairs[i].second)) {
            out.bad_i = out.bad_j = static_cast<int>(i);
            out.message = "pair " + std::to_string(i) + " does not belong to the language";
            return out;
        }
    }
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j) {
            if (member(pairs[i].first + pairs[j].second) &&
                member(pairs[j].first + pairs[i].second)) {
                out.bad_i = static_cast<int>(i);
                out.bad_j = static_cast<int>(j);
                out.message = "pairs " + std::to_string(i) + " and " + std::to_string(j) +
                              " admit both cross concatenations";
                return out;
            }
        }
    out.certified = true;
    out.size = pairs.size();
    return out;
}

} // namespace la1
