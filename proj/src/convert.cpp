#include "la1/convert.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace la1 {

namespace {

// Shared lazy-table machinery: tables interned by value, extensions memoized
// per (table, symbol).
struct TablePool {
    const LimitedAutomaton& la;
    std::vector<TransitionTable> tables;
    std::unordered_map<TransitionTable, int, TransitionTableHash> ids;
    std::map<std::pair<int, int>, int> extensions;

    explicit TablePool(const LimitedAutomaton& m) : la(m) {}

    int intern(TransitionTable t) {
        auto it = ids.find(t);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(tables.size());
        tables.push_back(std::move(t));
        ids.emplace(tables.back(), id);
        return id;
    }

    int extend(int table, int symbol) {
        auto key = std::make_pair(table, symbol);
        auto it = extensions.find(key);
        if (it != extensions.end()) return it->second;
        int id = intern(extend_table(la, tables[table], symbol));
        extensions.emplace(key, id);
        return id;
    }
};

// Frontier successors of (table, q) on one input letter: arrival states at
// the next cell, paired with the extended table they reach it under.
void frontier_step(TablePool& pool, int table, int q, int letterSym,
                   std::vector<std::pair<int, int>>& out) {
    const LimitedAutomaton& la = pool.la;
    for (const Step& st : la.steps(q, letterSym)) {
        int ext = pool.extend(table, st.write);
        if (st.dir == +1) {
            out.emplace_back(ext, st.next);
        } else {
            const TransitionTable& told = pool.tables[table];
            const TransitionTable& tnew = pool.tables[ext];
            const int n = la.num_states();
            for (int mid = 0; mid < n; ++mid) {
                if (!told.at(st.next, mid)) continue;
                for (int r = 0; r < n; ++r)
                    if (tnew.at(mid, r)) out.emplace_back(ext, r);
            }
        }
    }
}

} // namespace

OneWayNfa la_to_ownfa(const LimitedAutomaton& la) {
    TablePool pool(la);
    int base = pool.intern(base_table(la));

    std::map<std::pair<int, int>, int> ids; // (table, state) -> nfa state
    std::vector<std::pair<int, int>> nodes;
    auto intern = [&](int table, int q) {
        auto it = ids.find({table, q});
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(nodes.size());
        ids.emplace(std::make_pair(table, q), id);
        nodes.emplace_back(table, q);
        return id;
    };

    OneWayNfa nfa;
    nfa.letters = la.input_letters();
    const int nl = static_cast<int>(nfa.letters.size());
    std::vector<int> letterSym(nl);
    for (int l = 0; l < nl; ++l) letterSym[l] = la.input_symbol_index(nfa.letters[l]);

    nfa.initial = intern(base, la.initial_state());
    std::vector<std::pair<int, int>> succ;
    for (size_t i = 0; i < nodes.size(); ++i) {
        nfa.delta.emplace_back(nl);
        for (int l = 0; l < nl; ++l) {
            succ.clear();
            auto [table, q] = nodes[i];
            frontier_step(pool, table, q, letterSym[l], succ);
            std::sort(succ.begin(), succ.end());
            succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
            auto& bucket = nfa.delta[i][l];
            for (auto [t2, q2] : succ) bucket.push_back(intern(t2, q2));
            std::sort(bucket.begin(), bucket.end());
        }
    }

    nfa.states.reserve(nodes.size());
    nfa.finals.reserve(nodes.size());
    for (auto [table, q] : nodes) {
        nfa.states.push_back("t" + std::to_string(table) + "_" + la.state_name(q));
        nfa.finals.push_back(accept_closure(la, pool.tables[table], q));
    }
    return nfa;
}

OneWayDfa amla_to_owdfa(const LimitedAutomaton& la) {
    if (!classify(la).structurally_always_marking)
        throw std::invalid_argument("construction requires an always-marking machine");

    TablePool pool(la);
    int base = pool.intern(base_table(la));

    using Key = std::pair<int, std::vector<int>>; // table, sorted non-empty state set
    std::map<Key, int> ids;
    std::vector<Key> nodes;
    auto intern = [&](Key k) {
        auto it = ids.find(k);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(nodes.size());
        ids.emplace(k, id);
        nodes.push_back(std::move(k));
        return id;
    };

    OneWayDfa dfa;
    dfa.letters = la.input_letters();
    const int nl = static_cast<int>(dfa.letters.size());
    std::vector<int> letterSym(nl);
    for (int l = 0; l < nl; ++l) letterSym[l] = la.input_symbol_index(dfa.letters[l]);

    dfa.initial = intern({base, {la.initial_state()}});
    int sink = -1;
    std::vector<std::pair<int, int>> succ;
    for (size_t i = 0; i < nodes.size(); ++i) {
        dfa.delta.emplace_back(nl, -1);
        if (static_cast<int>(i) == sink) {
            for (int l = 0; l < nl; ++l) dfa.delta[i][l] = sink;
            continue;
        }
        for (int l = 0; l < nl; ++l) {
            succ.clear();
            const auto& [table, set] = nodes[i];
            for (int q : set) frontier_step(pool, table, q, letterSym[l], succ);
            if (succ.empty()) {
                if (sink < 0) {
                    sink = static_cast<int>(nodes.size());
                    nodes.emplace_back(-1, std::vector<int>{});
                }
                dfa.delta[i][l] = sink;
                continue;
            }
            // every path through an always-marking machine writes the same
            // marked letter, so all successors share one extended table
            int t2 = succ.front().first;
            std::vector<int> arrivals;
            for (auto [tt, q2] : succ) {
                if (tt != t2)
                    throw std::logic_error("table component diverged on one input prefix");
                arrivals.push_back(q2);
            }
            std::sort(arrivals.begin(), arrivals.end());
            arrivals.erase(std::unique(arrivals.begin(), arrivals.end()), arrivals.end());
            dfa.delta[i][l] = intern({t2, std::move(arrivals)});
        }
    }

    dfa.states.reserve(nodes.size());
    dfa.finals.reserve(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (static_cast<int>(i) == sink) {
            dfa.states.push_back("sink");
            dfa.finals.push_back(false);
            continue;
        }
        const auto& [table, set] = nodes[i];
        dfa.states.push_back("m" + std::to_string(i));
        bool fin = false;
        for (int q : set) fin = fin || accept_closure(la, pool.tables[table], q);
        dfa.finals.push_back(fin);
    }
    return dfa;
}

OneWayDfa determinize(const OneWayNfa& nfa) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> nodes;
    auto intern = [&](std::vector<int> set) {
        auto it = ids.find(set);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(nodes.size());
        ids.emplace(set, id);
        nodes.push_back(std::move(set));
        return id;
    };

    OneWayDfa dfa;
    dfa.letters = nfa.letters;
    const int nl = static_cast<int>(nfa.letters.size());
    dfa.initial = intern({nfa.initial});
    for (size_t i = 0; i < nodes.size(); ++i) {
        dfa.delta.emplace_back(nl, -1);
        for (int l = 0; l < nl; ++l) {
            std::set<int> next;
            for (int q : nodes[i])
                for (int t : nfa.delta[q][l]) next.insert(t);
            dfa.delta[i][l] = intern(std::vector<int>(next.begin(), next.end()));
        }
    }
    for (size_t i = 0; i < nodes.size(); ++i) {
        dfa.states.push_back("d" + std::to_string(i));
        bool fin = false;
        for (int q : nodes[i]) fin = fin || nfa.finals[q];
        dfa.finals.push_back(fin);
    }
    return dfa;
}

OneWayDfa minimize_dfa(const OneWayDfa& dfa) {
    const int nl = static_cast<int>(dfa.letters.size());

    // complete and keep the reachable part; missing edges lead to an implicit
    // sink that becomes a real state only when some reachable edge needs it
    std::vector<int> order;
    std::vector<int> id(dfa.num_states() + 1, -1);
    int sinkOld = dfa.num_states();
    auto visit = [&](int q) {
        if (id[q] < 0) {
            id[q] = static_cast<int>(order.size());
            order.push_back(q);
        }
        return id[q];
    };
    visit(dfa.initial);
    for (size_t i = 0; i < order.size(); ++i) {
        int q = order[i];
        for (int l = 0; l < nl; ++l) {
            int t = q == sinkOld ? sinkOld : dfa.delta[q][l];
            visit(t < 0 ? sinkOld : t);
        }
    }

    const int n = static_cast<int>(order.size());
    std::vector<std::vector<int>> delta(n, std::vector<int>(nl));
    std::vector<bool> finals(n, false);
    for (int i = 0; i < n; ++i) {
        int q = order[i];
        finals[i] = q != sinkOld && dfa.finals[q];
        for (int l = 0; l < nl; ++l) {
            int t = q == sinkOld ? sinkOld : dfa.delta[q][l];
            delta[i][l] = id[t < 0 ? sinkOld : t];
        }
    }

    // partition refinement on (class, successor classes)
    std::vector<int> cls(n);
    for (int i = 0; i < n; ++i) cls[i] = finals[i] ? 1 : 0;
    int classes = 2;
    for (;;) {
        std::map<std::vector<int>, int> sig;
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> key{cls[i]};
            for (int l = 0; l < nl; ++l) key.push_back(cls[delta[i][l]]);
            auto it = sig.find(key);
            if (it == sig.end()) it = sig.emplace(std::move(key), static_cast<int>(sig.size())).first;
            next[i] = it->second;
        }
        int count = static_cast<int>(sig.size());
        if (count == classes) {
            cls = std::move(next);
            break;
        }
        classes = count;
        cls = std::move(next);
    }

    // one representative per class, numbered along a traversal from the
    // initial class so equal inputs produce identical outputs
    std::vector<int> rep(classes, -1);
    std::vector<int> newId(classes, -1);
    std::vector<int> crder;
    auto cvisit = [&](int c) {
        if (newId[c] < 0) {
            newId[c] = static_cast<int>(crder.size());
            crder.push_back(c);
        }
        return newId[c];
    };
    for (int i = 0; i < n; ++i)
        if (rep[cls[i]] < 0) rep[cls[i]] = i;
    cvisit(cls[0]); // state 0 is the relabeled initial state
    for (size_t i = 0; i < crder.size(); ++i) {
        int c = crder[i];
        for (int l = 0; l < nl; ++l) cvisit(cls[delta[rep[c]][l]]);
    }

    OneWayDfa out;
    out.letters = dfa.letters;
    out.initial = 0;
    out.states.resize(crder.size());
    out.finals.resize(crder.size());
    out.delta.assign(crder.size(), std::vector<int>(nl, -1));
    for (size_t i = 0; i < crder.size(); ++i) {
        int c = crder[i];
        out.states[i] = "m" + std::to_string(i);
        out.finals[i] = finals[rep[c]];
        for (int l = 0; l < nl; ++l) out.delta[i][l] = newId[cls[delta[rep[c]][l]]];
    }
    return out;
}

std::optional<std::string> dfa_equiv(const OneWayDfa& a, const OneWayDfa& b) {
    std::vector<std::string> lettersA = a.letters, lettersB = b.letters;
    std::sort(lettersA.begin(), lettersA.end());
    std::sort(lettersB.begin(), lettersB.end());
    if (lettersA != lettersB) throw std::invalid_argument("input alphabets differ");

    // explore letters in name order so the first mismatch found is the
    // shortest, lexicographically least counterexample
    const int nl = static_cast<int>(lettersA.size());
    std::vector<int> la(nl), lb(nl);
    for (int l = 0; l < nl; ++l) {
        la[l] = a.letter_index(lettersA[l]);
        lb[l] = b.letter_index(lettersA[l]);
    }

    auto fa = [&](int q) { return q >= 0 && a.finals[q]; };
    auto fb = [&](int q) { return q >= 0 && b.finals[q]; };

    struct Node {
        int qa, qb;
        int parent, letter;
    };
    std::vector<Node> nodes{{a.initial, b.initial, -1, -1}};
    std::set<std::pair<int, int>> seen{{a.initial, b.initial}};
    for (size_t i = 0; i < nodes.size(); ++i) {
        auto [qa, qb, parent, letter] = nodes[i];
        if (fa(qa) != fb(qb)) {
            std::vector<int> word;
            for (int at = static_cast<int>(i); nodes[at].parent >= 0; at = nodes[at].parent)
                word.push_back(nodes[at].letter);
            std::reverse(word.begin(), word.end());
            return render_word(lettersA, word);
        }
        for (int l = 0; l < nl; ++l) {
            int na = qa < 0 ? -1 : a.delta[qa][la[l]];
            int nb = qb < 0 ? -1 : b.delta[qb][lb[l]];
            if (seen.insert({na, nb}).second)
                nodes.push_back({na, nb, static_cast<int>(i), l});
        }
    }
    return std::nullopt;
}

OneWayDfa twofa_to_owdfa(const LimitedAutomaton& la) {
    if (!classify(la).write_free)
        throw std::invalid_argument("conversion requires a write-free machine");
    return determinize(la_to_ownfa(la));
}

} // namespace la1
