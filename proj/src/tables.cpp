#include "la1/tables.hpp"

#include <stdexcept>

namespace la1 {

std::vector<std::pair<int, int>> TransitionTable::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < n_; ++p)
        for (int r = 0; r < n_; ++r)
            if (at(p, r)) out.emplace_back(p, r);
    return out;
}

size_t TransitionTable::size() const {
    size_t count = 0;
    for (uint64_t w : bits_) count += static_cast<size_t>(__builtin_popcountll(w));
    return count;
}

size_t TransitionTable::hash() const {
    uint64_t h = fnv1a64(bits_.data(), bits_.size() * sizeof(uint64_t));
    h = fnv1a64(&n_, sizeof(n_), h);
    return static_cast<size_t>(h);
}

TransitionTable base_table(const LimitedAutomaton& la) {
    const int n = la.num_states();
    TransitionTable t(n);
    for (int p = 0; p < n; ++p)
        for (const Step& st : la.steps(p, la.left_end_index()))
            if (st.dir == +1) t.set(p, st.next);
    return t;
}

TransitionTable extend_table(const LimitedAutomaton& la, const TransitionTable& t, int symbol) {
    if (symbol == la.left_end_index() || symbol == la.right_end_index())
        throw std::invalid_argument("segments grow by work symbols, not end-markers");
    const int n = la.num_states();
    const int words = (n + 63) / 64;

    // Between two attempts to leave the new rightmost cell the machine can
    // bounce left and cross the old segment: p reaches q when some transition
    // from p rewrites the symbol, moves left into p', and (p', q) is in t.
    // exits[p] collects the direct right moves.
    std::vector<uint64_t> reach(static_cast<size_t>(n) * words, 0);
    std::vector<uint64_t> exits(static_cast<size_t>(n) * words, 0);
    for (int p = 0; p < n; ++p) {
        for (const Step& st : la.steps(p, symbol)) {
            if (st.write != symbol) continue; // the cell is frozen
            if (st.dir == +1) {
                exits[static_cast<size_t>(p) * words + (st.next >> 6)] |=
                    uint64_t{1} << (st.next & 63);
            } else {
                const uint64_t* row = t.row(st.next);
                uint64_t* dst = reach.data() + static_cast<size_t>(p) * words;
                for (int w = 0; w < words; ++w) dst[w] |= row[w];
            }
        }
    }

    TransitionTable e(n);
    std::vector<uint64_t> seen(words);
    std::vector<int> stack;
    for (int p = 0; p < n; ++p) {
        std::fill(seen.begin(), seen.end(), 0);
        seen[p >> 6] |= uint64_t{1} << (p & 63);
        stack.assign(1, p);
        std::vector<uint64_t> out(words, 0);
        while (!stack.empty()) {
            int q = stack.back();
            stack.pop_back();
            const uint64_t* ex = exits.data() + static_cast<size_t>(q) * words;
            for (int w = 0; w < words; ++w) out[w] |= ex[w];
            const uint64_t* nx = reach.data() + static_cast<size_t>(q) * words;
            for (int w = 0; w < words; ++w) {
                uint64_t fresh = nx[w] & ~seen[w];
                seen[w] |= fresh;
                while (fresh) {
                    int bit = __builtin_ctzll(fresh);
                    fresh &= fresh - 1;
                    stack.push_back(w * 64 + bit);
                }
            }
        }
        for (int w = 0; w < words; ++w)
            for (uint64_t bits = out[w]; bits;) {
                int bit = __builtin_ctzll(bits);
                bits &= bits - 1;
                e.set(p, w * 64 + bit);
            }
    }
    return e;
}

TransitionTable extend_table(const LimitedAutomaton& la, const TransitionTable& t,
                             const TapeSymbol& symbol) {
    int idx = la.symbol_index(symbol);
    if (idx < 0) throw std::invalid_argument("symbol " + symbol.text() + " is not in the work alphabet");
    return extend_table(la, t, idx);
}

bool accept_closure(const LimitedAutomaton& la, const TransitionTable& t, int q) {
    const int n = la.num_states();
    std::vector<bool> in(n, false);
    std::vector<int> stack{q};
    in[q] = true;
    while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        for (const Step& st : la.steps(p, la.right_end_index())) {
            if (st.dir != -1) continue;
            for (int r = 0; r < n; ++r)
                if (t.at(st.next, r) && !in[r]) {
                    in[r] = true;
                    stack.push_back(r);
                }
        }
    }
    for (int p = 0; p < n; ++p) {
        if (!in[p]) continue;
        for (const Step& st : la.steps(p, la.right_end_index()))
            if (st.dir == +1 && la.is_final(st.next)) return true;
    }
    return false;
}

} // namespace la1
