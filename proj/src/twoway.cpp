#include "la1/twoway.hpp"

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace la1 {

std::vector<std::pair<int, int>> backward_predecessors(const LimitedAutomaton& la, int q,
                                                       std::optional<int> left,
                                                       std::optional<int> right) {
    auto enters = [&](int p, int sym, int d) {
        for (const Step& st : la.steps(p, sym))
            if (st.dir == d && st.next == q && st.write == sym) return true;
        return false;
    };
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < la.num_states(); ++p) {
        if (right && enters(p, *right, -1)) out.emplace_back(p, -1);
        if (left && enters(p, *left, +1)) out.emplace_back(p, +1);
    }
    return out;
}

bool sipser_search(const LimitedAutomaton& la, const std::vector<int>& word,
                   const MarkRecord& rec, int j) {
    int len = static_cast<int>(word.size());
    if (j < 1 || j > len || word[static_cast<size_t>(j) - 1] != rec.letter) return false;
    auto sym_at = [&](int pos) {
        if (pos == 0) return la.left_end_index();
        if (pos == len + 1) return la.right_end_index();
        return word[static_cast<size_t>(pos) - 1];
    };
    std::vector<std::pair<int, int>> stack{{rec.state, j}};
    std::set<std::pair<int, int>> seen(stack.begin(), stack.end());
    while (!stack.empty()) {
        auto [q, pos] = stack.back();
        stack.pop_back();
        if (q == la.initial_state() && pos == 1) return true;
        std::optional<int> left, right;
        if (pos > 0) left = sym_at(pos - 1);
        if (pos <= len) right = sym_at(pos + 1);
        for (auto [p, d] : backward_predecessors(la, q, left, right)) {
            std::pair<int, int> child{p, pos - d};
            if (seen.insert(child).second) stack.push_back(child);
        }
    }
    return false;
}

bool sipser_search(const LimitedAutomaton& la, const std::string& word,
                   const MarkRecord& rec, int j) {
    std::vector<int> w;
    for (int letter : parse_word(la.input_letters(), word))
        w.push_back(la.input_symbol_index(la.input_letters()[static_cast<size_t>(letter)]));
    return sipser_search(la, w, rec, j);
}

namespace {

// Control of the compiled machine. Search phases keep the head next to or on
// the cell of the tree node they work on, so every depth-first step is one
// tape move; the suspended state and the mark pair ride along unchanged.
enum Phase : int {
    BeforeMark = 0, // direct simulation, nothing marked yet
    AfterMark,      // simulation on plain letters with the mark pair in control
    PeekLeft,       // node state is the initial state: test for cell 1 first
    ProbeLeft,      // one cell left of the node, scanning for +1 predecessors
    PassRight,      // back on the node cell, heading for the right probe
    ProbeRight,     // one cell right of the node, scanning for -1 predecessors
    Ascend,         // node fully explored, on its cell, climbing to its parent
    Replay,         // forward re-run from cell 1 after a successful search
};

} // namespace

LimitedAutomaton domla_to_twdfa(const LimitedAutomaton& la) {
    if (!validate(la).empty())
        throw std::invalid_argument("conversion requires a well-formed machine");
    VariantProfile profile = classify(la);
    if (!profile.deterministic || !profile.structurally_once_marking)
        throw std::invalid_argument("conversion requires a deterministic once-marking machine");

    const int qI = la.initial_state();
    const int lend = la.left_end_index();
    const int rend = la.right_end_index();

    std::vector<MarkRecord> recs;
    std::map<std::pair<int, int>, int> rec_id;
    la.for_each_transition([&](int q, int s, const Step& st) {
        if (la.symbol(s).kind == SymbolKind::Input && st.write != s) {
            rec_id.emplace(std::pair{q, s}, static_cast<int>(recs.size()));
            recs.push_back({q, s});
        }
    });

    std::vector<int> scannable;
    for (const std::string& l : la.input_letters())
        scannable.push_back(la.input_symbol_index(l));
    scannable.push_back(lend);
    scannable.push_back(rend);

    std::vector<int> marked_of(static_cast<size_t>(la.num_symbols()), -1);
    for (int s = 0; s < la.num_symbols(); ++s)
        if (la.symbol(s).kind == SymbolKind::Input)
            marked_of[static_cast<size_t>(s)] =
                la.symbol_index(TapeSymbol::marked(la.symbol(s).letter));

    auto sole = [&](int q, int s) -> const Step* {
        const auto& bucket = la.steps(q, s);
        return bucket.empty() ? nullptr : &bucket.front();
    };
    // smallest state above floor whose step on s preserves s, enters u, moves d
    auto candidate = [&](int u, int s, int d, int floor) {
        for (int p = floor + 1; p < la.num_states(); ++p) {
            const Step* st = sole(p, s);
            if (st && st->write == s && st->next == u && st->dir == d) return p;
        }
        return -1;
    };

    using Key = std::array<int, 4>; // phase, working state, suspended state, mark id
    using Move = std::pair<int, Key>;

    // descend into tree node (p, current cell): enumerate its left side first,
    // except from the left end-marker, whose nodes only have right-side children;
    // nodes in the initial state get the cell-1 test before anything else
    auto enter_node = [&](int p, int s, int susp, int rc) -> Move {
        if (s == lend) return {+1, Key{ProbeRight, p, susp, rc}};
        if (p == qI) return {-1, Key{PeekLeft, -1, susp, rc}};
        return {-1, Key{ProbeLeft, p, susp, rc}};
    };

    // node (u, current cell) is used up: hand over to its next sibling, or to
    // the parent's right probe once the parent's left side is done, or climb
    auto exhausted = [&](int u, int s, int susp, int rc) -> std::optional<Move> {
        const MarkRecord& rec = recs[static_cast<size_t>(rc)];
        if (u == rec.state && s == rec.letter) {
            // the root itself: the whole tree failed, so the current cell is
            // not the marked one and the suspended state reads a plain letter
            const Step* st = sole(susp, s);
            if (st && st->write == s) return Move{st->dir, Key{AfterMark, st->next, -1, rc}};
            return std::nullopt;
        }
        const Step* fwd = sole(u, s);
        if (!fwd || fwd->write != s) return std::nullopt;
        if (s == lend && fwd->dir < 0) return std::nullopt;
        if (s == rend && fwd->dir > 0) return std::nullopt;
        int sib = candidate(fwd->next, s, fwd->dir, u);
        if (sib >= 0) return enter_node(sib, s, susp, rc);
        if (fwd->dir > 0) return Move{+1, Key{PassRight, fwd->next, susp, rc}};
        return Move{-1, Key{Ascend, fwd->next, susp, rc}};
    };

    auto composed = [&](const Key& k, int s) -> std::optional<Move> {
        auto [phase, a, susp, rc] = k;
        switch (phase) {
        case BeforeMark: {
            const Step* st = sole(a, s);
            if (!st) return std::nullopt;
            if (s == lend && st->dir < 0) return std::nullopt;
            if (st->write == s) return Move{st->dir, Key{BeforeMark, st->next, -1, -1}};
            return Move{st->dir, Key{AfterMark, st->next, -1, rec_id.at({a, s})}};
        }
        case AfterMark: {
            const MarkRecord& rec = recs[static_cast<size_t>(rc)];
            if (s == rec.letter) return enter_node(rec.state, s, a, rc);
            const Step* st = sole(a, s);
            if (!st || st->write != s) return std::nullopt;
            if (s == lend && st->dir < 0) return std::nullopt;
            return Move{st->dir, Key{AfterMark, st->next, -1, rc}};
        }
        case PeekLeft: {
            if (s == lend) return Move{+1, Key{Replay, qI, susp, rc}};
            if (s == rend) return std::nullopt;
            // not cell 1: the peeked cell doubles as the node's left probe
            int p = candidate(qI, s, +1, -1);
            if (p >= 0) return enter_node(p, s, susp, rc);
            return Move{+1, Key{PassRight, qI, susp, rc}};
        }
        case ProbeLeft: {
            if (s == rend) return std::nullopt;
            int p = candidate(a, s, +1, -1);
            if (p >= 0) return enter_node(p, s, susp, rc);
            return Move{+1, Key{PassRight, a, susp, rc}};
        }
        case PassRight: {
            if (s == lend) return std::nullopt;
            // no cell right of the end-marker: the node is exhausted in place
            if (s == rend) return exhausted(a, s, susp, rc);
            return Move{+1, Key{ProbeRight, a, susp, rc}};
        }
        case ProbeRight: {
            if (s == lend) return std::nullopt;
            int p = candidate(a, s, -1, -1);
            if (p >= 0) return enter_node(p, s, susp, rc);
            return Move{-1, Key{Ascend, a, susp, rc}};
        }
        case Ascend:
            return exhausted(a, s, susp, rc);
        case Replay: {
            const MarkRecord& rec = recs[static_cast<size_t>(rc)];
            if (a == rec.state && s == rec.letter) {
                // the replay reached the marking configuration, so this is the
                // marked cell and the suspended state reads the marked letter
                int ms = marked_of[static_cast<size_t>(s)];
                const Step* st = ms >= 0 ? sole(susp, ms) : nullptr;
                if (st && st->write == ms)
                    return Move{st->dir, Key{AfterMark, st->next, -1, rc}};
                return std::nullopt;
            }
            const Step* fwd = sole(a, s);
            if (!fwd || fwd->write != s) return std::nullopt;
            if (s == lend && fwd->dir < 0) return std::nullopt;
            return Move{fwd->dir, Key{Replay, fwd->next, susp, rc}};
        }
        default:
            return std::nullopt;
        }
    };

    auto name_of = [](const Key& k) -> std::string {
        auto [phase, a, susp, rc] = k;
        std::string tail = std::to_string(a) + "_" + std::to_string(susp) + "_m" + std::to_string(rc);
        switch (phase) {
        case BeforeMark: return "bf" + std::to_string(a);
        case AfterMark: return "af" + std::to_string(a) + "_m" + std::to_string(rc);
        case PeekLeft: return "pk" + std::to_string(susp) + "_m" + std::to_string(rc);
        case ProbeLeft: return "pl" + tail;
        case PassRight: return "ps" + tail;
        case ProbeRight: return "pr" + tail;
        case Ascend: return "as" + tail;
        default: return "rp" + tail;
        }
    };

    LimitedAutomaton::Builder b;
    for (const std::string& l : la.input_letters()) b.add_input_letter(l);

    std::map<Key, int> ids;
    std::vector<Key> keys;
    auto intern = [&](const Key& k) {
        auto it = ids.find(k);
        if (it != ids.end()) return it->second;
        int id = b.add_state(name_of(k));
        ids.emplace(k, id);
        keys.push_back(k);
        return id;
    };

    intern(Key{BeforeMark, qI, -1, -1});
    b.set_initial(0);
    for (size_t i = 0; i < keys.size(); ++i) {
        const Key k = keys[i]; // copy: keys grows below
        for (int s : scannable) {
            auto mv = composed(k, s);
            if (!mv) continue;
            int tgt = intern(mv->second);
            b.add_transition(static_cast<int>(i), la.symbol(s), tgt, mv->first);
        }
    }
    for (size_t i = 0; i < keys.size(); ++i)
        if ((keys[i][0] == BeforeMark || keys[i][0] == AfterMark) && la.is_final(keys[i][1]))
            b.mark_final(static_cast<int>(i));

    return b.build();
}

} // namespace la1
