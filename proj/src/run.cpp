#include "la1/run.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace la1 {

namespace {

// Cells packed as symbol*2 | fresh so the memo key is exactly (state, head, tape).
struct Packed {
    int32_t state;
    int32_t head;
    std::vector<uint16_t> cells;

    bool operator==(const Packed&) const = default;
};

struct PackedHash {
    size_t operator()(const Packed& p) const noexcept {
        uint64_t h = fnv1a64(p.cells.data(), p.cells.size() * sizeof(uint16_t));
        h = fnv1a64(&p.state, sizeof p.state, h);
        h = fnv1a64(&p.head, sizeof p.head, h);
        return static_cast<size_t>(h);
    }
};

Packed pack(const Configuration& c) {
    Packed p;
    p.state = c.state;
    p.head = c.head;
    p.cells.reserve(c.tape.size());
    for (const Cell& cell : c.tape)
        p.cells.push_back(static_cast<uint16_t>(cell.symbol * 2 + (cell.fresh ? 1 : 0)));
    return p;
}

Configuration unpack(const Packed& p) {
    Configuration c;
    c.state = p.state;
    c.head = p.head;
    c.tape.reserve(p.cells.size());
    for (uint16_t v : p.cells) c.tape.push_back({v >> 1, (v & 1) != 0});
    return c;
}

// Applicable steps at a packed configuration, as (step, resulting packed config).
template <typename Fn>
void for_each_successor(const LimitedAutomaton& la, const Packed& p, Fn&& fn) {
    if (p.head >= static_cast<int>(p.cells.size())) return;
    uint16_t cell = p.cells[p.head];
    int sym = cell >> 1;
    bool fresh = (cell & 1) != 0;
    for (const Step& st : la.steps(p.state, sym)) {
        if (!fresh && st.write != sym) continue;
        if (la.symbol(sym).is_end_marker() && st.write != sym) continue;
        if (p.head == 0 && st.dir < 0) continue;
        Packed q;
        q.state = st.next;
        q.head = p.head + st.dir;
        q.cells = p.cells;
        q.cells[p.head] = static_cast<uint16_t>(st.write * 2);
        fn(st, std::move(q));
    }
}

std::vector<int> check_word(const LimitedAutomaton& la, const std::vector<int>& word) {
    for (int s : word) {
        if (s < 0 || s >= la.num_symbols() || la.symbol(s).kind != SymbolKind::Input)
            throw std::invalid_argument("word contains a symbol outside the input alphabet");
    }
    return word;
}

Packed initial_packed(const LimitedAutomaton& la, const std::vector<int>& word) {
    Packed p;
    p.state = la.initial_state();
    p.head = 1;
    p.cells.reserve(word.size() + 2);
    p.cells.push_back(static_cast<uint16_t>(la.left_end_index() * 2 + 1));
    for (int s : word) p.cells.push_back(static_cast<uint16_t>(s * 2 + 1));
    p.cells.push_back(static_cast<uint16_t>(la.right_end_index() * 2 + 1));
    return p;
}

struct Explorer {
    const LimitedAutomaton& la;
    size_t cap;
    std::vector<Packed> nodes;
    std::vector<int> parent;
    std::unordered_map<Packed, int, PackedHash> seen;

    Explorer(const LimitedAutomaton& l, size_t c) : la(l), cap(c) {}

    int intern(Packed p, int par) {
        auto it = seen.find(p);
        if (it != seen.end()) return -1;
        if (nodes.size() >= cap)
            throw std::runtime_error("configuration limit exceeded while exploring");
        int id = static_cast<int>(nodes.size());
        seen.emplace(p, id);
        nodes.push_back(std::move(p));
        parent.push_back(par);
        return id;
    }

    Trace path_to(int id) const {
        std::vector<int> chain;
        for (int i = id; i >= 0; i = parent[i]) chain.push_back(i);
        std::reverse(chain.begin(), chain.end());
        Trace t;
        for (int i : chain) t.configs.push_back(unpack(nodes[i]));
        return t;
    }
};

} // namespace

Configuration initial_configuration(const LimitedAutomaton& la, const std::vector<int>& word) {
    return unpack(initial_packed(la, check_word(la, word)));
}

std::vector<Configuration> step_successors(const LimitedAutomaton& la, const Configuration& c) {
    std::vector<Configuration> out;
    for_each_successor(la, pack(c), [&](const Step&, Packed q) { out.push_back(unpack(q)); });
    return out;
}

RunVerdict decide_acceptance(const LimitedAutomaton& la, const std::vector<int>& word,
                             const EngineLimits& limits) {
    check_word(la, word);
    Explorer ex(la, limits.max_configurations);
    ex.intern(initial_packed(la, word), -1);
    RunVerdict v;
    for (size_t i = 0; i < ex.nodes.size(); ++i) {
        const Packed cur = ex.nodes[i]; // copy: the vector may grow below
        if (cur.head >= static_cast<int>(cur.cells.size())) {
            if (la.is_final(cur.state)) {
                v.accepted = true;
                v.certificate = ex.path_to(static_cast<int>(i));
                break;
            }
            continue;
        }
        for_each_successor(la, cur, [&](const Step&, Packed q) {
            ex.intern(std::move(q), static_cast<int>(i));
        });
    }
    v.explored = ex.nodes.size();
    return v;
}

RunVerdict decide_acceptance(const LimitedAutomaton& la, const std::string& word,
                             const EngineLimits& limits) {
    std::vector<int> w;
    for (int letter : parse_word(la.input_letters(), word))
        w.push_back(la.input_symbol_index(la.input_letters()[letter]));
    return decide_acceptance(la, w, limits);
}

DetRun trace_deterministic(const LimitedAutomaton& la, const std::vector<int>& word,
                           size_t max_steps) {
    check_word(la, word);
    DetRun run;
    std::unordered_set<Packed, PackedHash> seen;
    Packed cur = initial_packed(la, word);
    for (size_t step = 0;; ++step) {
        run.trace.configs.push_back(unpack(cur));
        if (cur.head >= static_cast<int>(cur.cells.size())) {
            run.accepted = la.is_final(cur.state);
            return run;
        }
        if (!seen.insert(cur).second) {
            run.loop = LoopReport{LoopReport::Reason::Repeat, step};
            return run;
        }
        if (step >= max_steps) {
            run.loop = LoopReport{LoopReport::Reason::Budget, step};
            return run;
        }
        std::optional<Packed> next;
        int choices = 0;
        for_each_successor(la, cur, [&](const Step&, Packed q) {
            ++choices;
            next = std::move(q);
        });
        if (choices > 1)
            throw std::invalid_argument("trace_deterministic needs a deterministic machine");
        if (!next) return run; // halted inside the tape: reject
        cur = std::move(*next);
    }
}

bool accepts_deterministic(const LimitedAutomaton& la, const std::vector<int>& word) {
    const size_t len = word.size();
    // one run visits at most num_states * positions * flag-prefix variants
    const size_t budget = static_cast<size_t>(la.num_states()) * (len + 3) * (len + 3) + 8;
    Packed cur = initial_packed(la, word);
    for (size_t step = 0; step <= budget; ++step) {
        if (cur.head >= static_cast<int>(cur.cells.size())) return la.is_final(cur.state);
        std::optional<Packed> next;
        int choices = 0;
        for_each_successor(la, cur, [&](const Step&, Packed q) {
            ++choices;
            next = std::move(q);
        });
        if (choices > 1)
            throw std::invalid_argument("accepts_deterministic needs a deterministic machine");
        if (!next) return false;
        cur = std::move(*next);
    }
    return false; // budget exhausted: the unique run loops
}

DisciplineReport verify_marking_discipline(const LimitedAutomaton& la,
                                           const std::vector<int>& word,
                                           const EngineLimits& limits) {
    check_word(la, word);
    DisciplineReport rep;
    Explorer ex(la, limits.max_configurations);
    ex.intern(initial_packed(la, word), -1);

    auto marked_cells = [&la](const Packed& p) {
        int count = 0;
        for (uint16_t c : p.cells)
            if (la.symbol(c >> 1).kind == SymbolKind::Marked) ++count;
        return count;
    };
    auto fail = [&](DisciplineCheck& check, std::string msg, Trace witness) {
        if (!check.holds) return;
        check.holds = false;
        check.message = std::move(msg);
        check.witness = std::move(witness);
    };

    for (size_t i = 0; i < ex.nodes.size(); ++i) {
        if (!rep.once_marking.holds && !rep.always_marking.holds) break;
        const Packed cur = ex.nodes[i];
        if (cur.head >= static_cast<int>(cur.cells.size())) {
            if (la.is_final(cur.state) && marked_cells(cur) == 0)
                fail(rep.once_marking, "accepting run marks no cell",
                     ex.path_to(static_cast<int>(i)));
            continue;
        }
        uint16_t cell = cur.cells[cur.head];
        const TapeSymbol& read = la.symbol(cell >> 1);
        bool fresh = (cell & 1) != 0;
        for_each_successor(la, cur, [&](const Step& st, Packed q) {
            const TapeSymbol& write = la.symbol(st.write);
            bool marking = read.kind == SymbolKind::Input &&
                           write.kind == SymbolKind::Marked && write.letter == read.letter;
            auto witness = [&]() {
                Trace t = ex.path_to(static_cast<int>(i));
                t.configs.push_back(unpack(q));
                return t;
            };
            if (st.write != static_cast<int>(cell >> 1)) {
                if (!marking)
                    fail(rep.once_marking,
                         "rewrite is not a marking: " + read.text() + " -> " + write.text(),
                         witness());
                else if (marked_cells(cur) >= 1)
                    fail(rep.once_marking, "a second cell is marked", witness());
            }
            if (fresh && read.kind == SymbolKind::Input && !marking)
                fail(rep.always_marking,
                     "first visit writes " + write.text() + " over " + read.text(), witness());
            ex.intern(std::move(q), static_cast<int>(i));
        });
    }
    rep.explored = ex.nodes.size();
    return rep;
}

} // namespace la1
