#include "la1/format.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace la1 {

namespace {

std::string locate(const std::string& msg, int line, int column) {
    if (line <= 0) return msg;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg;
}

}  // namespace

ParseError::ParseError(const std::string& message, int line_, int column_)
    : std::runtime_error(locate(message, line_, column_)), line(line_), column(column_) {}

namespace {

struct Token {
    std::string text;
    int column = 1;
};

bool blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

bool all_blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), blank);
}

int first_column(const std::string& s) {
    size_t i = 0;
    while (i < s.size() && blank(s[i])) ++i;
    return static_cast<int>(i) + 1;
}

// whitespace-separated tokens; base is the column of s[0]
std::vector<Token> split_words(const std::string& s, int base) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && blank(s[i])) ++i;
        if (i >= s.size()) break;
        size_t j = i;
        while (j < s.size() && !blank(s[j])) ++j;
        out.push_back({s.substr(i, j - i), base + static_cast<int>(i)});
        i = j;
    }
    return out;
}

// comma-separated pieces, trimmed; empty pieces are kept so "q,,p" is caught
std::vector<Token> split_commas(const std::string& s, int base) {
    std::vector<Token> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i < s.size() && s[i] != ',') continue;
        size_t a = start;
        size_t b = i;
        while (a < b && blank(s[a])) ++a;
        while (b > a && blank(s[b - 1])) --b;
        out.push_back({s.substr(a, b - a), base + static_cast<int>(a)});
        start = i + 1;
    }
    return out;
}

struct Directive {
    std::vector<Token> tokens;
    int line = 0;
    int column = 1;  // column just past the colon
};

struct TransitionLine {
    std::string text;
    int line = 0;
};

int parse_direction(const Token& t, int line) {
    if (t.text == "+1") return 1;
    if (t.text == "-1") return -1;
    throw ParseError("malformed direction '" + t.text + "'", line, t.column);
}

}  // namespace

AnyMachine parse_machine(const std::string& text) {
    std::vector<std::string> raw;
    {
        std::string l;
        std::istringstream in(text);
        while (std::getline(in, l)) raw.push_back(l);
    }

    static const std::set<std::string> known = {"kind",    "states", "input",
                                                "work",    "initial", "final"};
    std::map<std::string, Directive> directives;
    std::vector<TransitionLine> transitions;

    for (size_t i = 0; i < raw.size(); ++i) {
        int lineno = static_cast<int>(i) + 1;
        std::string line = raw[i];
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (all_blank(line)) continue;
        if (line.find("->") != std::string::npos) {
            transitions.push_back({line, lineno});
            continue;
        }
        size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("unrecognized line", lineno, first_column(line));
        std::string name = line.substr(0, colon);
        int name_col = first_column(name);
        while (!name.empty() && blank(name.front())) name.erase(name.begin());
        while (!name.empty() && blank(name.back())) name.pop_back();
        if (!known.count(name))
            throw ParseError("unknown declaration '" + name + "'", lineno, name_col);
        if (directives.count(name))
            throw ParseError("duplicate declaration of '" + name + "'", lineno, name_col);
        Directive d;
        d.line = lineno;
        d.column = static_cast<int>(colon) + 2;
        d.tokens = split_words(line.substr(colon + 1), d.column);
        directives[name] = std::move(d);
    }

    auto need = [&](const char* name) -> const Directive& {
        auto it = directives.find(name);
        if (it == directives.end())
            throw ParseError(std::string("missing ") + name + " declaration", 0, 0);
        return it->second;
    };

    const Directive& kind_d = need("kind");
    if (kind_d.tokens.size() != 1)
        throw ParseError("kind takes one value", kind_d.line, kind_d.column);
    const std::string& kind = kind_d.tokens[0].text;
    if (kind != "LA1" && kind != "NFA" && kind != "DFA")
        throw ParseError("unknown machine kind '" + kind + "'", kind_d.line,
                         kind_d.tokens[0].column);

    const Directive& states_d = need("states");
    if (states_d.tokens.empty())
        throw ParseError("states declaration is empty", states_d.line, states_d.column);
    std::vector<std::string> states;
    std::map<std::string, int> state_id;
    for (const Token& t : states_d.tokens) {
        if (!is_identifier(t.text))
            throw ParseError("bad state name '" + t.text + "'", states_d.line, t.column);
        if (state_id.count(t.text))
            throw ParseError("duplicate state '" + t.text + "'", states_d.line, t.column);
        state_id[t.text] = static_cast<int>(states.size());
        states.push_back(t.text);
    }

    const Directive& input_d = need("input");
    std::vector<std::string> letters;
    std::set<std::string> letter_set;
    for (const Token& t : input_d.tokens) {
        if (!is_identifier(t.text))
            throw ParseError("bad input letter '" + t.text + "'", input_d.line, t.column);
        if (letter_set.count(t.text))
            throw ParseError("duplicate input letter '" + t.text + "'", input_d.line, t.column);
        letter_set.insert(t.text);
        letters.push_back(t.text);
    }

    std::vector<std::string> work_extra;
    std::set<std::string> work_set;
    if (auto it = directives.find("work"); it != directives.end()) {
        const Directive& work_d = it->second;
        if (kind != "LA1")
            throw ParseError("work declaration only applies to LA1 machines", work_d.line,
                             work_d.column);
        for (const Token& t : work_d.tokens) {
            if (!is_identifier(t.text))
                throw ParseError("bad work symbol '" + t.text + "'", work_d.line, t.column);
            if (letter_set.count(t.text))
                throw ParseError("work symbol '" + t.text + "' collides with an input letter",
                                 work_d.line, t.column);
            if (work_set.count(t.text))
                throw ParseError("duplicate work symbol '" + t.text + "'", work_d.line, t.column);
            work_set.insert(t.text);
            work_extra.push_back(t.text);
        }
    }

    const Directive& initial_d = need("initial");
    if (initial_d.tokens.size() != 1)
        throw ParseError("initial takes one state", initial_d.line, initial_d.column);
    auto lookup_state = [&](const Token& t, int line) {
        auto it = state_id.find(t.text);
        if (it == state_id.end())
            throw ParseError("unknown state '" + t.text + "'", line, t.column);
        return it->second;
    };
    int initial = lookup_state(initial_d.tokens[0], initial_d.line);

    std::vector<int> finals;
    if (auto it = directives.find("final"); it != directives.end())
        for (const Token& t : it->second.tokens)
            finals.push_back(lookup_state(t, it->second.line));

    if (kind == "LA1") {
        auto resolve = [&](const Token& t, int line) -> TapeSymbol {
            if (t.text == "|-") return TapeSymbol::left_end();
            if (t.text == "-|") return TapeSymbol::right_end();
            if (t.text.size() > 1 && t.text.back() == '\'') {
                std::string base = t.text.substr(0, t.text.size() - 1);
                if (letter_set.count(base)) return TapeSymbol::marked(base);
                throw ParseError("unknown symbol '" + t.text + "'", line, t.column);
            }
            if (letter_set.count(t.text)) return TapeSymbol::input(t.text);
            if (work_set.count(t.text)) return TapeSymbol::work(t.text);
            throw ParseError("unknown symbol '" + t.text + "'", line, t.column);
        };

        LimitedAutomaton::Builder b;
        for (const auto& s : states) b.add_state(s);
        for (const auto& l : letters) b.add_input_letter(l);
        for (const auto& w : work_extra) b.add_work_symbol(TapeSymbol::work(w));
        b.set_initial(initial);
        for (int q : finals) b.mark_final(q);

        for (const TransitionLine& tl : transitions) {
            size_t arrow = tl.text.find("->");
            auto lhs = split_commas(tl.text.substr(0, arrow), 1);
            auto rhs = split_commas(tl.text.substr(arrow + 2), static_cast<int>(arrow) + 3);
            if (lhs.size() != 2)
                throw ParseError("transition needs 'state, symbol' before '->'", tl.line,
                                 first_column(tl.text));
            int from = lookup_state(lhs[0], tl.line);
            TapeSymbol read = resolve(lhs[1], tl.line);
            if (rhs.size() == 2) {
                if (!read.is_end_marker())
                    throw ParseError("missing write symbol", tl.line, rhs[1].column);
                int to = lookup_state(rhs[0], tl.line);
                int dir = parse_direction(rhs[1], tl.line);
                b.add_transition(from, read, to, dir);
            } else if (rhs.size() == 3) {
                if (read.is_end_marker())
                    throw ParseError("end-marker reads take no write symbol", tl.line,
                                     rhs[1].column);
                TapeSymbol write = resolve(rhs[1], tl.line);
                if (write.is_end_marker())
                    throw ParseError("end-markers cannot be written", tl.line, rhs[1].column);
                int to = lookup_state(rhs[0], tl.line);
                int dir = parse_direction(rhs[2], tl.line);
                b.add_transition(from, read, to, write, dir);
            } else {
                throw ParseError("transition needs 'state, symbol, direction' after '->'",
                                 tl.line, first_column(tl.text));
            }
        }
        return b.build();
    }

    // NFA and DFA lines share the shape "q, a -> p"
    auto lookup_letter = [&](const Token& t, int line) {
        for (size_t i = 0; i < letters.size(); ++i)
            if (letters[i] == t.text) return static_cast<int>(i);
        throw ParseError("unknown symbol '" + t.text + "'", line, t.column);
    };

    struct Edge {
        int from, letter, to, line, column;
    };
    std::vector<Edge> edges;
    for (const TransitionLine& tl : transitions) {
        size_t arrow = tl.text.find("->");
        auto lhs = split_commas(tl.text.substr(0, arrow), 1);
        auto rhs = split_commas(tl.text.substr(arrow + 2), static_cast<int>(arrow) + 3);
        if (lhs.size() != 2)
            throw ParseError("transition needs 'state, letter' before '->'", tl.line,
                             first_column(tl.text));
        if (rhs.size() != 1)
            throw ParseError("transition needs one target state after '->'", tl.line,
                             first_column(tl.text));
        edges.push_back({lookup_state(lhs[0], tl.line), lookup_letter(lhs[1], tl.line),
                         lookup_state(rhs[0], tl.line), tl.line, lhs[0].column});
    }

    if (kind == "NFA") {
        OneWayNfa nfa;
        nfa.states = states;
        nfa.letters = letters;
        nfa.initial = initial;
        nfa.finals.assign(states.size(), false);
        for (int q : finals) nfa.finals[q] = true;
        nfa.delta.assign(states.size(), std::vector<std::vector<int>>(letters.size()));
        for (const Edge& e : edges) nfa.delta[e.from][e.letter].push_back(e.to);
        for (auto& row : nfa.delta)
            for (auto& bucket : row) {
                std::sort(bucket.begin(), bucket.end());
                bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
            }
        return nfa;
    }

    OneWayDfa dfa;
    dfa.states = states;
    dfa.letters = letters;
    dfa.initial = initial;
    dfa.finals.assign(states.size(), false);
    for (int q : finals) dfa.finals[q] = true;
    dfa.delta.assign(states.size(), std::vector<int>(letters.size(), -1));
    for (const Edge& e : edges) {
        if (dfa.delta[e.from][e.letter] != -1)
            throw ParseError("duplicate transition for state '" + states[e.from] + "' on '" +
                                 letters[e.letter] + "'",
                             e.line, e.column);
        dfa.delta[e.from][e.letter] = e.to;
    }
    return dfa;
}

namespace {

void emit_header(std::ostringstream& out, const std::string& kind,
                 const std::vector<std::string>& states, const std::vector<std::string>& letters,
                 const std::string& work, const std::string& initial,
                 const std::string& final_list) {
    out << "kind: " << kind << "\nstates:";
    for (const auto& s : states) out << " " << s;
    out << "\ninput:";
    for (const auto& l : letters) out << " " << l;
    if (!work.empty()) out << "\nwork:" << work;
    out << "\ninitial: " << initial;
    if (!final_list.empty()) out << "\nfinal:" << final_list;
    out << "\n\n";
}

std::string final_names(const std::vector<std::string>& states, const std::vector<bool>& finals) {
    std::string out;
    for (size_t q = 0; q < states.size(); ++q)
        if (finals[q]) out += " " + states[q];
    return out;
}

}  // namespace

std::string serialize(const LimitedAutomaton& la) {
    std::string work;
    for (const TapeSymbol& s : la.work_alphabet())
        if (s.kind == SymbolKind::Work) work += " " + s.letter;
    std::string fin;
    for (int q = 0; q < la.num_states(); ++q)
        if (la.is_final(q)) fin += " " + la.state_name(q);

    std::ostringstream out;
    emit_header(out, "LA1", la.state_names(), la.input_letters(), work,
                la.state_name(la.initial_state()), fin);
    la.for_each_transition([&](int q, int s, const Step& st) {
        const TapeSymbol& read = la.symbol(s);
        out << la.state_name(q) << ", " << read.text() << " -> " << la.state_name(st.next);
        if (!read.is_end_marker()) out << ", " << la.symbol(st.write).text();
        out << ", " << (st.dir > 0 ? "+1" : "-1") << "\n";
    });
    return out.str();
}

std::string serialize(const OneWayNfa& nfa) {
    std::ostringstream out;
    emit_header(out, "NFA", nfa.states, nfa.letters, "", nfa.states[nfa.initial],
                final_names(nfa.states, nfa.finals));
    for (size_t q = 0; q < nfa.delta.size(); ++q)
        for (size_t l = 0; l < nfa.letters.size(); ++l)
            for (int t : nfa.delta[q][l])
                out << nfa.states[q] << ", " << nfa.letters[l] << " -> " << nfa.states[t] << "\n";
    return out.str();
}

std::string serialize(const OneWayDfa& dfa) {
    std::ostringstream out;
    emit_header(out, "DFA", dfa.states, dfa.letters, "", dfa.states[dfa.initial],
                final_names(dfa.states, dfa.finals));
    for (size_t q = 0; q < dfa.delta.size(); ++q)
        for (size_t l = 0; l < dfa.letters.size(); ++l)
            if (dfa.delta[q][l] >= 0)
                out << dfa.states[q] << ", " << dfa.letters[l] << " -> "
                    << dfa.states[dfa.delta[q][l]] << "\n";
    return out.str();
}

std::string serialize(const AnyMachine& m) {
    return std::visit([](const auto& v) { return serialize(v); }, m);
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string dot_graph(const std::vector<std::string>& states, const std::vector<bool>& finals,
                      int initial, const std::map<std::pair<int, int>, std::vector<std::string>>& edges) {
    std::ostringstream out;
    out << "digraph machine {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    out << "  __start [shape=point];\n";
    for (size_t q = 0; q < states.size(); ++q) {
        out << "  \"" << dot_escape(states[q]) << "\"";
        if (finals[q]) out << " [shape=doublecircle]";
        out << ";\n";
    }
    out << "  __start -> \"" << dot_escape(states[initial]) << "\";\n";
    for (const auto& [key, labels] : edges) {
        out << "  \"" << dot_escape(states[key.first]) << "\" -> \""
            << dot_escape(states[key.second]) << "\" [label=\"";
        for (size_t i = 0; i < labels.size(); ++i) {
            if (i) out << "\\n";
            out << dot_escape(labels[i]);
        }
        out << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace

std::string export_dot(const LimitedAutomaton& la) {
    std::map<std::pair<int, int>, std::vector<std::string>> edges;
    std::vector<bool> finals(la.num_states());
    for (int q = 0; q < la.num_states(); ++q) finals[q] = la.is_final(q);
    la.for_each_transition([&](int q, int s, const Step& st) {
        const TapeSymbol& read = la.symbol(s);
        std::string label = read.text();
        if (!read.is_end_marker()) label += " / " + la.symbol(st.write).text();
        label += ", ";
        label += st.dir > 0 ? "+1" : "-1";
        edges[{q, st.next}].push_back(label);
    });
    return dot_graph(la.state_names(), finals, la.initial_state(), edges);
}

std::string export_dot(const OneWayNfa& nfa) {
    std::map<std::pair<int, int>, std::vector<std::string>> edges;
    for (size_t q = 0; q < nfa.delta.size(); ++q)
        for (size_t l = 0; l < nfa.letters.size(); ++l)
            for (int t : nfa.delta[q][l])
                edges[{static_cast<int>(q), t}].push_back(nfa.letters[l]);
    return dot_graph(nfa.states, nfa.finals, nfa.initial, edges);
}

std::string export_dot(const OneWayDfa& dfa) {
    std::map<std::pair<int, int>, std::vector<std::string>> edges;
    for (size_t q = 0; q < dfa.delta.size(); ++q)
        for (size_t l = 0; l < dfa.letters.size(); ++l)
            if (dfa.delta[q][l] >= 0)
                edges[{static_cast<int>(q), dfa.delta[q][l]}].push_back(dfa.letters[l]);
    return dot_graph(dfa.states, dfa.finals, dfa.initial, edges);
}

std::string export_dot(const AnyMachine& m) {
    return std::visit([](const auto& v) { return export_dot(v); }, m);
}

}  // namespace la1
