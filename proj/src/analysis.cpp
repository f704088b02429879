#include "la1/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "la1/convert.hpp"
#include "la1/witnesses.hpp"

namespace la1 {

namespace {

std::vector<std::string> input_letters_of(const AnyMachine& m) {
    if (const auto* la = std::get_if<LimitedAutomaton>(&m)) return la->input_letters();
    if (const auto* nfa = std::get_if<OneWayNfa>(&m)) return nfa->letters;
    return std::get<OneWayDfa>(m).letters;
}

// Membership test over canonical letter ids (positions in the sorted name list).
std::function<bool(const std::vector<int>&)> acceptor(const AnyMachine& m,
                                                      const std::vector<std::string>& canon,
                                                      const EngineLimits& limits) {
    auto translate = [](std::vector<int> table) {
        return [table = std::move(table)](const std::vector<int>& w) {
            std::vector<int> t;
            t.reserve(w.size());
            for (int c : w) t.push_back(table[static_cast<size_t>(c)]);
            return t;
        };
    };
    if (const auto* la = std::get_if<LimitedAutomaton>(&m)) {
        std::vector<int> table;
        for (const std::string& l : canon) table.push_back(la->input_symbol_index(l));
        bool det = classify(*la).deterministic;
        return [la, tr = translate(std::move(table)), det, limits](const std::vector<int>& w) {
            if (det) return accepts_deterministic(*la, tr(w));
            return decide_acceptance(*la, tr(w), limits).accepted;
        };
    }
    if (const auto* nfa = std::get_if<OneWayNfa>(&m)) {
        std::vector<int> table;
        for (const std::string& l : canon) table.push_back(nfa->letter_index(l));
        return [nfa, tr = translate(std::move(table))](const std::vector<int>& w) {
            return nfa->accepts(tr(w));
        };
    }
    const auto* dfa = &std::get<OneWayDfa>(m);
    std::vector<int> table;
    for (const std::string& l : canon) table.push_back(dfa->letter_index(l));
    return [dfa, tr = translate(std::move(table))](const std::vector<int>& w) {
        return dfa->accepts(tr(w));
    };
}

constexpr size_t kSat = std::numeric_limits<size_t>::max();

size_t sat_mul(size_t a, size_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSat / b) return kSat;
    return a * b;
}

size_t sat_add(size_t a, size_t b) { return a > kSat - b ? kSat : a + b; }

size_t sat_pow(size_t base, long long exp) {
    size_t v = 1;
    for (long long i = 0; i < exp; ++i) v = sat_mul(v, base);
    return v;
}

std::string format_count(size_t v) {
    return v == kSat ? "2^64 or more" : std::to_string(v);
}

std::string cell(const std::optional<size_t>& v) {
    return v ? std::to_string(*v) : "-";
}

} // namespace

std::optional<std::string> language_equiv_bounded(const AnyMachine& a, const AnyMachine& b,
                                                  int max_len, const EngineLimits& limits) {
    std::vector<std::string> letters = input_letters_of(a);
    std::vector<std::string> other = input_letters_of(b);
    std::sort(letters.begin(), letters.end());
    std::sort(other.begin(), other.end());
    if (letters != other) throw std::invalid_argument("input alphabets differ");
    auto fa = acceptor(a, letters, limits);
    auto fb = acceptor(b, letters, limits);
    int k = static_cast<int>(letters.size());
    for (int len = 0; len <= max_len; ++len) {
        if (len > 0 && k == 0) break;
        std::vector<int> w(static_cast<size_t>(len), 0);
        while (true) {
            if (fa(w) != fb(w)) return render_word(letters, w);
            int i = len - 1;
            while (i >= 0 && w[static_cast<size_t>(i)] == k - 1) w[static_cast<size_t>(i--)] = 0;
            if (i < 0) break;
            ++w[static_cast<size_t>(i)];
        }
    }
    return std::nullopt;
}

GapReport gap_experiment(const std::string& family, int max_n, int max_len) {
    if (family != "kn" && family != "jn") throw std::invalid_argument("family must be kn or jn");
    if (max_n < 1) throw std::invalid_argument("max_n must be at least 1");
    const bool kn = family == "kn";
    const int conv_cap = kn ? 2 : 3; // one-way conversions get expensive fast
    const int ref_cap = kn ? 3 : 4;  // reference machines stay cheap a bit longer
    const int fool_cap = 4;
    const int equiv_cap = 2; // word-by-word generator vs reference cross-check

    GapReport rep;
    rep.family = family;
    rep.max_len = max_len;
    for (int n = 1; n <= max_n; ++n) {
        auto t0 = std::chrono::steady_clock::now();
        GapRow row;
        row.n = n;
        LimitedAutomaton la = kn ? gen_kn_omla(n) : gen_jn_damla(n);
        size_t states = static_cast<size_t>(la.num_states());
        row.la_states = states;
        auto check = [&](const std::string& what, bool ok, std::string detail) {
            rep.bounds.push_back(
                {family + " n=" + std::to_string(n) + ": " + what, ok, std::move(detail)});
        };

        std::optional<OneWayDfa> min_pipe;
        if (n <= conv_cap) {
            try {
                OneWayNfa nfa = la_to_ownfa(la);
                row.nfa_states = static_cast<size_t>(nfa.num_states());
                OneWayDfa dfa = determinize(nfa);
                row.dfa_states = static_cast<size_t>(dfa.num_states());
                min_pipe = minimize_dfa(dfa);
                row.min_dfa_states = static_cast<size_t>(min_pipe->num_states());
            } catch (const std::runtime_error& e) {
                row.notes.push_back(std::string("conversion skipped: ") + e.what());
            }
        } else {
            row.notes.push_back("conversion skipped: n beyond the feasibility cap");
        }

        std::optional<OneWayDfa> min_ref;
        if (n <= ref_cap) {
            min_ref = minimize_dfa(kn ? kn_reference_dfa(n) : jn_reference_dfa(n));
            if (!row.min_dfa_states) {
                row.min_dfa_states = static_cast<size_t>(min_ref->num_states());
                row.notes.push_back("minimal size measured on the reference machine");
            }
        } else {
            row.notes.push_back("reference skipped: n beyond the feasibility cap");
        }

        if (min_pipe && min_ref)
            check("pipeline minimal machine matches the reference minimal machine",
                  min_pipe->num_states() == min_ref->num_states() &&
                      !dfa_equiv(*min_pipe, *min_ref),
                  std::to_string(min_pipe->num_states()) + " vs " +
                      std::to_string(min_ref->num_states()) + " states");
        if (min_ref && n <= equiv_cap) {
            int len = std::min(max_len, 12);
            auto cx = language_equiv_bounded(AnyMachine{la}, AnyMachine{*min_ref}, len);
            check("generator agrees with the reference on words up to length " +
                      std::to_string(len),
                  !cx, cx ? "counterexample " + *cx : "no counterexample");
        }

        if (row.min_dfa_states) {
            size_t need = kn ? sat_pow(2, 1 << n) : size_t{1} << n;
            check(kn ? "minimal deterministic size is at least 2^(2^n)"
                     : "minimal deterministic size is at least 2^n",
                  *row.min_dfa_states >= need,
                  std::to_string(*row.min_dfa_states) + " >= " + format_count(need));
        }
        if (row.dfa_states && row.min_dfa_states)
            check("minimization never grows the machine", *row.min_dfa_states <= *row.dfa_states,
                  cell(row.min_dfa_states) + " <= " + cell(row.dfa_states));
        if (row.nfa_states) {
            size_t bound = sat_mul(states, sat_pow(2, static_cast<long long>(states) *
                                                          static_cast<long long>(states)));
            check("one-way nondeterministic size within n * 2^(n^2) of the machine size",
                  *row.nfa_states <= bound,
                  std::to_string(*row.nfa_states) + " <= " + format_count(bound));
        }

        if (kn) {
            row.notes.push_back("always-marking conversion inapplicable: only one cell is marked");
            row.notes.push_back("two-way compilation inapplicable: the machine is nondeterministic");
        } else {
            row.notes.push_back("two-way compilation inapplicable: every cell is marked, not one");
            if (n <= conv_cap) {
                OneWayDfa am = amla_to_owdfa(la);
                row.am_dfa_states = static_cast<size_t>(am.num_states());
                size_t p2n = sat_pow(2, static_cast<long long>(states));
                size_t term = p2n == kSat ? kSat : p2n - 1;
                size_t bound = sat_add(
                    sat_mul(term, sat_pow(2, static_cast<long long>(states) *
                                                 static_cast<long long>(states))),
                    1);
                check("always-marking deterministic size within (2^n - 1) * 2^(n^2) + 1",
                      *row.am_dfa_states <= bound,
                      std::to_string(*row.am_dfa_states) + " <= " + format_count(bound));
                if (row.min_dfa_states)
                    check("always-marking conversion is no smaller than the minimal machine",
                          *row.am_dfa_states >= *row.min_dfa_states,
                          cell(row.am_dfa_states) + " >= " + cell(row.min_dfa_states));
                if (min_ref) {
                    OneWayDfa min_am = minimize_dfa(am);
                    check("always-marking conversion accepts the reference language",
                          min_am.num_states() == min_ref->num_states() &&
                              !dfa_equiv(min_am, *min_ref),
                          std::to_string(min_am.num_states()) + " vs " +
                              std::to_string(min_ref->num_states()) + " states");
                }
            } else {
                row.notes.push_back("always-marking conversion skipped: n beyond the feasibility cap");
            }
            if (row.dfa_states) {
                size_t bound = sat_mul(states, sat_pow(states + 1, static_cast<long long>(states)));
                check("deterministic pipeline size within n * (n+1)^n",
                      *row.dfa_states <= bound,
                      std::to_string(*row.dfa_states) + " <= " + format_count(bound));
            }
        }

        if (n <= fool_cap) {
            auto pairs = jn_fooling_set(n);
            FoolingOutcome fo = verify_fooling_set(
                [&](const std::string& w) { return kn ? kn_member(n, w) : jn_member(n, w); },
                pairs);
            if (fo.certified) row.fooling_lower_bound = fo.size;
            check("fooling set certifies the 2^n nondeterministic lower bound",
                  fo.certified && fo.size == size_t{1} << n,
                  fo.certified ? "certified size " + std::to_string(fo.size) : fo.message);
            if (row.fooling_lower_bound && row.nfa_states)
                check("fooling bound does not exceed the constructed nondeterministic size",
                      *row.fooling_lower_bound <= *row.nfa_states,
                      cell(row.fooling_lower_bound) + " <= " + cell(row.nfa_states));
        } else {
            row.notes.push_back("fooling set skipped: n beyond the feasibility cap");
        }

        rep.rows.push_back(std::move(row));
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        rep.runtimes_ms.emplace_back(family + " n=" + std::to_string(n), ms);
    }
    return rep;
}

std::string render_table(const GapReport& report) {
    std::ostringstream out;
    out << "family " << report.family << ", agreement checked up to length " << report.max_len
        << "\n\n";
    const char* headers[] = {"n",      "1-LA", "NFA",  "DFA",    "min-DFA",
                             "AM-DFA", "2DFA", "fooling"};
    std::vector<std::vector<std::string>> grid;
    for (const GapRow& r : report.rows)
        grid.push_back({std::to_string(r.n), cell(r.la_states), cell(r.nfa_states),
                        cell(r.dfa_states), cell(r.min_dfa_states), cell(r.am_dfa_states),
                        cell(r.twdfa_states), cell(r.fooling_lower_bound)});
    std::vector<size_t> width;
    for (size_t c = 0; c < 8; ++c) {
        size_t w = std::string(headers[c]).size();
        for (const auto& row : grid) w = std::max(w, row[c].size());
        width.push_back(w);
    }
    auto line = [&](const std::vector<std::string>& cells) {
        out << " ";
        for (size_t c = 0; c < 8; ++c)
            out << " " << std::left << std::setw(static_cast<int>(width[c])) << cells[c];
        out << "\n";
    };
    line({headers, headers + 8});
    for (size_t i = 0; i < grid.size(); ++i) {
        line(grid[i]);
        for (const std::string& note : report.rows[i].notes) out << "      . " << note << "\n";
    }
    out << "\nbounds:\n";
    for (const BoundCheck& b : report.bounds)
        out << "  [" << (b.holds ? "ok" : "FAIL") << "] " << b.description << " (" << b.detail
            << ")\n";
    out << "\nruntimes:\n";
    for (const auto& [label, ms] : report.runtimes_ms)
        out << "  " << label << ": " << std::fixed << std::setprecision(1) << ms << " ms\n";
    return out.str();
}

std::string report_json(const GapReport& report) {
    nlohmann::ordered_json out;
    out["family"] = report.family;
    out["max_len"] = report.max_len;
    out["rows"] = nlohmann::ordered_json::array();
    auto put = [](nlohmann::ordered_json& j, const char* key, const std::optional<size_t>& v) {
        if (v)
            j[key] = *v;
        else
            j[key] = nullptr;
    };
    for (const GapRow& r : report.rows) {
        nlohmann::ordered_json j;
        j["n"] = r.n;
        put(j, "la_states", r.la_states);
        put(j, "nfa_states", r.nfa_states);
        put(j, "dfa_states", r.dfa_states);
        put(j, "min_dfa_states", r.min_dfa_states);
        put(j, "am_dfa_states", r.am_dfa_states);
        put(j, "twdfa_states", r.twdfa_states);
        put(j, "fooling_lower_bound", r.fooling_lower_bound);
        j["notes"] = r.notes;
        out["rows"].push_back(std::move(j));
    }
    out["bounds"] = nlohmann::ordered_json::array();
    for (const BoundCheck& b : report.bounds) {
        nlohmann::ordered_json j;
        j["description"] = b.description;
        j["holds"] = b.holds;
        j["detail"] = b.detail;
        out["bounds"].push_back(std::move(j));
    }
    return out.dump(2) + "\n";
}

LimitedAutomaton random_domla(uint64_t seed, int state_budget) {
    if (state_budget < 2) throw std::invalid_argument("state budget must be at least 2");
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto roll = [&] { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); };

    int n = pick(2, state_budget);
    int pre = pick(1, n - 1); // states below stay before the mark, the rest after
    int mark_state = pick(0, pre - 1);
    int mark_letter = pick(0, 1);

    LimitedAutomaton::Builder b;
    for (int q = 0; q < n; ++q) b.add_state("q" + std::to_string(q));
    b.add_input_letter("a");
    b.add_input_letter("b");
    b.set_initial(pick(0, pre - 1));

    const std::string letters[] = {"a", "b"};
    auto any_state = [&] { return pick(0, n - 1); };
    auto post_state = [&] { return pick(pre, n - 1); };
    auto direction = [&] { return roll() < 0.5 ? +1 : -1; };

    // The pre phase scans strictly rightward, one visit per cell, so a
    // marking transition can only ever fire on a fresh cell. The two-way
    // compilation relies on that: a machine that walks back over visited
    // cells before marking can halt on a blocked rewrite, which no
    // finite-state simulation of this shape can detect.
    for (int q = 0; q < pre; ++q)
        for (int l = 0; l < 2; ++l) {
            double r = roll();
            bool forced = q == mark_state && l == mark_letter;
            if (!forced && r < 0.10) continue;
            bool mark = forced || r < 0.35;
            int target = mark ? post_state() : any_state();
            if (mark)
                b.add_transition(q, TapeSymbol::input(letters[l]), target,
                                 TapeSymbol::marked(letters[l]), +1);
            else
                b.add_transition(q, TapeSymbol::input(letters[l]), target, +1);
        }
    for (int q = pre; q < n; ++q)
        for (const TapeSymbol& s : {TapeSymbol::input("a"), TapeSymbol::input("b"),
                                    TapeSymbol::marked("a"), TapeSymbol::marked("b")}) {
            double r = roll();
            int target = post_state();
            int d = direction();
            if (r < 0.20) continue;
            b.add_transition(q, s, target, d);
        }
    for (int q = 0; q < n; ++q) {
        if (q >= pre) {
            double enter = roll();
            if (enter < 0.85) b.add_transition(q, TapeSymbol::left_end(), post_state(), +1);
        }
        double r = roll();
        int pre_target = any_state();
        int post_target = post_state();
        if (r < 0.20) continue;
        // pre states may only leave the tape at the right end-marker; turning
        // around there would revisit input cells
        if (q < pre)
            b.add_transition(q, TapeSymbol::right_end(), pre_target, +1);
        else
            b.add_transition(q, TapeSymbol::right_end(), post_target, r < 0.70 ? -1 : +1);
    }
    for (int q = 0; q < n; ++q)
        if (roll() < 1.0 / 3.0) b.mark_final(q);
    return b.build();
}

} // namespace la1
