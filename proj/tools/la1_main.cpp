// Command-line front end: every subcommand is a thin wrapper around one
// library operation. Exit codes: 0 success / Accept / Equal, 1 Reject /
// Counterexample / Violation, 2 usage, parse or validation problems.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "la1/analysis.hpp"
#include "la1/convert.hpp"
#include "la1/format.hpp"
#include "la1/machine.hpp"
#include "la1/run.hpp"
#include "la1/twoway.hpp"
#include "la1/witnesses.hpp"

namespace {

using nlohmann::ordered_json;

struct Usage {
    std::string message;
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Usage{"cannot open '" + path + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Usage{"cannot write '" + path + "'"};
    out << text;
}

la1::AnyMachine load_machine(const std::string& path) {
    return la1::parse_machine(read_input(path));
}

// Machines come out of the parser structurally sound, but 1-LA documents can
// still break the tape rules (writing end-markers is caught by the parser,
// mark/base mismatches are not expressible, so this mostly guards library
// preconditions for hand-edited files).
const la1::LimitedAutomaton& need_valid_la(const la1::AnyMachine& m, const char* op) {
    const auto* la = std::get_if<la1::LimitedAutomaton>(&m);
    if (!la) throw Usage{std::string(op) + " needs an LA1 machine"};
    auto diags = la1::validate(*la);
    if (!diags.empty()) {
        std::string msg = "machine fails validation:";
        for (const auto& d : diags) msg += "\n  " + d.invariant + ": " + d.detail;
        throw Usage{msg};
    }
    return *la;
}

std::vector<int> la_word(const la1::LimitedAutomaton& la, const std::string& word) {
    std::vector<int> out;
    for (int l : la1::parse_word(la.input_letters(), word))
        out.push_back(la.input_symbol_index(la.input_letters()[l]));
    return out;
}

std::string machine_kind(const la1::AnyMachine& m) {
    if (std::holds_alternative<la1::LimitedAutomaton>(m)) return "LA1";
    if (std::holds_alternative<la1::OneWayNfa>(m)) return "NFA";
    return "DFA";
}

std::string show_configuration(const la1::LimitedAutomaton& la, const la1::Configuration& c) {
    std::ostringstream out;
    out << la.state_name(c.state) << " ";
    if (c.terminal()) {
        for (const la1::Cell& cell : c.tape) out << " " << la.symbol(cell.symbol).text();
        out << "  (past the right end)";
        return out.str();
    }
    for (size_t i = 0; i < c.tape.size(); ++i) {
        const std::string text = la.symbol(c.tape[i].symbol).text();
        if (static_cast<int>(i) == c.head)
            out << " [" << text << "]";
        else
            out << " " << text;
    }
    return out.str();
}

ordered_json trace_json(const la1::LimitedAutomaton& la, const la1::Trace& trace) {
    ordered_json steps = ordered_json::array();
    for (const la1::Configuration& c : trace.configs) {
        ordered_json tape = ordered_json::array();
        for (const la1::Cell& cell : c.tape) tape.push_back(la.symbol(cell.symbol).text());
        steps.push_back({{"state", la.state_name(c.state)}, {"head", c.head}, {"tape", tape}});
    }
    return steps;
}

// With --out - the document owns stdout, so the human summary is dropped.
bool doc_owns_stdout(const std::string& out) { return out == "-"; }

int cmd_validate(const std::string& file, const std::string& out) {
    la1::AnyMachine m = load_machine(file);
    std::vector<la1::Diagnostic> diags;
    if (const auto* la = std::get_if<la1::LimitedAutomaton>(&m)) diags = la1::validate(*la);
    if (!out.empty()) {
        ordered_json doc;
        doc["kind"] = machine_kind(m);
        doc["valid"] = diags.empty();
        doc["diagnostics"] = ordered_json::array();
        for (const auto& d : diags)
            doc["diagnostics"].push_back({{"invariant", d.invariant}, {"detail", d.detail}});
        write_output(out, doc.dump(2) + "\n");
    }
    if (diags.empty()) {
        if (!doc_owns_stdout(out)) std::cout << "valid " << machine_kind(m) << " machine\n";
        return 0;
    }
    if (!doc_owns_stdout(out))
        for (const auto& d : diags) std::cout << d.invariant << ": " << d.detail << "\n";
    return 1;
}

int cmd_classify(const std::string& file, const std::string& out) {
    la1::AnyMachine m = load_machine(file);
    const la1::LimitedAutomaton& la = need_valid_la(m, "classify");
    la1::VariantProfile p = la1::classify(la);
    auto flag = [](bool b) { return b ? "yes" : "no"; };
    if (!doc_owns_stdout(out))
        std::cout << "deterministic:  " << flag(p.deterministic) << "\n"
                  << "write-free:     " << flag(p.write_free) << "\n"
                  << "once-marking:   " << flag(p.structurally_once_marking) << "\n"
                  << "always-marking: " << flag(p.structurally_always_marking) << "\n"
                  << "sweeping:       " << flag(p.sweeping) << "\n";
    if (!out.empty()) {
        ordered_json doc;
        doc["deterministic"] = p.deterministic;
        doc["writeFree"] = p.write_free;
        doc["onceMarking"] = p.structurally_once_marking;
        doc["alwaysMarking"] = p.structurally_always_marking;
        doc["sweeping"] = p.sweeping;
        write_output(out, doc.dump(2) + "\n");
    }
    return 0;
}

int cmd_run(const std::string& file, const std::string& word, bool trace,
            const std::string& out) {
    la1::AnyMachine m = load_machine(file);
    bool accepted = false;
    bool talk = !doc_owns_stdout(out);
    ordered_json doc;
    doc["kind"] = machine_kind(m);
    doc["word"] = word;

    if (const auto* la = std::get_if<la1::LimitedAutomaton>(&m)) {
        need_valid_la(m, "run");
        std::vector<int> w = la_word(*la, word);
        if (la1::classify(*la).deterministic) {
            la1::DetRun run = la1::trace_deterministic(*la, w);
            accepted = run.accepted;
            if (run.loop) {
                if (talk)
                    std::cout << (run.loop->reason == la1::LoopReport::Reason::Repeat
                                      ? "run loops (configuration repeats)"
                                      : "run exceeded the step budget")
                              << "\n";
                doc["loop"] = true;
            }
            if (trace) {
                if (talk)
                    for (const auto& c : run.trace.configs)
                        std::cout << show_configuration(*la, c) << "\n";
                doc["trace"] = trace_json(*la, run.trace);
            }
        } else {
            la1::RunVerdict v = la1::decide_acceptance(*la, w);
            accepted = v.accepted;
            if (trace && v.certificate) {
                if (talk)
                    for (const auto& c : v.certificate->configs)
                        std::cout << show_configuration(*la, c) << "\n";
                doc["trace"] = trace_json(*la, *v.certificate);
            }
        }
    } else if (const auto* nfa = std::get_if<la1::OneWayNfa>(&m)) {
        accepted = nfa->accepts(la1::parse_word(nfa->letters, word));
    } else {
        const auto& dfa = std::get<la1::OneWayDfa>(m);
        accepted = dfa.accepts(la1::parse_word(dfa.letters, word));
    }

    doc["accepted"] = accepted;
    if (!out.empty()) write_output(out, doc.dump(2) + "\n");
    if (talk) std::cout << (accepted ? "Accept" : "Reject") << "\n";
    return accepted ? 0 : 1;
}

la1::OneWayNfa embed_nfa(const la1::OneWayDfa& dfa) {
    la1::OneWayNfa nfa;
    nfa.states = dfa.states;
    nfa.letters = dfa.letters;
    nfa.initial = dfa.initial;
    nfa.finals = dfa.finals;
    nfa.delta.assign(dfa.states.size(), std::vector<std::vector<int>>(dfa.letters.size()));
    for (size_t q = 0; q < dfa.delta.size(); ++q)
        for (size_t l = 0; l < dfa.letters.size(); ++l)
            if (dfa.delta[q][l] >= 0) nfa.delta[q][l].push_back(dfa.delta[q][l]);
    return nfa;
}

int cmd_convert(const std::string& file, const std::string& to, const std::string& out) {
    la1::AnyMachine m = load_machine(file);
    la1::AnyMachine result{la1::OneWayNfa{}};
    size_t states = 0;

    if (const auto* la = std::get_if<la1::LimitedAutomaton>(&m)) {
        need_valid_la(m, "convert");
        if (to == "nfa") {
            auto nfa = la1::la_to_ownfa(*la);
            states = nfa.states.size();
            result = std::move(nfa);
        } else if (to == "dfa" || to == "min-dfa") {
            auto dfa = la1::determinize(la1::la_to_ownfa(*la));
            if (to == "min-dfa") dfa = la1::minimize_dfa(dfa);
            states = dfa.states.size();
            result = std::move(dfa);
        } else if (to == "twdfa") {
            auto tw = la1::domla_to_twdfa(*la);
            states = tw.num_states();
            result = std::move(tw);
        } else {
            throw Usage{"unknown target '" + to + "'"};
        }
    } else {
        la1::OneWayNfa nfa = std::holds_alternative<la1::OneWayNfa>(m)
                                 ? std::get<la1::OneWayNfa>(m)
                                 : embed_nfa(std::get<la1::OneWayDfa>(m));
        if (to == "nfa") {
            states = nfa.states.size();
            result = std::move(nfa);
        } else if (to == "dfa" || to == "min-dfa") {
            auto dfa = la1::determinize(nfa);
            if (to == "min-dfa") dfa = la1::minimize_dfa(dfa);
            states = dfa.states.size();
            result = std::move(dfa);
        } else if (to == "twdfa") {
            throw Usage{"twdfa conversion needs an LA1 machine"};
        } else {
            throw Usage{"unknown target '" + to + "'"};
        }
    }

    std::cerr << to << " states: " << states << "\n";
    write_output(out, la1::serialize(result));
    return 0;
}

int cmd_equiv(const std::string& file_a, const std::string& file_b, int max_len,
              const std::string& out) {
    la1::AnyMachine a = load_machine(file_a);
    la1::AnyMachine b = load_machine(file_b);
    if (std::holds_alternative<la1::LimitedAutomaton>(a)) need_valid_la(a, "equiv");
    if (std::holds_alternative<la1::LimitedAutomaton>(b)) need_valid_la(b, "equiv");
    auto cex = la1::language_equiv_bounded(a, b, max_len);
    if (!out.empty()) {
        ordered_json doc;
        doc["maxLen"] = max_len;
        doc["equal"] = !cex.has_value();
        doc["counterexample"] = cex ? ordered_json(*cex) : ordered_json(nullptr);
        write_output(out, doc.dump(2) + "\n");
    }
    if (!cex) {
        if (!doc_owns_stdout(out)) std::cout << "Equal up to length " << max_len << "\n";
        return 0;
    }
    if (!doc_owns_stdout(out)) {
        if (cex->empty())
            std::cout << "Counterexample: the empty word\n";
        else
            std::cout << "Counterexample: " << *cex << "\n";
    }
    return 1;
}

int cmd_gen(const std::string& family, int n, const std::string& out) {
    la1::LimitedAutomaton la =
        family == "kn" ? la1::gen_kn_omla(n) : la1::gen_jn_damla(n);
    write_output(out, la1::serialize(la));
    return 0;
}

int cmd_oracle(const std::string& family, int n, const std::string& word,
               const std::string& out) {
    for (char c : word)
        if (c != 'a' && c != 'b') throw Usage{"oracle words use the letters a and b"};
    bool member = family == "kn" ? la1::kn_member(n, word) : la1::jn_member(n, word);
    if (!out.empty()) {
        ordered_json doc;
        doc["family"] = family;
        doc["n"] = n;
        doc["word"] = word;
        doc["member"] = member;
        write_output(out, doc.dump(2) + "\n");
    }
    if (!doc_owns_stdout(out)) std::cout << (member ? "Accept" : "Reject") << "\n";
    return member ? 0 : 1;
}

int cmd_fooling(const std::string& family, int n, const std::string& out) {
    auto pairs = la1::jn_fooling_set(n);
    auto member = [&](const std::string& w) {
        return family == "kn" ? la1::kn_member(n, w) : la1::jn_member(n, w);
    };
    la1::FoolingOutcome f = la1::verify_fooling_set(member, pairs);
    if (!out.empty()) {
        ordered_json doc;
        doc["family"] = family;
        doc["n"] = n;
        doc["certified"] = f.certified;
        doc["size"] = f.size;
        doc["message"] = f.message;
        write_output(out, doc.dump(2) + "\n");
    }
    if (f.certified) {
        if (!doc_owns_stdout(out))
            std::cout << "Certified: every one-way nondeterministic acceptor needs at least "
                      << f.size << " states\n";
        return 0;
    }
    if (!doc_owns_stdout(out)) std::cout << "Not a fooling set: " << f.message << "\n";
    return 1;
}

int cmd_experiment(const std::string& family, int max_n, int max_len, const std::string& out) {
    la1::GapReport report = la1::gap_experiment(family, max_n, max_len);
    if (!doc_owns_stdout(out)) std::cout << la1::render_table(report);
    if (!out.empty()) write_output(out, la1::report_json(report));
    for (const auto& check : report.bounds)
        if (!check.holds) return 1;
    return 0;
}

int cmd_export_dot(const std::string& file, const std::string& out) {
    write_output(out, la1::export_dot(load_machine(file)));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for 1-limited automata and their one-way conversions"};
    app.require_subcommand(1);

    int rc = 0;
    std::string file = "-";
    std::string file_b;
    std::string out_path;
    std::string word;
    std::string to = "min-dfa";
    std::string family;
    std::vector<std::string> run_args;
    int n = 1;
    int max_n = 2;
    int max_len = 8;
    bool trace = false;

    auto* validate = app.add_subcommand("validate", "check a machine document");
    validate->add_option("file", file, "machine document, - for stdin");
    validate->add_option("--out", out_path, "write a structured report");
    validate->callback([&] { rc = cmd_validate(file, out_path); });

    auto* classify = app.add_subcommand("classify", "report the restriction flags of an LA1 machine");
    classify->add_option("file", file, "machine document, - for stdin");
    classify->add_option("--out", out_path, "write a structured report");
    classify->callback([&] { rc = cmd_classify(file, out_path); });

    auto* run = app.add_subcommand("run", "run a machine on a word");
    run->add_option("args", run_args, "[file] word  (file defaults to stdin)");
    run->add_flag("--trace", trace, "print the run");
    run->add_option("--out", out_path, "write a structured report");
    run->callback([&] {
        if (run_args.size() == 1) {
            word = run_args[0];
        } else if (run_args.size() == 2) {
            file = run_args[0];
            word = run_args[1];
        } else {
            throw Usage{"run expects [file] word"};
        }
        rc = cmd_run(file, word, trace, out_path);
    });

    auto* convert = app.add_subcommand("convert", "convert a machine to a one-way form");
    convert->add_option("file", file, "machine document, - for stdin");
    convert->add_option("--to", to, "nfa, dfa, min-dfa or twdfa")->required();
    convert->add_option("--out", out_path, "write the result here instead of stdout");
    convert->callback([&] { rc = cmd_convert(file, to, out_path); });

    auto* equiv = app.add_subcommand("equiv", "compare two machines on all words up to a length");
    equiv->add_option("a", file, "first machine document")->required();
    equiv->add_option("b", file_b, "second machine document")->required();
    equiv->add_option("--max-len", max_len, "maximum word length (default 8)");
    equiv->add_option("--out", out_path, "write a structured report");
    equiv->callback([&] { rc = cmd_equiv(file, file_b, max_len, out_path); });

    auto* gen = app.add_subcommand("gen", "emit a witness machine");
    gen->add_option("family", family, "kn or jn")->required()->check(CLI::IsMember({"kn", "jn"}));
    gen->add_option("--n", n, "block length")->required();
    gen->add_option("--out", out_path, "write the document here instead of stdout");
    gen->callback([&] { rc = cmd_gen(family, n, out_path); });

    auto* oracle = app.add_subcommand("oracle", "decide witness-language membership directly");
    oracle->add_option("family", family, "kn or jn")->required()->check(CLI::IsMember({"kn", "jn"}));
    oracle->add_option("word", word, "word over a, b")->required();
    oracle->add_option("--n", n, "block length")->required();
    oracle->add_option("--out", out_path, "write a structured report");
    oracle->callback([&] { rc = cmd_oracle(family, n, word, out_path); });

    auto* fooling = app.add_subcommand("fooling", "certify the nondeterministic lower bound");
    fooling->add_option("--family", family, "kn or jn")
        ->required()
        ->check(CLI::IsMember({"kn", "jn"}));
    fooling->add_option("--n", n, "block length")->required();
    fooling->add_option("--out", out_path, "write a structured report");
    fooling->callback([&] { rc = cmd_fooling(family, n, out_path); });

    auto* experiment = app.add_subcommand("experiment", "measure the conversion size gaps");
    experiment->add_option("--family", family, "kn or jn")
        ->required()
        ->check(CLI::IsMember({"kn", "jn"}));
    experiment->add_option("--max-n", max_n, "largest block length (default 2)");
    experiment->add_option("--max-len", max_len, "bounded-equivalence word length (default 8)");
    experiment->add_option("--out", out_path, "write the structured report");
    experiment->callback([&] { rc = cmd_experiment(family, max_n, max_len, out_path); });

    auto* export_dot = app.add_subcommand("export-dot", "emit a DOT graph of a machine");
    export_dot->add_option("file", file, "machine document, - for stdin");
    export_dot->add_option("--out", out_path, "write the graph here instead of stdout");
    export_dot->callback([&] { rc = cmd_export_dot(file, out_path); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const Usage& u) {
        std::cerr << "error: " << u.message << "\n";
        return 2;
    } catch (const la1::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
