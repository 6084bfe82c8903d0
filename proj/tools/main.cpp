// prefseq -- generate and analyze de Bruijn sequences driven by preference tables

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "prefseq/analysis.hpp"
#include "prefseq/census.hpp"
#include "prefseq/core.hpp"
#include "prefseq/generator.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNegative = 3;  // incomplete table, short run

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string format_context(std::size_t id, unsigned t, unsigned span) {
    return prefseq::format_word(prefseq::word_from_value(id, t, span));
}

struct GenerateArgs {
    unsigned t = 0;
    unsigned order = 0;
    std::string table_path;
    bool use_prefer_higher = false;
    bool use_prefer_opposite = false;
    std::string initial_text;
    bool wrap = false;
    bool stats = false;
};

int run_generate(const GenerateArgs& args) {
    std::optional<prefseq::PreferenceFunction> fn;
    if (!args.table_path.empty()) {
        fn = prefseq::parse_preference_table(read_file(args.table_path));
        if (args.t != 0 && args.t != fn->t()) {
            std::cerr << "error: --t " << args.t << " does not match the table's t="
                      << fn->t() << "\n";
            return kExitUsage;
        }
    } else if (args.use_prefer_higher) {
        if (args.t == 0) {
            std::cerr << "error: --prefer-higher requires --t\n";
            return kExitUsage;
        }
        fn = prefseq::prefer_higher(args.t);
    } else {
        if (args.t != 0 && args.t != 2) {
            std::cerr << "error: --prefer-opposite is binary (t=2)\n";
            return kExitUsage;
        }
        fn = prefseq::prefer_opposite_binary();
    }

    const unsigned t = fn->t();
    prefseq::Word initial;
    if (args.initial_text.empty()) {
        initial = prefseq::zero_word(args.order);
    } else {
        initial = prefseq::parse_sequence(args.initial_text, t);
        if (initial.size() != args.order) {
            std::cerr << "error: initial word must have exactly " << args.order
                      << " digits\n";
            return kExitUsage;
        }
        if (initial != prefseq::zero_word(args.order))
            std::cerr << "warning: initial word is not the all-zero word; "
                         "completeness guarantees do not apply\n";
    }

    prefseq::DigitSequence run =
        prefseq::generate(*fn, args.order, initial, {.wrap = false});
    const bool full = prefseq::is_de_bruijn(run);

    std::string text = run.to_string();
    if (args.wrap) {
        prefseq::Word wrapped = run.digits();
        wrapped.insert(wrapped.end(), run.digits().begin(),
                       run.digits().begin() + args.order - 1);
        text = prefseq::format_sequence(wrapped, t);
    }
    std::cout << text << "\n";

    if (args.stats) {
        std::cout << "halt length: " << run.halt_length() << "\n";
        std::cout << "de Bruijn: " << (full ? "yes" : "no") << "\n";
        if (!full) {
            std::cout << "missing windows:";
            for (const prefseq::Word& w : prefseq::missing_windows(run))
                std::cout << " " << prefseq::format_sequence(w, t);
            std::cout << "\n";
        }
    }
    return full ? kExitOk : kExitNegative;
}

int run_check(const std::string& table_path) {
    prefseq::PreferenceFunction fn =
        prefseq::parse_preference_table(read_file(table_path));
    prefseq::CompletenessReport report = prefseq::is_complete(fn);
    if (report.complete) {
        std::cout << "complete\n";
        return kExitOk;
    }
    std::cout << "incomplete\n";
    for (const auto& cycle : report.forbidden_cycles) {
        std::cout << "cycle:";
        for (std::size_t i = 0; i <= cycle.size(); ++i) {
            std::cout << (i == 0 ? " " : " -> ")
                      << format_context(cycle[i % cycle.size()], report.t,
                                        report.cycle_span);
        }
        std::cout << "\n";
    }
    return kExitNegative;
}

int run_complexity(unsigned t, unsigned order, const std::string& seq_arg) {
    std::string text = seq_arg;
    if (std::filesystem::exists(seq_arg)) text = read_file(seq_arg);
    prefseq::DigitSequence s(prefseq::Alphabet(t), order,
                             prefseq::parse_sequence(text, t));
    prefseq::ComplexityReport report = prefseq::complexity(s);
    std::cout << "complexity: " << report.span << "\n";
    for (unsigned k = 0; k < report.feasible_by_span.size(); ++k)
        std::cout << "span " << k << ": "
                  << (report.feasible_by_span[k] ? "feasible" : "infeasible") << "\n";
    std::cout << "witness:\n" << prefseq::format_preference_table(report.witness);
    return kExitOk;
}

int run_census(unsigned t, unsigned order, bool show_modes) {
    prefseq::CensusTable table = prefseq::empirical_census(t, order);
    for (unsigned s = 0; s < table.counts.size(); ++s) {
        std::cout << "span " << s << ": " << table.counts[s];
        if (show_modes) {
            prefseq::BigInt corrected = prefseq::count_by_complexity(
                t, s, prefseq::CountMode::corrected);
            prefseq::BigInt literal = prefseq::count_by_complexity(
                t, s, prefseq::CountMode::paper_literal);
            std::cout << " (corrected N_" << s << " = " << corrected
                      << ", paper-literal N_" << s << " = " << literal;
            if (corrected != literal) std::cout << "; modes disagree";
            std::cout << ")";
        }
        std::cout << "\n";
    }
    std::cout << "total: " << table.total;
    if (show_modes)
        std::cout << " (M(" << t << "," << order << ") = "
                  << prefseq::count_de_bruijn(t, order) << ")";
    std::cout << "\n";
    return kExitOk;
}

int run_count(unsigned t, unsigned i, const std::string& mode) {
    if (i >= 1)
        std::cout << "M(" << t << "," << i << ") = " << prefseq::count_de_bruijn(t, i)
                  << "\n";
    prefseq::BigInt literal =
        prefseq::count_by_complexity(t, i, prefseq::CountMode::paper_literal);
    prefseq::BigInt corrected =
        prefseq::count_by_complexity(t, i, prefseq::CountMode::corrected);
    if (mode.empty() || mode == "paper-literal")
        std::cout << "N_" << i << " paper-literal: " << literal << "\n";
    if (mode.empty() || mode == "corrected") {
        std::cout << "N_" << i << " corrected: " << corrected;
        if (literal != corrected && mode.empty()) std::cout << " (modes disagree)";
        std::cout << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"de Bruijn sequences from preference functions"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* cmd_generate =
        app.add_subcommand("generate", "run the greedy generator");
    cmd_generate->add_option("--t", gen.t, "alphabet size");
    cmd_generate->add_option("--order", gen.order, "window size n")
        ->required()
        ->check(CLI::Range(1u, 64u));
    auto* opt_table =
        cmd_generate->add_option("--table", gen.table_path, "preference table file");
    auto* opt_higher = cmd_generate->add_flag("--prefer-higher", gen.use_prefer_higher,
                                              "prefer t-1, t-2, ..., 0");
    auto* opt_opposite = cmd_generate->add_flag(
        "--prefer-opposite", gen.use_prefer_opposite, "binary prefer-opposite");
    opt_table->excludes(opt_higher)->excludes(opt_opposite);
    opt_higher->excludes(opt_opposite);
    cmd_generate->add_option("--initial", gen.initial_text,
                             "initial word (default: all zeros)");
    cmd_generate->add_flag("--wrap", gen.wrap, "append the first n-1 digits");
    cmd_generate->add_flag("--stats", gen.stats, "print halt length and verdict");

    std::string check_table;
    auto* cmd_check = app.add_subcommand("check", "decide completeness of a table");
    cmd_check->add_option("--table", check_table, "preference table file")->required();

    unsigned cx_t = 0, cx_order = 0;
    std::string cx_seq;
    auto* cmd_complexity =
        app.add_subcommand("complexity", "minimal span generating a sequence");
    cmd_complexity->add_option("--t", cx_t, "alphabet size")->required();
    cmd_complexity->add_option("--order", cx_order, "window size n")->required();
    cmd_complexity->add_option("--seq", cx_seq, "sequence digits or a file")
        ->required();

    unsigned census_t = 0, census_order = 0;
    bool census_modes = false;
    auto* cmd_census =
        app.add_subcommand("census", "empirical complexity distribution");
    cmd_census->add_option("--t", census_t, "alphabet size")->required();
    cmd_census->add_option("--order", census_order, "window size n")->required();
    cmd_census->add_flag("--modes", census_modes, "compare against the closed forms");

    unsigned count_t = 0, count_i = 0;
    std::string count_mode;
    auto* cmd_count = app.add_subcommand("count", "closed-form sequence counts");
    cmd_count->add_option("--t", count_t, "alphabet size")->required();
    cmd_count->add_option("--i", count_i, "order / complexity index")->required();
    cmd_count->add_option("--mode", count_mode, "paper-literal or corrected")
        ->check(CLI::IsMember({"paper-literal", "corrected"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (cmd_generate->parsed()) {
            if (gen.table_path.empty() && !gen.use_prefer_higher &&
                !gen.use_prefer_opposite) {
                std::cerr << "error: choose one of --table, --prefer-higher, "
                             "--prefer-opposite\n";
                return kExitUsage;
            }
            return run_generate(gen);
        }
        if (cmd_check->parsed()) return run_check(check_table);
        if (cmd_complexity->parsed()) return run_complexity(cx_t, cx_order, cx_seq);
        if (cmd_census->parsed()) return run_census(census_t, census_order, census_modes);
        if (cmd_count->parsed()) return run_count(count_t, count_i, count_mode);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
