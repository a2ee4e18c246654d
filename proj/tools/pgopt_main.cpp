// SPDX-License-Identifier: Apache-2.0
#include "pgopt/bench.hpp"
#include "pgopt/pipeline.hpp"
#include "pgopt/qasm.hpp"
#include "pgopt/rules.hpp"
#include "pgopt/sim.hpp"
#include "pgopt/ucc.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitParseError = 2;
constexpr int kExitVerifyFailure = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw pgopt::Error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

pgopt::Circuit load_input(const std::string& path) {
    std::string text = slurp(path);
    // gadget lists start with width=N; everything else is circuit text
    size_t a = text.find_first_not_of(" \t\r\n");
    if (a != std::string::npos && text.compare(a, 6, "width=") == 0)
        return pgopt::pipeline::parse_gadget_list(text);
    return pgopt::qasm::parse(text);
}

std::vector<std::string> split_passes(const std::string& arg) {
    std::vector<std::string> out;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pauli-gadget circuit optimizer"};
    app.require_subcommand(1);

    // optimize
    auto* opt = app.add_subcommand("optimize", "optimize a circuit or gadget list");
    std::string in_path, passes_arg, out_path, report_path, oracle_arg = "auto";
    opt->add_option("input", in_path, "circuit (.qasm) or gadget list file")->required();
    opt->add_option("--passes", passes_arg, "comma-separated pass list (default: standard)");
    opt->add_option("--out", out_path, "optimized circuit output path");
    opt->add_option("--report", report_path, "JSON report output path");
    opt->add_option("--oracle", oracle_arg, "on|off|auto")->check(CLI::IsMember({"on", "off", "auto"}));

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "run the pipeline over a corpus");
    std::string bench_dir, gen_arg, csv_path, json_path;
    double timeout_s = 60.0;
    std::string bench_style = "ladder";
    bench_cmd->add_option("dir", bench_dir, "directory of .qasm files");
    bench_cmd->add_option("--gen", gen_arg, "generated suite: qubits,terms,seed");
    bench_cmd->add_option("--timeout", timeout_s, "per-circuit timeout in seconds");
    bench_cmd->add_option("--csv", csv_path, "CSV output path");
    bench_cmd->add_option("--json", json_path, "JSON output path");
    bench_cmd->add_option("--style", bench_style, "generator style: ladder|tree")
        ->check(CLI::IsMember({"ladder", "tree"}));
    bench_cmd->add_option("--count", gen_arg, "")->group("");  // hidden alias guard

    // rules
    auto* rules_cmd = app.add_subcommand("rules", "print the rewrite-rule catalogue");
    bool rules_json = false;
    rules_cmd->add_flag("--certify", rules_json, "oracle-check all rules before printing");

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "emit a generated ansatz circuit as .qasm");
    uint32_t gen_qubits = 4;
    size_t gen_terms = 4;
    uint64_t gen_seed = 1;
    std::string gen_style = "ladder", gen_out;
    gen_cmd->add_option("--qubits", gen_qubits)->required();
    gen_cmd->add_option("--terms", gen_terms)->required();
    gen_cmd->add_option("--seed", gen_seed);
    gen_cmd->add_option("--style", gen_style)->check(CLI::IsMember({"ladder", "tree"}));
    gen_cmd->add_option("--out", gen_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*opt) {
            pgopt::Circuit input;
            try {
                input = load_input(in_path);
            } catch (const std::exception& ex) {
                std::cerr << "parse error: " << ex.what() << "\n";
                return kExitParseError;
            }
            auto passes = passes_arg.empty() ? pgopt::pipeline::standard_pipeline()
                                             : split_passes(passes_arg);
            auto mode = oracle_arg == "on"    ? pgopt::pipeline::OracleMode::On
                        : oracle_arg == "off" ? pgopt::pipeline::OracleMode::Off
                                              : pgopt::pipeline::OracleMode::Auto;
            auto [result, report] = pgopt::pipeline::run_pipeline(input, passes, mode, in_path);
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                out << pgopt::qasm::emit(result);
            }
            if (!report_path.empty()) {
                std::ofstream out(report_path);
                out << pgopt::pipeline::report_json(report);
            }
            std::cout << "two-qubit count " << report.g_in << " -> " << report.g_out
                      << ", depth " << report.d_in << " -> " << report.d_out << "\n";
            if (report.verdict == pgopt::pipeline::OracleVerdict::Failed) {
                std::cerr << "verification failed\n";
                return kExitVerifyFailure;
            }
            if (report.verdict == pgopt::pipeline::OracleVerdict::Checked)
                std::cout << "oracle: checked\n";
            else if (report.verdict == pgopt::pipeline::OracleVerdict::SkippedOverCap)
                std::cout << "oracle: skipped-over-cap\n";
            return 0;
        }

        if (*bench_cmd) {
            pgopt::bench::Options opts;
            opts.timeout_s = timeout_s;
            pgopt::bench::Summary summary;
            if (!gen_arg.empty()) {
                auto parts = split_passes(gen_arg);
                if (parts.size() != 3) throw pgopt::Error("--gen expects qubits,terms,seed");
                uint32_t n = std::stoul(parts[0]);
                size_t terms = std::stoull(parts[1]);
                uint64_t seed = std::stoull(parts[2]);
                std::vector<std::pair<std::string, pgopt::Circuit>> corpus;
                auto style = bench_style == "tree" ? pgopt::ucc::Style::Tree
                                                   : pgopt::ucc::Style::Ladder;
                for (size_t i = 0; i < terms; ++i) {
                    std::string name = "gen-" + std::to_string(i);
                    corpus.emplace_back(name, pgopt::ucc::generate_ucc(n, 4, seed + i, style));
                }
                summary = pgopt::bench::run(corpus, opts);
            } else if (!bench_dir.empty()) {
                summary = pgopt::bench::run_directory(bench_dir, opts);
            } else {
                throw pgopt::Error("bench: give a directory or --gen");
            }
            std::string csv = pgopt::bench::to_csv(summary);
            if (!csv_path.empty()) std::ofstream(csv_path) << csv;
            if (!json_path.empty()) std::ofstream(json_path) << pgopt::bench::to_json(summary);
            std::cout << csv;
            return 0;
        }

        if (*rules_cmd) {
            if (rules_json) {
                auto failures = pgopt::rules::certify_rules(1e-10);
                if (!failures.empty()) {
                    for (const auto& f : failures)
                        std::cerr << "FAILED " << f.rule << " width " << f.width << "\n";
                    return kExitVerifyFailure;
                }
                std::cout << "all rules certified\n";
            }
            std::cout << pgopt::rules::catalogue_text();
            return 0;
        }

        if (*gen_cmd) {
            auto style = gen_style == "tree" ? pgopt::ucc::Style::Tree : pgopt::ucc::Style::Ladder;
            auto c = pgopt::ucc::generate_ucc(gen_qubits, gen_terms, gen_seed, style);
            std::string text = pgopt::qasm::emit(c);
            if (gen_out.empty())
                std::cout << text;
            else
                std::ofstream(gen_out) << text;
            return 0;
        }
    } catch (const pgopt::qasm::ParseError& ex) {
        std::cerr << "parse error: " << ex.what() << "\n";
        return kExitParseError;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
