// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgopt/bench.hpp"
#include "pgopt/pipeline.hpp"
#include "pgopt/qasm.hpp"
#include "pgopt/sim.hpp"
#include "pgopt/synth.hpp"
#include "pgopt/ucc.hpp"
#include "support.hpp"

using namespace pgopt;
using namespace pgopt::pipeline;

TEST_CASE("empty pass list echoes the input") {
    Circuit c = qasm::parse(testsup::h2_initial_qasm());
    auto [out, report] = run_pipeline(c, {});
    CHECK(out.gates_equal(c));
    CHECK(report.g_in == 12);
    CHECK(report.d_in == 12);
    CHECK(report.g_out == 12);
    CHECK(report.verdict == OracleVerdict::Checked);
}

TEST_CASE("unknown pass name") {
    Circuit c(2);
    CHECK_THROWS_AS((void)run_pipeline(c, {"no-such-pass"}), Error);
}

TEST_CASE("clifford pipeline on the worked example") {
    Circuit c = qasm::parse(testsup::h2_initial_qasm());
    auto [out, report] =
        run_pipeline(c, {"detect-resynth", "commute-cancel", "cancel-inverses"});
    CHECK(report.g_out <= 10);
    CHECK(report.d_out <= 7);
    CHECK(report.verdict == OracleVerdict::Checked);
}

TEST_CASE("pair-reduce pipeline on the worked example") {
    Circuit c = qasm::parse(testsup::h2_initial_qasm());
    auto [out, report] = run_pipeline(c, {"detect-resynth", "pair-reduce"});
    CHECK(report.g_out == 6);
    CHECK(report.d_out == 4);
    CHECK(report.verdict == OracleVerdict::Checked);
}

TEST_CASE("standard pipeline is monotone in two-qubit count") {
    testsup::Rng rng(3);
    for (int trial = 0; trial < 8; ++trial) {
        Circuit c = testsup::random_circuit(4, 30, rng);
        auto [out, report] = run_pipeline(c, standard_pipeline());
        CHECK(report.g_out <= report.g_in);
        size_t prev = report.g_in;
        for (const auto& m : report.per_pass) {
            CHECK(m.two_qubit_count <= prev);
            prev = m.two_qubit_count;
        }
        CHECK(report.verdict == OracleVerdict::Checked);
    }
}

TEST_CASE("report json shape") {
    Circuit c = qasm::parse(testsup::h2_initial_qasm());
    auto [out, report] = run_pipeline(c, standard_pipeline(), OracleMode::Auto, "h2");
    std::string j = report_json(report);
    CHECK(j.find("\"schema\": 1") != std::string::npos);
    CHECK(j.find("\"name\": \"h2\"") != std::string::npos);
    CHECK(j.find("\"verdict\": \"checked\"") != std::string::npos);
}

TEST_CASE("rewrite log replays across the pipeline") {
    Circuit c = qasm::parse(testsup::h2_initial_qasm());
    auto [out, report] = run_pipeline(c, standard_pipeline());
    CHECK(peephole::replay(c, report.rewrite_log).gates_equal(out));
}

TEST_CASE("generate_ucc") {
    // determinism
    Circuit a = ucc::generate_ucc(4, 2, 1, ucc::Style::Ladder);
    Circuit b = ucc::generate_ucc(4, 2, 1, ucc::Style::Ladder);
    CHECK(a.gates_equal(b));

    // ladder CX count is forced by the supports
    auto terms = ucc::generate_terms(4, 2, 1);
    size_t expect = 0;
    for (const auto& t : terms) expect += 2 * (t.string.weight() - 1);
    CHECK(a.two_qubit_count() == expect);

    // paired terms share the support and differ in exactly two symbols
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].string.support() == terms[1].string.support());
    size_t diffs = 0;
    for (size_t i = 0; i < 4; ++i)
        if (terms[0].string[i] != terms[1].string[i]) ++diffs;
    CHECK(diffs == 2);

    // optimized output stays equivalent
    for (uint64_t seed : {2, 3}) {
        Circuit g = ucc::generate_ucc(6, 4, seed, ucc::Style::Ladder);
        auto [out, report] = run_pipeline(g, standard_pipeline());
        CHECK(report.verdict == OracleVerdict::Checked);
        CHECK(report.g_out <= report.g_in);
    }
}

TEST_CASE("gadget list input") {
    Circuit c = pipeline::parse_gadget_list("width=3\n0.3 ZZI\npi/2 IXY\n");
    CHECK(c.width() == 3);
    CHECK(c.two_qubit_count() == 4);
    CHECK_THROWS_AS((void)pipeline::parse_gadget_list("0.3 ZZ\n"), Error);
    CHECK_THROWS_AS((void)pipeline::parse_gadget_list("width=3\n0.3 ZZ\n"), Error);
}

TEST_CASE("bench rows and summary") {
    Circuit h2 = qasm::parse(testsup::h2_initial_qasm());
    bench::Options opt;
    auto s = bench::run({{"h2", h2}}, opt);
    REQUIRE(s.rows.size() == 1);
    CHECK(s.rows[0].g_in == 12);
    CHECK(s.rows[0].d_in == 12);
    REQUIRE(s.rows[0].g_out.has_value());
    CHECK(*s.rows[0].g_out == 6);
    CHECK(*s.rows[0].d_out == 4);
    CHECK(s.rows[0].verdict == "checked");

    // empty corpus: empty table
    auto empty = bench::run({}, opt);
    CHECK(empty.rows.empty());
    CHECK(bench::to_csv(empty).find("name,") == 0);

    // generated suite: monotone rows
    std::vector<std::pair<std::string, Circuit>> corpus;
    for (int i = 0; i < 6; ++i)
        corpus.emplace_back("g" + std::to_string(i),
                            ucc::generate_ucc(5, 4, 100 + i, ucc::Style::Ladder));
    auto gs = bench::run(corpus, opt);
    for (const auto& r : gs.rows) {
        REQUIRE(r.g_out.has_value());
        CHECK(*r.g_out <= r.g_in);
        CHECK(r.verdict == "checked");
    }
}

TEST_CASE("oracle verdict downgrades over the cap") {
    Circuit wide(11);
    wide.push(Gate::cx(0, 10));
    auto [out, report] = run_pipeline(wide, {"cancel-inverses"});
    CHECK(report.verdict == OracleVerdict::SkippedOverCap);
}

TEST_CASE("ladder circuits with wide gadgets strictly lose depth") {
    for (int i = 0; i < 20; ++i) {
        auto terms = ucc::generate_terms(8, 4, 7 + i);
        bool wide = false;
        for (const auto& t : terms) wide = wide || t.string.weight() >= 3;
        Circuit c(8);
        for (const auto& t : terms) c.append(synth::synth_ladder(t));
        auto [out, rep] = run_pipeline(c, standard_pipeline(), OracleMode::Off);
        if (wide) CHECK(rep.d_out < rep.d_in);
    }
}

TEST_CASE("bench timeout rows have blank output cells") {
    Circuit g = ucc::generate_ucc(6, 6, 5, ucc::Style::Ladder);
    bench::Options opt;
    opt.timeout_s = 0.0;
    auto s = bench::run({{"g", g}}, opt);
    REQUIRE(s.rows.size() == 1);
    CHECK(s.rows[0].verdict == "timeout");
    CHECK_FALSE(s.rows[0].g_out.has_value());
    std::string csv = bench::to_csv(s);
    CHECK(csv.find("g,24,24,,,timeout") != std::string::npos);
}

TEST_CASE("bench reports are deterministic apart from wall time") {
    Circuit g = ucc::generate_ucc(5, 4, 9, ucc::Style::Ladder);
    bench::Options opt;
    auto s1 = bench::run({{"g", g}}, opt);
    auto s2 = bench::run({{"g", g}}, opt);
    CHECK(s1.rows[0].g_out == s2.rows[0].g_out);
    CHECK(s1.rows[0].d_out == s2.rows[0].d_out);
}
