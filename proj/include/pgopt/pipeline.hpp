// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pgopt/circuit.hpp"
#include "pgopt/peephole.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pgopt::pipeline {

/// Per-pass metrics snapshot taken after the pass ran.
struct PassMetrics {
    std::string name;
    size_t two_qubit_count = 0;
    size_t two_qubit_depth = 0;
    size_t total_gates = 0;
    double wall_ms = 0.0;
    size_t rewrites = 0;
};

enum class OracleVerdict { Checked, Failed, SkippedOverCap, Off };

struct PassReport {
    std::string circuit_name;
    size_t g_in = 0, d_in = 0, g_out = 0, d_out = 0;
    std::vector<PassMetrics> per_pass;
    OracleVerdict verdict = OracleVerdict::Off;
    peephole::RewriteLog rewrite_log;
};

enum class OracleMode { On, Off, Auto };

/// Known pass names: detect-resynth, pair-reduce, merge-rotations,
/// cancel-inverses, commute-cancel, euler-1q.
bool is_known_pass(const std::string& name);
Circuit apply_pass(const Circuit& c, const std::string& name, peephole::RewriteLog* log = nullptr);

/// The default pipeline, iterated twice: detect-resynth, pair-reduce,
/// commute-cancel, merge-rotations, cancel-inverses, euler-1q.
std::vector<std::string> standard_pipeline();

/// Applies passes in order and assembles the report. Oracle Auto verifies
/// up to 10 qubits and downgrades to SkippedOverCap above.
std::pair<Circuit, PassReport> run_pipeline(const Circuit& input,
                                            const std::vector<std::string>& passes,
                                            OracleMode oracle = OracleMode::Auto,
                                            const std::string& name = "");

/// Gadget-pair reduction over detected segments: fuses equal strings and
/// rebuilds profitable consecutive pairs with pair_synth, bubbling
/// commuting gadgets together.
Circuit pair_reduce(const Circuit& c);

std::string report_json(const PassReport& r);

/// Gadget-list input: line 1 `width=N`, then `<angle-expr> <pauli-string>`
/// per line. Angles use the same grammar as the circuit text format.
Circuit parse_gadget_list(const std::string& text);

}  // namespace pgopt::pipeline
