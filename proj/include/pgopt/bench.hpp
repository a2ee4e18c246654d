// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pgopt/pipeline.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pgopt::bench {

struct Row {
    std::string name;
    size_t g_in = 0, d_in = 0;
    std::optional<size_t> g_out, d_out;  // empty on timeout
    std::string verdict;
    double wall_ms = 0.0;
    std::string error;  // unreadable/unsupported entries
};

struct Summary {
    std::vector<Row> rows;
    double mean_count_reduction_pct = 0.0;  // over completed rows
    double mean_depth_reduction_pct = 0.0;
};

struct Options {
    std::vector<std::string> passes;  // empty = standard pipeline
    double timeout_s = 60.0;
    pipeline::OracleMode oracle = pipeline::OracleMode::Auto;
};

/// Runs the pipeline over named circuits; entries process independently
/// (parallel across entries), output is ordered by input name.
Summary run(const std::vector<std::pair<std::string, Circuit>>& corpus, const Options& opt);

/// Loads every *.qasm file in a directory (sorted by name). Unreadable
/// entries become error rows.
Summary run_directory(const std::string& dir, const Options& opt);

std::string to_csv(const Summary& s);
std::string to_json(const Summary& s);

}  // namespace pgopt::bench
