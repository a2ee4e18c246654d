// SPDX-License-Identifier: Apache-2.0
#include "pgopt/bench.hpp"

#include "pgopt/qasm.hpp"
#include "pgopt/sim.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace pgopt::bench {

namespace {

Row run_one(const std::string& name, const Circuit& input, const Options& opt) {
    Row row;
    row.name = name;
    row.g_in = input.two_qubit_count();
    row.d_in = input.two_qubit_depth();

    const auto passes = opt.passes.empty() ? pipeline::standard_pipeline() : opt.passes;
    auto t0 = std::chrono::steady_clock::now();
    auto deadline = t0 + std::chrono::duration<double>(opt.timeout_s);

    Circuit current = input;
    bool timed_out = false;
    for (const auto& p : passes) {
        if (std::chrono::steady_clock::now() > deadline) {
            timed_out = true;
            break;
        }
        current = pipeline::apply_pass(current, p);
    }
    auto t1 = std::chrono::steady_clock::now();
    row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (timed_out) {
        row.verdict = "timeout";
        return row;
    }
    row.g_out = current.two_qubit_count();
    row.d_out = current.two_qubit_depth();

    if (opt.oracle == pipeline::OracleMode::Off) {
        row.verdict = "off";
    } else if (input.width() > 10 && opt.oracle == pipeline::OracleMode::Auto) {
        row.verdict = "skipped-over-cap";
    } else {
        row.verdict = sim::circuits_equiv(input, current, 1e-8) ? "checked" : "failed";
    }
    return row;
}

}  // namespace

Summary run(const std::vector<std::pair<std::string, Circuit>>& corpus, const Options& opt) {
    Summary s;
    s.rows.resize(corpus.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < (long long)corpus.size(); ++i)
        s.rows[i] = run_one(corpus[i].first, corpus[i].second, opt);

    std::sort(s.rows.begin(), s.rows.end(),
              [](const Row& a, const Row& b) { return a.name < b.name; });

    double csum = 0, dsum = 0;
    size_t n = 0;
    for (const auto& r : s.rows) {
        if (!r.g_out || r.g_in == 0 || r.d_in == 0) continue;
        csum += 100.0 * (double(r.g_in) - double(*r.g_out)) / double(r.g_in);
        dsum += 100.0 * (double(r.d_in) - double(*r.d_out)) / double(r.d_in);
        ++n;
    }
    if (n) {
        s.mean_count_reduction_pct = csum / double(n);
        s.mean_depth_reduction_pct = dsum / double(n);
    }
    return s;
}

Summary run_directory(const std::string& dir, const Options& opt) {
    std::vector<std::pair<std::string, Circuit>> corpus;
    std::vector<Row> errors;
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".qasm") files.push_back(e.path());
    std::sort(files.begin(), files.end());

    for (const auto& f : files) {
        try {
            std::ifstream in(f);
            std::stringstream buf;
            buf << in.rdbuf();
            corpus.emplace_back(f.filename().string(), qasm::parse(buf.str()));
        } catch (const std::exception& ex) {
            Row r;
            r.name = f.filename().string();
            r.error = ex.what();
            errors.push_back(std::move(r));
        }
    }
    Summary s = run(corpus, opt);
    for (auto& r : errors) s.rows.push_back(std::move(r));
    std::sort(s.rows.begin(), s.rows.end(),
              [](const Row& a, const Row& b) { return a.name < b.name; });
    return s;
}

std::string to_csv(const Summary& s) {
    std::ostringstream os;
    os << "name,g_in,d_in,g_out,d_out,verdict,wall_ms\n";
    for (const auto& r : s.rows) {
        if (!r.error.empty()) {
            os << r.name << ",,,,,error,\n";
            continue;
        }
        os << r.name << "," << r.g_in << "," << r.d_in << ",";
        if (r.g_out) os << *r.g_out;
        os << ",";
        if (r.d_out) os << *r.d_out;
        os << "," << r.verdict << "," << r.wall_ms << "\n";
    }
    os << "mean_count_reduction_pct," << s.mean_count_reduction_pct << "\n";
    os << "mean_depth_reduction_pct," << s.mean_depth_reduction_pct << "\n";
    return os.str();
}

std::string to_json(const Summary& s) {
    nlohmann::json j;
    j["schema"] = 1;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : s.rows) {
        nlohmann::json row;
        row["name"] = r.name;
        if (!r.error.empty()) {
            row["error"] = r.error;
        } else {
            row["g_in"] = r.g_in;
            row["d_in"] = r.d_in;
            if (r.g_out) row["g_out"] = *r.g_out;
            if (r.d_out) row["d_out"] = *r.d_out;
            row["verdict"] = r.verdict;
            row["wall_ms"] = r.wall_ms;
        }
        j["rows"].push_back(std::move(row));
    }
    j["mean_count_reduction_pct"] = s.mean_count_reduction_pct;
    j["mean_depth_reduction_pct"] = s.mean_depth_reduction_pct;
    return j.dump(2);
}

}  // namespace pgopt::bench
