// SPDX-License-Identifier: Apache-2.0
#include "pgopt/pipeline.hpp"

#include "pgopt/qasm.hpp"
#include "pgopt/reduce.hpp"
#include "pgopt/sim.hpp"
#include "pgopt/synth.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <sstream>

namespace pgopt::pipeline {

namespace {

using synth::GadgetSegment;

// profitable = strictly fewer CX than two independent trees
bool pair_profitable(const PauliGadget& a, const PauliGadget& b) {
    if (a.string == b.string) return true;
    size_t naive = 2 * (a.string.weight() - 1) + 2 * (b.string.weight() - 1);
    return cx_pair_cost(a.string, b.string) < naive;
}

// reduce one run of consecutive gadgets into a circuit
Circuit reduce_gadget_run(std::vector<PauliGadget> run, uint32_t width) {
    Circuit out(width);
    // drop trivial gadgets into the phase
    {
        std::vector<PauliGadget> keep;
        for (auto& g : run) {
            if (g.string.trivial())
                out.add_phase(-g.angle / 2);
            else
                keep.push_back(std::move(g));
        }
        run = std::move(keep);
    }

    size_t i = 0;
    std::vector<PauliGadget> pending;  // singles not yet emitted
    auto flush_pending = [&] {
        if (pending.empty()) return;
        out.append(synth::synth_chain(pending, synth::ChainStrategy::Aligned));
        pending.clear();
    };

    while (i < run.size()) {
        if (i + 1 >= run.size()) {
            pending.push_back(run[i]);
            ++i;
            continue;
        }
        // bubble the nearest profitable partner next to run[i]
        size_t partner = 0;
        for (size_t j = i + 1; j < run.size(); ++j) {
            bool path_commutes = true;
            for (size_t k = i + 1; k < j; ++k)
                if (!commutes(run[k].string, run[j].string)) { path_commutes = false; break; }
            if (!path_commutes) continue;
            if (pair_profitable(run[i], run[j])) { partner = j; break; }
        }
        if (partner == 0) {
            pending.push_back(run[i]);
            ++i;
            continue;
        }
        PauliGadget b = run[partner];
        run.erase(run.begin() + partner);
        if (auto [ok, fused] = reduce::fuse(run[i], b); ok) {
            if (std::abs(fused.angle) <= 1e-12)
                run.erase(run.begin() + i);
            else
                run[i] = fused;
            continue;  // fused gadget may pair again
        }
        flush_pending();
        out.append(reduce::pair_synth(run[i], b));
        run.erase(run.begin() + i);
    }
    flush_pending();
    return out;
}

}  // namespace

Circuit pair_reduce(const Circuit& c) {
    auto segs = synth::detect_gadgets(c);
    Circuit out(c.width());
    out.set_phase(c.global_phase());

    std::vector<PauliGadget> run;
    auto flush = [&] {
        if (run.empty()) return;
        Circuit reduced = reduce_gadget_run(std::move(run), c.width());
        out.add_phase(reduced.global_phase());
        for (const Gate& g : reduced.gates()) out.push(g);
        run.clear();
    };
    for (const auto& seg : segs) {
        if (seg.is_gadget) {
            run.push_back(seg.gadget);
        } else {
            flush();
            for (const Gate& g : seg.raw) out.push(g);
        }
    }
    flush();
    return out;
}

bool is_known_pass(const std::string& name) {
    return name == "detect-resynth" || name == "pair-reduce" || name == "merge-rotations" ||
           name == "cancel-inverses" || name == "commute-cancel" || name == "euler-1q";
}

Circuit apply_pass(const Circuit& c, const std::string& name, peephole::RewriteLog* log) {
    if (name == "detect-resynth") {
        Circuit out = synth::resynth_gadgets(c);
        if (log && !out.gates_equal(c)) log->push_back({name, 0, c.gates(), out.gates()});
        return out;
    }
    if (name == "pair-reduce") {
        Circuit out = pair_reduce(c);
        if (log && !out.gates_equal(c)) log->push_back({name, 0, c.gates(), out.gates()});
        return out;
    }
    if (name == "merge-rotations") return peephole::merge_rotations(c, log);
    if (name == "cancel-inverses") return peephole::cancel_inverses(c, log);
    if (name == "commute-cancel") return peephole::commute_and_cancel(c, log);
    if (name == "euler-1q") return peephole::euler_1q(c, peephole::EulerBasis::ZXZ, 4, log);
    throw Error("unknown pass '" + name + "'");
}

std::vector<std::string> standard_pipeline() {
    std::vector<std::string> once{"detect-resynth", "pair-reduce",    "commute-cancel",
                                  "merge-rotations", "cancel-inverses", "euler-1q"};
    std::vector<std::string> out = once;
    out.insert(out.end(), once.begin(), once.end());
    return out;
}

std::pair<Circuit, PassReport> run_pipeline(const Circuit& input,
                                            const std::vector<std::string>& passes,
                                            OracleMode oracle, const std::string& name) {
    for (const auto& p : passes)
        if (!is_known_pass(p)) throw Error("unknown pass '" + p + "'");

    PassReport report;
    report.circuit_name = name;
    report.g_in = input.two_qubit_count();
    report.d_in = input.two_qubit_depth();

    Circuit current = input;
    for (const auto& p : passes) {
        size_t log_before = report.rewrite_log.size();
        auto t0 = std::chrono::steady_clock::now();
        current = apply_pass(current, p, &report.rewrite_log);
        auto t1 = std::chrono::steady_clock::now();
        PassMetrics m;
        m.name = p;
        m.two_qubit_count = current.two_qubit_count();
        m.two_qubit_depth = current.two_qubit_depth();
        m.total_gates = current.size();
        m.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        m.rewrites = report.rewrite_log.size() - log_before;
        report.per_pass.push_back(std::move(m));
    }
    report.g_out = current.two_qubit_count();
    report.d_out = current.two_qubit_depth();

    if (oracle == OracleMode::Off) {
        report.verdict = OracleVerdict::Off;
    } else if (oracle == OracleMode::Auto && input.width() > 10) {
        report.verdict = OracleVerdict::SkippedOverCap;
    } else {
        bool ok = sim::circuits_equiv(input, current, 1e-8);
        report.verdict = ok ? OracleVerdict::Checked : OracleVerdict::Failed;
    }
    return {current, report};
}

std::string report_json(const PassReport& r) {
    nlohmann::json j;
    j["schema"] = 1;
    j["name"] = r.circuit_name;
    j["g_in"] = r.g_in;
    j["d_in"] = r.d_in;
    j["g_out"] = r.g_out;
    j["d_out"] = r.d_out;
    switch (r.verdict) {
        case OracleVerdict::Checked: j["verdict"] = "checked"; break;
        case OracleVerdict::Failed: j["verdict"] = "failed"; break;
        case OracleVerdict::SkippedOverCap: j["verdict"] = "skipped-over-cap"; break;
        case OracleVerdict::Off: j["verdict"] = "off"; break;
    }
    j["passes"] = nlohmann::json::array();
    for (const auto& m : r.per_pass) {
        j["passes"].push_back({{"name", m.name},
                               {"two_qubit_count", m.two_qubit_count},
                               {"two_qubit_depth", m.two_qubit_depth},
                               {"total_gates", m.total_gates},
                               {"wall_ms", m.wall_ms},
                               {"rewrites", m.rewrites}});
    }
    return j.dump(2);
}

Circuit parse_gadget_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::optional<uint32_t> width;
    std::vector<PauliGadget> gadgets;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);
        if (!width) {
            if (line.rfind("width=", 0) != 0)
                throw Error("gadget list: expected 'width=N' on the first line");
            width = static_cast<uint32_t>(std::stoul(line.substr(6)));
            if (*width == 0) throw Error("gadget list: width must be positive");
            continue;
        }
        auto sp = line.find_last_of(" \t");
        if (sp == std::string::npos)
            throw Error("gadget list line " + std::to_string(lineno) +
                        ": expected '<angle> <string>'");
        double angle = qasm::parse_angle_expr(line.substr(0, sp));
        PauliString s(line.substr(sp + 1));
        if (s.length() != *width)
            throw Error("gadget list line " + std::to_string(lineno) +
                        ": string length differs from width");
        gadgets.emplace_back(angle, std::move(s));
    }
    if (!width) throw Error("gadget list: empty input");
    if (gadgets.empty()) return Circuit(*width);
    return synth::synth_chain(gadgets, synth::ChainStrategy::Naive);
}

}  // namespace pgopt::pipeline
