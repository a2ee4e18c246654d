// SPDX-License-Identifier: Apache-2.0
#include "pgopt/peephole.hpp"

#include "pgopt/clifford1q.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>

namespace pgopt::peephole {

namespace {

constexpr double kZeroTol = 1e-12;
constexpr double kCliffordTol = 1e-9;

// Splice on a working gate vector that records replayable log entries.
struct Splicer {
    std::vector<Gate>& gs;
    RewriteLog* log;
    const char* pass;

    void splice(size_t begin, size_t count, const std::vector<Gate>& inserted) {
        if (log) {
            RewriteLogEntry e;
            e.pass = pass;
            e.window_begin = begin;
            e.removed.assign(gs.begin() + begin, gs.begin() + begin + count);
            e.inserted = inserted;
            log->push_back(std::move(e));
        }
        gs.erase(gs.begin() + begin, gs.begin() + begin + count);
        gs.insert(gs.begin() + begin, inserted.begin(), inserted.end());
    }
};

// nearest later gate sharing a wire with gs[i], or SIZE_MAX
size_t next_on_wires(const std::vector<Gate>& gs, size_t i) {
    const Gate& g = gs[i];
    for (size_t j = i + 1; j < gs.size(); ++j) {
        if (gs[j].touches(g.q0)) return j;
        if (g.two_qubit() && gs[j].touches(g.q1)) return j;
    }
    return SIZE_MAX;
}

bool is_inverse_pair(const Gate& a, const Gate& b) {
    if (a.two_qubit() != b.two_qubit()) return false;
    if (a.q0 != b.q0 || a.q1 != b.q1) return false;
    if (is_rotation(a.kind))
        return a.kind == b.kind && std::abs(normalize_angle(a.angle + b.angle)) <= kZeroTol;
    return a.inverse().kind == b.kind;
}

// Rotations within 1e-9 of a multiple of pi/2 are treated as Clifford.
std::optional<std::vector<GateKind>> snap_rotation(const Gate& g) {
    if (!is_rotation(g.kind)) return std::nullopt;
    double steps = g.angle / (std::numbers::pi / 2);
    double rounded = std::round(steps);
    if (std::abs(steps - rounded) * (std::numbers::pi / 2) > kCliffordTol) return std::nullopt;
    int m = static_cast<int>(std::lround(rounded)) & 3;
    std::vector<GateKind> out;
    if (g.kind == GateKind::Rz) {
        if (m == 1) out = {GateKind::S};
        else if (m == 2) out = {GateKind::Z};
        else if (m == 3) out = {GateKind::Sdg};
    } else {
        if (m == 1) out = {GateKind::V};
        else if (m == 2) out = {GateKind::X};
        else if (m == 3) out = {GateKind::Vdg};
    }
    return out;
}

bool is_clifford_1q(const Gate& g) {
    if (g.two_qubit()) return false;
    if (!is_rotation(g.kind)) return true;
    return snap_rotation(g).has_value();
}

}  // namespace

Circuit replay(const Circuit& input, const RewriteLog& log) {
    Circuit out = input;
    for (const auto& e : log) {
        auto& gs = out.gates();
        gs.erase(gs.begin() + e.window_begin, gs.begin() + e.window_begin + e.removed.size());
        gs.insert(gs.begin() + e.window_begin, e.inserted.begin(), e.inserted.end());
    }
    return out;
}

Circuit merge_rotations(const Circuit& c, RewriteLog* log) {
    Circuit out = c;
    Splicer sp{out.gates(), log, "merge-rotations"};
    auto& gs = out.gates();
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < gs.size(); ++i) {
            if (!is_rotation(gs[i].kind)) continue;
            size_t j = next_on_wires(gs, i);
            if (j != SIZE_MAX && gs[j].kind == gs[i].kind && gs[j].q0 == gs[i].q0) {
                double sum = normalize_angle(gs[i].angle + gs[j].angle);
                sp.splice(j, 1, {});
                if (std::abs(sum) <= kZeroTol) {
                    sp.splice(i, 1, {});
                } else {
                    Gate merged = gs[i];
                    merged.angle = sum;
                    sp.splice(i, 1, {merged});
                }
                changed = true;
                break;
            }
            if (std::abs(normalize_angle(gs[i].angle)) <= kZeroTol) {
                sp.splice(i, 1, {});
                changed = true;
                break;
            }
        }
    }
    return out;
}

Circuit cancel_inverses(const Circuit& c, RewriteLog* log) {
    Circuit out = c;
    Splicer sp{out.gates(), log, "cancel-inverses"};
    auto& gs = out.gates();
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < gs.size(); ++i) {
            size_t j = next_on_wires(gs, i);
            if (j == SIZE_MAX) continue;
            if (gs[i].two_qubit()) {
                bool clean = true;
                for (size_t k = i + 1; k < j; ++k)
                    if (gs[k].touches(gs[i].q0) || gs[k].touches(gs[i].q1)) { clean = false; break; }
                if (!clean) continue;
            }
            if (!is_inverse_pair(gs[i], gs[j])) continue;
            sp.splice(j, 1, {});
            sp.splice(i, 1, {});
            changed = true;
            break;
        }
    }
    return out;
}

namespace {

cliff::Mat2 clifford_matrix(const Gate& g) {
    if (!is_rotation(g.kind)) return gate_matrix_1q(g.kind);
    auto word = snap_rotation(g);
    cliff::Mat2 m{1, 0, 0, 1};
    for (GateKind k : *word) m = cliff::mul2(gate_matrix_1q(k), m);
    return m;
}

// Cached window resynthesis keyed on phase-canonical quantized entries.
std::optional<cliff::TwoQubitForm> reduce_window(const cliff::Mat4& w) {
    using Key = std::array<long, 32>;
    static std::map<Key, std::optional<cliff::TwoQubitForm>> cache;

    int best = 0;
    double mag = -1;
    for (int i = 0; i < 16; ++i)
        if (std::abs(w[i]) > mag + 1e-9) { mag = std::abs(w[i]); best = i; }
    cplx ph = w[best] / std::abs(w[best]);
    Key key{};
    for (int i = 0; i < 16; ++i) {
        cplx v = w[i] / ph;
        key[2 * i] = std::lround(v.real() * 1e6);
        key[2 * i + 1] = std::lround(v.imag() * 1e6);
    }
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, cliff::reduce_two_qubit_clifford(w)).first;
    auto form = it->second;
    if (form) form->phase = cliff::phase_for(w, form->gates);
    return form;
}

}  // namespace

Circuit commute_and_cancel(const Circuit& c, RewriteLog* log) {
    Circuit out = c;
    Splicer sp{out.gates(), log, "commute-cancel"};
    auto& gs = out.gates();
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < gs.size() && !changed; ++i) {
            if (!gs[i].two_qubit()) continue;
            const uint32_t wc = gs[i].control(), wt = gs[i].target();

            cliff::Mat4 mid = cliff::kron({1, 0, 0, 1}, {1, 0, 0, 1});
            std::vector<size_t> window{i};
            std::vector<size_t> preskip;
            bool mid_c_dirty = false, mid_t_dirty = false;
            for (size_t j = i + 1; j < gs.size(); ++j) {
                const Gate& g = gs[j];
                bool on_c = g.touches(wc), on_t = g.touches(wt);
                if (!on_c && !on_t) continue;
                if (g.two_qubit()) {
                    bool same_pair = (g.control() == wc && g.target() == wt) ||
                                     (g.control() == wt && g.target() == wc);
                    if (!same_pair) break;
                    cliff::Mat4 w = cliff::mul4(cliff::cx_local(g.control() == wc), mid);
                    w = cliff::mul4(w, cliff::cx_local(gs[i].control() == wc));
                    auto form = reduce_window(w);
                    if (!form) break;
                    window.push_back(j);

                    std::vector<Gate> inserted;
                    for (size_t k : preskip) inserted.push_back(gs[k]);
                    for (const Gate& lg : form->gates) {
                        if (lg.two_qubit()) {
                            inserted.push_back(lg.q0 == 1 ? Gate::cx(wc, wt) : Gate::cx(wt, wc));
                        } else {
                            Gate real = lg;
                            real.q0 = real.q1 = (lg.q0 == 1 ? wc : wt);
                            inserted.push_back(real);
                        }
                    }
                    // remove consumed gates back to front, then insert
                    std::vector<size_t> consumed = window;
                    consumed.insert(consumed.end(), preskip.begin(), preskip.end());
                    std::sort(consumed.begin(), consumed.end());
                    for (auto it = consumed.rbegin(); it != consumed.rend(); ++it)
                        sp.splice(*it, 1, {});
                    sp.splice(i, 0, inserted);
                    out.add_phase(form->phase);
                    changed = true;
                    break;
                }
                if (is_clifford_1q(g)) {
                    cliff::Mat2 m = clifford_matrix(g);
                    mid = cliff::mul4(
                        on_c ? cliff::kron(m, {1, 0, 0, 1}) : cliff::kron({1, 0, 0, 1}, m), mid);
                    (on_c ? mid_c_dirty : mid_t_dirty) = true;
                    window.push_back(j);
                    continue;
                }
                bool commuting = (g.kind == GateKind::Rz && on_c && !mid_c_dirty) ||
                                 (g.kind == GateKind::Rx && on_t && !mid_t_dirty);
                if (!commuting) break;
                preskip.push_back(j);
            }
        }
    }
    return out;
}

EulerAngles decompose_zxz(const std::array<cplx, 4>& u) {
    // u = e^{i phase} Rz(a3) Rx(a2) Rz(a1)
    cplx det = u[0] * u[3] - u[1] * u[2];
    cplx s = std::exp(cplx(0.0, std::arg(det) / 2.0));
    std::array<cplx, 4> v{u[0] / s, u[1] / s, u[2] / s, u[3] / s};

    double a2 = 2.0 * std::atan2(std::abs(v[1]), std::abs(v[0]));
    double a1, a3;
    if (std::abs(v[1]) < 1e-9) {
        a3 = 0.0;
        a1 = -2.0 * std::arg(v[0]);
    } else if (std::abs(v[0]) < 1e-9) {
        a3 = 0.0;
        a1 = 2.0 * (std::arg(v[1]) + std::numbers::pi / 2);
    } else {
        double sum = -2.0 * std::arg(v[0]);
        double diff = -2.0 * (std::arg(v[1]) + std::numbers::pi / 2);
        a1 = (sum - diff) / 2.0;
        a3 = (sum + diff) / 2.0;
    }
    a1 = normalize_angle(a1);
    a2 = normalize_angle(a2);
    a3 = normalize_angle(a3);

    auto rz = [](double t) { return gate_matrix_1q(GateKind::Rz, t); };
    auto rx = [](double t) { return gate_matrix_1q(GateKind::Rx, t); };
    cliff::Mat2 rec = cliff::mul2(rz(a3), cliff::mul2(rx(a2), rz(a1)));
    cplx tr = std::conj(rec[0]) * u[0] + std::conj(rec[1]) * u[1] + std::conj(rec[2]) * u[2] +
              std::conj(rec[3]) * u[3];
    return {a1, a2, a3, std::arg(tr)};
}

EulerAngles decompose_xzx(const std::array<cplx, 4>& u) {
    cliff::Mat2 h = gate_matrix_1q(GateKind::H);
    return decompose_zxz(cliff::mul2(h, cliff::mul2(u, h)));
}

Circuit euler_1q(const Circuit& c, EulerBasis basis, size_t min_run, RewriteLog* log) {
    Circuit out(c.width());
    out.set_phase(c.global_phase());
    const auto& gs = c.gates();

    std::vector<int> run_of(gs.size(), -1);
    struct Run {
        uint32_t wire;
        std::vector<size_t> idx;
    };
    std::vector<Run> runs;
    {
        std::vector<int> open(c.width(), -1);
        for (size_t i = 0; i < gs.size(); ++i) {
            const Gate& g = gs[i];
            if (g.two_qubit()) {
                open[g.q0] = open[g.q1] = -1;
                continue;
            }
            if (open[g.q0] < 0) {
                open[g.q0] = static_cast<int>(runs.size());
                runs.push_back({g.q0, {}});
            }
            runs[open[g.q0]].idx.push_back(i);
            run_of[i] = open[g.q0];
        }
    }

    std::vector<bool> replace(runs.size(), false);
    std::vector<std::vector<Gate>> repl(runs.size());
    for (size_t r = 0; r < runs.size(); ++r) {
        if (runs[r].idx.size() < min_run) continue;
        cliff::Mat2 m{1, 0, 0, 1};
        for (size_t i : runs[r].idx)
            m = cliff::mul2(gate_matrix_1q(gs[i].kind, gs[i].angle), m);
        EulerAngles e = basis == EulerBasis::ZXZ ? decompose_zxz(m) : decompose_xzx(m);
        GateKind outer = basis == EulerBasis::ZXZ ? GateKind::Rz : GateKind::Rx;
        GateKind middle = basis == EulerBasis::ZXZ ? GateKind::Rx : GateKind::Rz;
        uint32_t q = runs[r].wire;
        std::vector<Gate> seq;
        if (std::abs(e.a1) > kZeroTol) seq.push_back({outer, e.a1, q, q});
        if (std::abs(e.a2) > kZeroTol) seq.push_back({middle, e.a2, q, q});
        if (std::abs(e.a3) > kZeroTol) seq.push_back({outer, e.a3, q, q});
        replace[r] = true;
        repl[r] = std::move(seq);
        out.add_phase(e.phase);
    }

    for (size_t i = 0; i < gs.size(); ++i) {
        int r = run_of[i];
        if (r < 0 || !replace[r]) {
            out.push(gs[i]);
            continue;
        }
        if (runs[r].idx.front() == i)
            for (const Gate& g : repl[r]) out.push(g);
    }

    // runs interleave across wires, so the log records one whole rewrite
    if (log && !out.gates_equal(c))
        log->push_back({"euler-1q", 0, gs, out.gates()});
    return out;
}

}  // namespace pgopt::peephole
