// SPDX-License-Identifier: Apache-2.0
#include "pgopt/clifford1q.hpp"

#include <cmath>
#include <map>

namespace pgopt::cliff {

Mat2 mul2(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat4 mul4(const Mat4& a, const Mat4& b) {
    Mat4 out{};
    for (int r = 0; r < 4; ++r)
        for (int k = 0; k < 4; ++k) {
            cplx v = a[r * 4 + k];
            if (v == cplx(0.0)) continue;
            for (int c = 0; c < 4; ++c) out[r * 4 + c] += v * b[k * 4 + c];
        }
    return out;
}

Mat4 kron(const Mat2& hi, const Mat2& lo) {
    Mat4 out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    out[((i << 1) | k) * 4 + ((j << 1) | l)] = hi[i * 2 + j] * lo[k * 2 + l];
    return out;
}

Mat4 adjoint4(const Mat4& m) {
    Mat4 out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[c * 4 + r] = std::conj(m[r * 4 + c]);
    return out;
}

namespace {

// phase-canonical form: multiply by a unit scalar so the largest-magnitude
// entry (first of them) becomes real positive
Mat2 canonical2(const Mat2& m) {
    int best = 0;
    double mag = -1.0;
    for (int i = 0; i < 4; ++i)
        if (std::abs(m[i]) > mag + 1e-9) { mag = std::abs(m[i]); best = i; }
    cplx ph = m[best] / std::abs(m[best]);
    Mat2 out;
    for (int i = 0; i < 4; ++i) out[i] = m[i] / ph;
    return out;
}

std::array<int, 8> key_of(const Mat2& m) {
    std::array<int, 8> k{};
    for (int i = 0; i < 4; ++i) {
        k[2 * i] = static_cast<int>(std::lround(m[i].real() * 1e6));
        k[2 * i + 1] = static_cast<int>(std::lround(m[i].imag() * 1e6));
    }
    return k;
}

std::vector<C1Element> build_c1() {
    const GateKind gens[] = {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::V,
                             GateKind::Vdg, GateKind::X, GateKind::Z};
    std::map<std::array<int, 8>, C1Element> seen;
    std::vector<C1Element> frontier;

    C1Element id{{1, 0, 0, 1}, {}};
    seen[key_of(canonical2(id.mat))] = id;
    frontier.push_back(id);

    while (!frontier.empty()) {
        std::vector<C1Element> next;
        for (const auto& e : frontier) {
            for (GateKind g : gens) {
                C1Element n;
                n.mat = canonical2(mul2(gate_matrix_1q(g), e.mat));
                n.word = e.word;
                n.word.push_back(g);
                auto k = key_of(n.mat);
                if (seen.emplace(k, n).second) next.push_back(n);
            }
        }
        frontier = std::move(next);
    }
    std::vector<C1Element> out;
    out.reserve(seen.size());
    for (auto& [k, e] : seen) out.push_back(std::move(e));
    if (out.size() != 24) throw Error("single-qubit Clifford enumeration failed");
    return out;
}

const std::map<std::array<int, 8>, size_t>& c1_index() {
    static const auto idx = [] {
        std::map<std::array<int, 8>, size_t> m;
        const auto& tab = c1_table();
        for (size_t i = 0; i < tab.size(); ++i) m[key_of(tab[i].mat)] = i;
        return m;
    }();
    return idx;
}

constexpr cplx O = cplx(0.0), l = cplx(1.0);
// local wires: bit 0 = target, bit 1 = control
const Mat4 kCxCT{l, O, O, O,  O, l, O, O,  O, O, O, l,  O, O, l, O};
const Mat4 kCxTC{l, O, O, O,  O, O, O, l,  O, O, l, O,  O, l, O, O};

// operator Schmidt split across (bit1 | bit0): rank 1 iff local
std::optional<std::pair<Mat2, Mat2>> split_local(const Mat4& w) {
    // R[(i,j)][(k,l)] = w[(i<<1|k)][(j<<1|l)]
    std::array<cplx, 16> r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l2 = 0; l2 < 2; ++l2)
                    r[(i * 2 + j) * 4 + (k * 2 + l2)] = w[((i << 1) | k) * 4 + ((j << 1) | l2)];
    // pivot row
    int pr = -1;
    double best = 1e-7;
    for (int row = 0; row < 4; ++row) {
        double m = 0;
        for (int c = 0; c < 4; ++c) m = std::max(m, std::abs(r[row * 4 + c]));
        if (m > best) { best = m; pr = row; }
    }
    if (pr < 0) return std::nullopt;
    int pc = 0;
    for (int c = 1; c < 4; ++c)
        if (std::abs(r[pr * 4 + c]) > std::abs(r[pr * 4 + pc])) pc = c;
    // rank-1 test: r = a * b^T with a = column pc, b = row pr / pivot
    cplx pivot = r[pr * 4 + pc];
    for (int row = 0; row < 4; ++row)
        for (int c = 0; c < 4; ++c) {
            cplx expect = r[row * 4 + pc] * r[pr * 4 + c] / pivot;
            if (std::abs(expect - r[row * 4 + c]) > 1e-6) return std::nullopt;
        }
    Mat2 a, b;
    for (int row = 0; row < 4; ++row) a[row] = r[row * 4 + pc];
    for (int c = 0; c < 4; ++c) b[c] = r[pr * 4 + c] / pivot;
    // normalize a to unitary scale: |det| = 1
    cplx det = a[0] * a[3] - a[1] * a[2];
    double scale = std::sqrt(std::abs(det));
    if (scale < 1e-9) return std::nullopt;
    for (auto& v : a) v /= scale;
    for (auto& v : b) v *= scale;
    return std::make_pair(a, b);  // w = kron(a on bit1, b on bit0)
}

double phase_between(const Mat4& target, const Mat4& built) {
    cplx tr = 0;
    for (int i = 0; i < 16; ++i) tr += std::conj(built[i]) * target[i];
    return std::arg(tr);
}

bool matches_up_to_phase(const Mat4& target, const Mat4& built, double phase) {
    cplx p = std::exp(cplx(0.0, phase));
    for (int i = 0; i < 16; ++i)
        if (std::abs(target[i] - p * built[i]) > 1e-7) return false;
    return true;
}

Mat4 build_product(const std::vector<Gate>& gates) {
    Mat4 built = kron({1, 0, 0, 1}, {1, 0, 0, 1});
    for (const Gate& g : gates) {
        if (g.two_qubit()) {
            built = mul4(g.q0 == 1 ? kCxCT : kCxTC, built);
        } else {
            Mat2 m = gate_matrix_1q(g.kind, g.angle);
            built = mul4(g.q0 == 1 ? kron(m, {1, 0, 0, 1}) : kron({1, 0, 0, 1}, m), built);
        }
    }
    return built;
}

}  // namespace

const std::vector<C1Element>& c1_table() {
    static const std::vector<C1Element> tab = build_c1();
    return tab;
}

std::optional<std::pair<std::vector<GateKind>, double>> c1_word(const Mat2& u) {
    Mat2 cu = canonical2(u);
    auto it = c1_index().find(key_of(cu));
    if (it == c1_index().end()) return std::nullopt;
    const auto& e = c1_table()[it->second];
    // u = e^{i phi} * e.mat
    cplx tr = std::conj(e.mat[0]) * u[0] + std::conj(e.mat[1]) * u[1] +
              std::conj(e.mat[2]) * u[2] + std::conj(e.mat[3]) * u[3];
    return std::make_pair(e.word, std::arg(tr));
}

std::optional<TwoQubitForm> reduce_two_qubit_clifford(const Mat4& w) {
    // cost 0: purely local
    if (auto loc = split_local(w)) {
        auto wc = c1_word(loc->first);
        auto wt = c1_word(loc->second);
        if (wc && wt) {
            TwoQubitForm f;
            f.cx_count = 0;
            for (GateKind k : wc->first) f.gates.push_back({k, 0.0, 1, 1});
            for (GateKind k : wt->first) f.gates.push_back({k, 0.0, 0, 0});
            Mat4 built = build_product(f.gates);
            f.phase = phase_between(w, built);
            if (matches_up_to_phase(w, built, f.phase)) return f;
        }
    }

    // cost 1: W = L2 * CX_o * L1 for some locals; search L1 over C1 x C1
    const auto& tab = c1_table();
    for (int o = 0; o < 2; ++o) {
        const Mat4& cx = o == 0 ? kCxCT : kCxTC;
        for (size_t a = 0; a < tab.size(); ++a) {
            for (size_t b = 0; b < tab.size(); ++b) {
                Mat4 l1 = kron(tab[a].mat, tab[b].mat);
                Mat4 v = mul4(w, adjoint4(mul4(cx, l1)));
                auto loc = split_local(v);
                if (!loc) continue;
                auto wc = c1_word(loc->first);
                auto wt = c1_word(loc->second);
                if (!wc || !wt) continue;
                TwoQubitForm f;
                f.cx_count = 1;
                for (GateKind k : tab[a].word) f.gates.push_back({k, 0.0, 1, 1});
                for (GateKind k : tab[b].word) f.gates.push_back({k, 0.0, 0, 0});
                f.gates.push_back(o == 0 ? Gate::cx(1, 0) : Gate::cx(0, 1));
                for (GateKind k : wc->first) f.gates.push_back({k, 0.0, 1, 1});
                for (GateKind k : wt->first) f.gates.push_back({k, 0.0, 0, 0});
                Mat4 built = build_product(f.gates);
                f.phase = phase_between(w, built);
                if (!matches_up_to_phase(w, built, f.phase)) continue;
                return f;
            }
        }
    }
    return std::nullopt;
}

const Mat4& cx_local(bool control_on_bit1) {
    return control_on_bit1 ? kCxCT : kCxTC;
}

Mat4 product_local(const std::vector<Gate>& gates) {
    return build_product(gates);
}

double phase_for(const Mat4& w, const std::vector<Gate>& gates) {
    return phase_between(w, build_product(gates));
}

}  // namespace pgopt::cliff
