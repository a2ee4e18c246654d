// SPDX-License-Identifier: Apache-2.0
#include "pgopt/sim.hpp"

#include <cmath>

namespace pgopt::sim {

UnitaryMatrix UnitaryMatrix::identity(size_t d) {
    UnitaryMatrix m(d);
    for (size_t i = 0; i < d; ++i) m.at(i, i) = 1.0;
    return m;
}

UnitaryMatrix multiply(const UnitaryMatrix& lhs, const UnitaryMatrix& rhs) {
    if (lhs.dim != rhs.dim) throw Error("multiply: dimension mismatch");
    const size_t d = lhs.dim;
    UnitaryMatrix out(d);
#pragma omp parallel for schedule(static)
    for (long long r = 0; r < (long long)d; ++r) {
        for (size_t k = 0; k < d; ++k) {
            cplx v = lhs.at(r, k);
            if (v == cplx(0.0)) continue;
            const cplx* row = &rhs.a[k * d];
            cplx* orow = &out.a[size_t(r) * d];
            for (size_t c = 0; c < d; ++c) orow[c] += v * row[c];
        }
    }
    return out;
}

UnitaryMatrix adjoint(const UnitaryMatrix& m) {
    UnitaryMatrix out(m.dim);
    for (size_t r = 0; r < m.dim; ++r)
        for (size_t c = 0; c < m.dim; ++c) out.at(c, r) = std::conj(m.at(r, c));
    return out;
}

double max_abs_diff(const UnitaryMatrix& x, const UnitaryMatrix& y) {
    if (x.dim != y.dim) throw Error("max_abs_diff: dimension mismatch");
    double best = 0.0;
    for (size_t i = 0; i < x.a.size(); ++i) best = std::max(best, std::abs(x.a[i] - y.a[i]));
    return best;
}

// M <- (g on qubit q) * M. Row pairs (r, r | bit) mix; each pair touches two
// contiguous rows, so the row loop parallelizes cleanly.
static void apply_1q_rows(UnitaryMatrix& m, uint32_t q, const std::array<cplx, 4>& g,
                          bool parallel) {
    const size_t d = m.dim;
    const size_t bit = size_t(1) << q;
#pragma omp parallel for schedule(static) if (parallel)
    for (long long r0 = 0; r0 < (long long)d; ++r0) {
        if (r0 & bit) continue;
        cplx* row0 = &m.a[size_t(r0) * d];
        cplx* row1 = &m.a[(size_t(r0) | bit) * d];
        for (size_t c = 0; c < d; ++c) {
            cplx a = row0[c], b = row1[c];
            row0[c] = g[0] * a + g[1] * b;
            row1[c] = g[2] * a + g[3] * b;
        }
    }
}

// M <- CX * M: swap row pairs where the control bit is set.
static void apply_cx_rows(UnitaryMatrix& m, uint32_t control, uint32_t target, bool parallel) {
    const size_t d = m.dim;
    const size_t cbit = size_t(1) << control, tbit = size_t(1) << target;
#pragma omp parallel for schedule(static) if (parallel)
    for (long long r = 0; r < (long long)d; ++r) {
        if (!(r & cbit) || (r & tbit)) continue;
        cplx* row0 = &m.a[size_t(r) * d];
        cplx* row1 = &m.a[(size_t(r) | tbit) * d];
        for (size_t c = 0; c < d; ++c) std::swap(row0[c], row1[c]);
    }
}

void apply_gate(UnitaryMatrix& m, const Gate& g, Engine engine) {
    bool parallel = engine == Engine::Parallel;
    if (g.two_qubit())
        apply_cx_rows(m, g.control(), g.target(), parallel);
    else
        apply_1q_rows(m, g.qubit(), gate_matrix_1q(g.kind, g.angle), parallel);
}

static void check_cap(uint32_t width) {
    if (width > kOracleMaxQubits) throw Error("oracle limit: circuit wider than 12 qubits");
    if (width == 0) throw Error("oracle: zero-width circuit");
}

UnitaryMatrix unitary(const Circuit& c, Engine engine) {
    check_cap(c.width());
    UnitaryMatrix m = UnitaryMatrix::identity(size_t(1) << c.width());
    for (const Gate& g : c.gates()) apply_gate(m, g, engine);
    if (c.global_phase() != 0.0) {
        cplx p = std::exp(cplx(0.0, c.global_phase()));
        for (cplx& v : m.a) v *= p;
    }
    return m;
}

UnitaryMatrix unitary(const Circuit& c) {
    return unitary(c, c.width() >= 7 ? Engine::Parallel : Engine::Serial);
}

UnitaryMatrix gadget_unitary(const PauliGadget& g, Engine engine) {
    const uint32_t n = static_cast<uint32_t>(g.string.length());
    check_cap(n);
    const size_t d = size_t(1) << n;

    // sigma_s maps |x> to phase(x) |x ^ mask|, with mask from X/Y positions.
    size_t mask = 0;
    for (uint32_t i = 0; i < n; ++i) {
        Pauli p = g.string[i];
        if (p == Pauli::X || p == Pauli::Y) mask |= size_t(1) << i;
    }
    const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
    UnitaryMatrix m(d);
    bool parallel = engine == Engine::Parallel;
#pragma omp parallel for schedule(static) if (parallel)
    for (long long x = 0; x < (long long)d; ++x) {
        cplx phase = 1.0;
        for (uint32_t i = 0; i < n; ++i) {
            bool bit = (x >> i) & 1;
            switch (g.string[i]) {
                case Pauli::Z: if (bit) phase = -phase; break;
                case Pauli::Y: phase *= bit ? cplx(0, -1) : cplx(0, 1); break;
                default: break;
            }
        }
        // cos(t/2) I - i sin(t/2) sigma_s
        m.at(size_t(x), size_t(x)) += c;
        m.at(size_t(x) ^ mask, size_t(x)) += cplx(0, -s) * phase;
    }
    return m;
}

UnitaryMatrix gadget_unitary(const PauliGadget& g) {
    return gadget_unitary(g, g.string.length() >= 7 ? Engine::Parallel : Engine::Serial);
}

bool equiv_up_to_phase(const UnitaryMatrix& a, const UnitaryMatrix& b, double tol) {
    if (a.dim != b.dim) throw Error("equiv_up_to_phase: dimension mismatch");
    // arg of tr(b^dag a) without forming the product
    cplx tr = 0.0;
    for (size_t i = 0; i < a.a.size(); ++i) tr += std::conj(b.a[i]) * a.a[i];
    cplx phase;
    if (std::abs(tr) > 1e-9 * double(a.dim)) {
        phase = tr / std::abs(tr);
    } else {
        // fall back to the largest-magnitude entry
        size_t best = 0;
        double mag = -1.0;
        for (size_t i = 0; i < a.a.size(); ++i)
            if (std::abs(a.a[i]) > mag) { mag = std::abs(a.a[i]); best = i; }
        if (std::abs(b.a[best]) < 1e-12) return false;
        cplx q = a.a[best] / b.a[best];
        if (std::abs(q) < 1e-12) return false;
        phase = q / std::abs(q);
    }
    for (size_t i = 0; i < a.a.size(); ++i)
        if (std::abs(a.a[i] - phase * b.a[i]) > tol) return false;
    return true;
}

bool circuits_equiv(const Circuit& a, const Circuit& b, double tol) {
    return equiv_up_to_phase(unitary(a), unitary(b), tol);
}

}  // namespace pgopt::sim
