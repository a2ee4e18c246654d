// SPDX-License-Identifier: Apache-2.0
#include "pgopt/reduce.hpp"

#include "pgopt/clifford1q.hpp"
#include "pgopt/peephole.hpp"
#include "pgopt/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pgopt::reduce {

namespace {

void check_widths(const PauliGadget& a, const PauliGadget& b) {
    if (a.string.length() != b.string.length()) throw Error("gadget width mismatch");
}

// Appends g to the conjugation and updates both gadgets: the inner strings
// evolve by sigma -> g sigma g^dag, a sign flips the angle.
void conjugate(ConjugatedPair& p, const Gate& g) {
    p.conj.push(g);
    auto apply_1q = [&](PauliGadget& gd) {
        auto [sym, sign] = conj_1q(g.kind, gd.string[g.qubit()]);
        gd.string[g.qubit()] = sym;
        if (sign < 0) gd.angle = -gd.angle;
    };
    auto apply_cx = [&](PauliGadget& gd) {
        CxConj r = conj_cx(gd.string[g.control()], gd.string[g.target()]);
        gd.string[g.control()] = r.control;
        gd.string[g.target()] = r.target;
        if (r.sign < 0) gd.angle = -gd.angle;
    };
    if (g.two_qubit()) {
        apply_cx(p.left);
        apply_cx(p.right);
    } else {
        apply_1q(p.left);
        apply_1q(p.right);
    }
}

// CY(c,t) = Sdg_t ; CX(c,t) ; S_t and CZ(c,t) = H_t ; CX ; H_t, built from
// the base gate set. Each counts as one two-qubit gate.
void conjugate_cy(ConjugatedPair& p, uint32_t c, uint32_t t) {
    conjugate(p, Gate::sdg(t));
    conjugate(p, Gate::cx(c, t));
    conjugate(p, Gate::s(t));
}

void conjugate_cz(ConjugatedPair& p, uint32_t c, uint32_t t) {
    conjugate(p, Gate::h(t));
    conjugate(p, Gate::cx(c, t));
    conjugate(p, Gate::h(t));
}

// One connector strips a Z at the control against both residual symbols at
// the target: CX covers {Z,Y}, CY covers {Z,X}, CZ covers {X,Y}.
void strip_with_connector(ConjugatedPair& p, uint32_t zq, uint32_t target) {
    Pauli a = p.left.string[target], b = p.right.string[target];
    auto in = [&](Pauli x) { return a == x || b == x; };
    if (!in(Pauli::X)) {
        conjugate(p, Gate::cx(zq, target));
    } else if (!in(Pauli::Y)) {
        conjugate_cy(p, zq, target);
    } else {
        conjugate_cz(p, zq, target);
    }
}

}  // namespace

ConjugatedPair eliminate_common(const PauliGadget& a, const PauliGadget& b) {
    check_widths(a, b);
    ConjugatedPair p{Circuit(static_cast<uint32_t>(a.string.length())), a, b};

    PauliString r = max_common_substring(a.string, b.string);
    auto rsup = r.support();
    if (rsup.empty()) return p;

    std::vector<uint32_t> residual;  // intersection outside r
    for (uint32_t i : intersection(a.string, b.string))
        if (r[i] == Pauli::I) residual.push_back(i);
    if (residual.empty() && rsup.size() == 1) return p;  // already just the retained qubit

    // basis layer: map every r symbol to Z inside the conjugation
    for (uint32_t q : rsup) {
        if (r[q] == Pauli::X) conjugate(p, Gate::h(q));
        if (r[q] == Pauli::Y) conjugate(p, Gate::v(q));
    }

    if (!residual.empty()) {
        // full strip: one connector per r qubit, targets round-robin
        for (size_t k = 0; k < rsup.size(); ++k)
            strip_with_connector(p, rsup[k], residual[k % residual.size()]);
    } else {
        // fold onto the retained shared qubit; it keeps its symbol
        uint32_t h = rsup.front();
        for (size_t k = 1; k < rsup.size(); ++k) conjugate(p, Gate::cx(rsup[k], h));
        if (r[h] == Pauli::X) conjugate(p, Gate::h(h));
        if (r[h] == Pauli::Y) conjugate(p, Gate::vdg(h));
    }
    return p;
}

ConjugatedPair normalize_y(ConjugatedPair p) {
    for (uint32_t i : intersection(p.left.string, p.right.string)) {
        Pauli a = p.left.string[i], b = p.right.string[i];
        bool ay = a == Pauli::Y, by = b == Pauli::Y;
        if (ay == by) continue;
        Pauli partner = ay ? b : a;
        if (partner == Pauli::X)
            conjugate(p, Gate::v(i));    // Y -> Z, X fixed
        else
            conjugate(p, Gate::sdg(i));  // Y -> X, Z fixed
    }
    return p;
}

ConjugatedPair eliminate_mismatch(ConjugatedPair p) {
    std::vector<uint32_t> mismatches;
    for (uint32_t i : intersection(p.left.string, p.right.string)) {
        Pauli a = p.left.string[i], b = p.right.string[i];
        if (a == b) continue;
        if (a == Pauli::Y || b == Pauli::Y)
            throw Error("eliminate_mismatch: Y in the intersection; normalize_y first");
        mismatches.push_back(i);
    }
    for (size_t k = 0; k + 1 < mismatches.size(); k += 2) {
        uint32_t i = mismatches[k], j = mismatches[k + 1];
        if (p.left.string[i] != p.left.string[j]) conjugate(p, Gate::h(i));
        conjugate(p, Gate::cx(i, j));
    }
    return p;
}

ConjugatedPair intermediate_form(const PauliGadget& a, const PauliGadget& b) {
    return eliminate_mismatch(normalize_y(eliminate_common(a, b)));
}

std::pair<bool, PauliGadget> fuse(const PauliGadget& a, const PauliGadget& b) {
    check_widths(a, b);
    if (!(a.string == b.string)) return {false, PauliGadget()};
    return {true, PauliGadget(normalize_angle(a.angle + b.angle), a.string)};
}

PairClass classify(const PauliGadget& a, const PauliGadget& b) {
    check_widths(a, b);
    return commutes(a.string, b.string) ? PairClass::Commute : PairClass::Euler;
}

std::array<double, 3> euler_exchange(double a1, double a2, double a3, const PauliString& s,
                                     const PauliString& t) {
    if (commutes(s, t)) throw Error("euler_exchange: strings commute; exchange is trivial there");

    constexpr double kDegTol = 1e-12;
    double mid = normalize_angle(a2);
    if (std::abs(mid) <= kDegTol)
        return {0.0, normalize_angle(a1 + a3), 0.0};
    if (std::abs(std::abs(mid) - std::numbers::pi) <= kDegTol)
        return {mid, normalize_angle(a3 - a1), 0.0};

    // reduce to the shared qubit: after intermediate_form the non-commuting
    // pair meets in exactly one index with symbols {Z,X}
    ConjugatedPair p = intermediate_form(PauliGadget(1.0, s), PauliGadget(1.0, t));
    auto shared = intersection(p.left.string, p.right.string);
    if (shared.size() != 1) throw Error("euler_exchange: reduction did not isolate one qubit");
    Pauli ls = p.left.string[shared[0]];
    double sa1 = p.left.angle < 0 ? -a1 : a1;
    double sa3 = p.left.angle < 0 ? -a3 : a3;
    double sa2 = p.right.angle < 0 ? -a2 : a2;

    GateKind sgate = ls == Pauli::Z ? GateKind::Rz : GateKind::Rx;
    GateKind tgate = ls == Pauli::Z ? GateKind::Rx : GateKind::Rz;
    auto m1 = gate_matrix_1q(sgate, sa1);
    auto m2 = gate_matrix_1q(tgate, sa2);
    auto m3 = gate_matrix_1q(sgate, sa3);
    cliff::Mat2 m = cliff::mul2(m3, cliff::mul2(m2, m1));
    peephole::EulerAngles e =
        ls == Pauli::Z ? peephole::decompose_xzx(m) : peephole::decompose_zxz(m);

    // undo the angle-sign mapping for the t/s/t output slots
    double b1 = p.right.angle < 0 ? -e.a1 : e.a1;
    double b2 = p.left.angle < 0 ? -e.a2 : e.a2;
    double b3 = p.right.angle < 0 ? -e.a3 : e.a3;
    return {normalize_angle(b1), normalize_angle(b2), normalize_angle(b3)};
}

Circuit pair_synth(const PauliGadget& a, const PauliGadget& b) {
    check_widths(a, b);
    const uint32_t width = static_cast<uint32_t>(a.string.length());
    if (a.string.trivial() || b.string.trivial()) throw Error("pair_synth: trivial string");

    if (auto [ok, fused] = fuse(a, b); ok) {
        Circuit out(width);
        if (std::abs(fused.angle) <= 1e-12) return out;
        return synth::synth_tree(fused);
    }

    ConjugatedPair p = intermediate_form(a, b);
    Circuit out = p.conj;
    out.append(synth::synth_tree(p.left));
    out.append(synth::synth_tree(p.right));
    out.append(p.conj.dagger());
    return out;
}

}  // namespace pgopt::reduce
