// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgopt/pauli.hpp"
#include "pgopt/sim.hpp"
#include "support.hpp"

using namespace pgopt;

TEST_CASE("is_substring") {
    CHECK(is_substring(PauliString("IZII"), PauliString("XZYZ")));
    CHECK(is_substring(PauliString("IYIY"), PauliString("YYXY")));
    CHECK_FALSE(is_substring(PauliString("XZ"), PauliString("ZX")));
    CHECK_THROWS_AS((void)is_substring(PauliString("X"), PauliString("XX")), Error);
}

TEST_CASE("pointwise_mul") {
    CHECK(pointwise_mul(PauliString("IYIY"), PauliString("YYXY")).str() == "YIXI");
    PauliString s("XZYI");
    CHECK(pointwise_mul(s, s).trivial());
    CHECK(pointwise_mul(PauliString("XI"), PauliString("ZI")).str() == "YI");
}

TEST_CASE("intersection") {
    CHECK(intersection(PauliString("ZI"), PauliString("IX")).empty());
    auto full = intersection(PauliString("YYXY"), PauliString("XYYY"));
    CHECK(full == std::vector<uint32_t>{0, 1, 2, 3});
    CHECK(intersection(PauliString("XZ"), PauliString("II")).empty());
}

TEST_CASE("max_common_substring") {
    CHECK(max_common_substring(PauliString("YYXY"), PauliString("XYYY")).str() == "IYIY");
    PauliString s("XZYI");
    CHECK(max_common_substring(s, s) == s);
    CHECK(max_common_substring(PauliString("ZX"), PauliString("XZ")).trivial());

    testsup::Rng rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        PauliString a = testsup::random_string(5, rng);
        PauliString b = testsup::random_string(5, rng);
        PauliString r = max_common_substring(a, b);
        CHECK(is_substring(r, a));
        CHECK(is_substring(r, b));
        // r-conjugation is an involution on substrings
        CHECK(pointwise_mul(r, pointwise_mul(r, a)) == a);
    }
}

TEST_CASE("commutes") {
    CHECK_FALSE(commutes(PauliString("Z"), PauliString("X")));
    CHECK(commutes(PauliString("ZZ"), PauliString("XX")));
    CHECK(commutes(PauliString("YYXY"), PauliString("XYYY")));

    testsup::Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        PauliString a = testsup::random_string(4, rng);
        PauliString b = testsup::random_string(4, rng);
        CHECK(commutes(a, b) == commutes(b, a));
        CHECK(commutes(a, a));
    }
}

TEST_CASE("commutes agrees with the exponentials on up to 5 qubits") {
    testsup::Rng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        uint32_t w = 2 + static_cast<uint32_t>(rng.next(4));
        PauliString a = testsup::random_string(w, rng);
        PauliString b = testsup::random_string(w, rng);
        auto ua = sim::gadget_unitary(PauliGadget(0.7, a));
        auto ub = sim::gadget_unitary(PauliGadget(1.1, b));
        double diff = sim::max_abs_diff(sim::multiply(ua, ub), sim::multiply(ub, ua));
        CHECK(commutes(a, b) == (diff < 1e-10));
    }
}

TEST_CASE("cx_pair_cost") {
    CHECK(cx_pair_cost(PauliString("YYXY"), PauliString("XYYY")) == 6);
    // equal strings fuse: one gadget's cost
    CHECK(cx_pair_cost(PauliString("ZZ"), PauliString("ZZ")) == 2);
    // disjoint single-qubit rotations need no CX
    CHECK(cx_pair_cost(PauliString("ZI"), PauliString("IZ")) == 0);
    // shared qubit, no residual intersection: the retained fold
    CHECK(cx_pair_cost(PauliString("ZZII"), PauliString("ZIXI")) == 4);
    CHECK_THROWS_AS((void)cx_pair_cost(PauliString("II"), PauliString("ZZ")), Error);
}

TEST_CASE("conjugation tables match the matrices") {
    auto pauli_matrix = [](Pauli p) -> std::array<cplx, 4> {
        switch (p) {
            case Pauli::I: return {1, 0, 0, 1};
            case Pauli::X: return {0, 1, 1, 0};
            case Pauli::Y: return {0, cplx(0, -1), cplx(0, 1), 0};
            case Pauli::Z: return {1, 0, 0, -1};
        }
        return {};
    };
    const GateKind gates[] = {GateKind::H, GateKind::X, GateKind::Z, GateKind::S,
                              GateKind::Sdg, GateKind::V, GateKind::Vdg};
    const Pauli ps[] = {Pauli::X, Pauli::Y, Pauli::Z};
    for (GateKind g : gates) {
        for (Pauli p : ps) {
            auto [q, sign] = conj_1q(g, p);
            auto gm = gate_matrix_1q(g);
            auto pm = pauli_matrix(p);
            auto qm = pauli_matrix(q);
            // g p g^dag == sign * q
            std::array<cplx, 4> gp{}, gpgd{};
            auto mul = [](const std::array<cplx, 4>& a, const std::array<cplx, 4>& b) {
                return std::array<cplx, 4>{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                                           a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
            };
            std::array<cplx, 4> gd{std::conj(gm[0]), std::conj(gm[2]), std::conj(gm[1]),
                                   std::conj(gm[3])};
            gp = mul(gm, pm);
            gpgd = mul(gp, gd);
            for (int i = 0; i < 4; ++i)
                CHECK(std::abs(gpgd[i] - double(sign) * qm[i]) < 1e-12);
        }
    }
}

TEST_CASE("cx conjugation matches the matrices") {
    // via the 4x4 oracle: CX (pc ⊗ pt) CX = sign (pc' ⊗ pt')
    for (int ic = 0; ic < 4; ++ic) {
        for (int it = 0; it < 4; ++it) {
            Pauli pc = static_cast<Pauli>(ic), pt = static_cast<Pauli>(it);
            CxConj r = conj_cx(pc, pt);
            // a gadget at angle pi is -i sigma, so conjugation is testable
            PauliString lhs(2), rhs(2);
            lhs[1] = pc;
            lhs[0] = pt;
            rhs[1] = r.control;
            rhs[0] = r.target;
            Circuit cx(2);
            cx.push(Gate::cx(1, 0));
            auto cxm = sim::unitary(cx);
            auto sig = sim::gadget_unitary(PauliGadget(3.141592653589793, lhs));  // -i sigma
            auto conj = sim::multiply(sim::multiply(cxm, sig), cxm);
            auto expect = sim::gadget_unitary(
                PauliGadget(double(r.sign) * 3.141592653589793, rhs));
            CHECK(sim::max_abs_diff(conj, expect) < 1e-12);
        }
    }
}
