// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgopt/circuit.hpp"
#include "pgopt/sim.hpp"
#include "support.hpp"

using namespace pgopt;

TEST_CASE("two_qubit_count basics") {
    Circuit c(3);
    CHECK(c.two_qubit_count() == 0);
    c.push(Gate::h(0));
    c.push(Gate::cx(0, 1));
    c.push(Gate::cx(1, 2));
    CHECK(c.two_qubit_count() == 2);
}

TEST_CASE("two_qubit_depth counts only CX along paths") {
    Circuit c(3);
    c.push(Gate::h(0));
    c.push(Gate::rz(0.4, 1));
    CHECK(c.two_qubit_depth() == 0);

    // chain through a shared wire
    c.push(Gate::cx(0, 1));
    c.push(Gate::h(1));
    c.push(Gate::cx(1, 2));
    CHECK(c.two_qubit_depth() == 2);

    // parallel CX on disjoint wires adds no depth
    Circuit d(4);
    d.push(Gate::cx(0, 1));
    d.push(Gate::cx(2, 3));
    CHECK(d.two_qubit_depth() == 1);
    CHECK(d.two_qubit_count() == 2);
}

TEST_CASE("depth never exceeds count") {
    testsup::Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Circuit c = testsup::random_circuit(4, 30, rng);
        CHECK(c.two_qubit_depth() <= c.two_qubit_count());
    }
}

TEST_CASE("dagger basics") {
    Circuit empty(2);
    CHECK(empty.dagger().empty());

    Circuit c(1);
    c.push(Gate::s(0));
    Circuit d = c.dagger();
    REQUIRE(d.size() == 1);
    CHECK(d[0].kind == GateKind::Sdg);

    Circuit e(2);
    e.push(Gate::rz(0.3, 0));
    e.push(Gate::cx(0, 1));
    Circuit f = e.dagger();
    CHECK(f[0].kind == GateKind::CX);
    CHECK(f[1].kind == GateKind::Rz);
    CHECK(f[1].angle == -0.3);
    CHECK(f.dagger().gates_equal(e));
}

TEST_CASE("dagger inverts the unitary") {
    testsup::Rng rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        Circuit c = testsup::random_circuit(3, 20, rng);
        auto u = sim::unitary(compose(c, c.dagger()));
        CHECK(sim::equiv_up_to_phase(u, sim::UnitaryMatrix::identity(8), 1e-10));
        CHECK(sim::max_abs_diff(sim::unitary(c.dagger()), sim::adjoint(sim::unitary(c))) <
              1e-10);
    }
}

TEST_CASE("compose") {
    Circuit a(2), empty(2);
    a.push(Gate::h(0));
    CHECK(compose(a, empty).gates_equal(a));
    CHECK(compose(a, a).two_qubit_count() == 0);

    Circuit hh = compose(a, a);
    CHECK(sim::equiv_up_to_phase(sim::unitary(hh), sim::UnitaryMatrix::identity(4), 1e-12));

    Circuit w(3);
    CHECK_THROWS_AS((void)compose(a, w), Error);

    // product law: unitary(a;b) = unitary(b) * unitary(a)
    testsup::Rng rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        Circuit x = testsup::random_circuit(3, 12, rng);
        Circuit y = testsup::random_circuit(3, 12, rng);
        auto lhs = sim::unitary(compose(x, y));
        auto rhs = sim::multiply(sim::unitary(y), sim::unitary(x));
        CHECK(sim::max_abs_diff(lhs, rhs) < 1e-10);
    }

    // count additivity
    testsup::Rng rng2(5);
    Circuit x = testsup::random_circuit(4, 25, rng2);
    Circuit y = testsup::random_circuit(4, 25, rng2);
    CHECK(compose(x, y).two_qubit_count() == x.two_qubit_count() + y.two_qubit_count());
}

TEST_CASE("gate validation") {
    Circuit c(2);
    CHECK_THROWS_AS(c.push(Gate::h(2)), Error);
    CHECK_THROWS_AS(c.push(Gate::cx(0, 0)), Error);
    CHECK_THROWS_AS(c.push(Gate::cx(0, 5)), Error);
}
