// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgopt/reduce.hpp"
#include "pgopt/rules.hpp"
#include "pgopt/sim.hpp"
#include "pgopt/synth.hpp"
#include "support.hpp"

#include <numbers>

using namespace pgopt;
using namespace pgopt::reduce;

namespace {

// oracle for the ConjugatedPair contract
bool pair_contract_holds(const PauliGadget& a, const PauliGadget& b, const ConjugatedPair& p,
                         double tol) {
    Circuit rebuilt = p.conj;
    if (!p.left.string.trivial())
        rebuilt.append(synth::synth_tree(p.left));
    else
        rebuilt.add_phase(-p.left.angle / 2);
    if (!p.right.string.trivial())
        rebuilt.append(synth::synth_tree(p.right));
    else
        rebuilt.add_phase(-p.right.angle / 2);
    rebuilt.append(p.conj.dagger());
    auto lhs = sim::multiply(sim::gadget_unitary(b), sim::gadget_unitary(a));
    return sim::equiv_up_to_phase(sim::unitary(rebuilt), lhs, tol);
}

}  // namespace

TEST_CASE("fuse") {
    auto [ok, f] = fuse(PauliGadget(0.3, "XZ"), PauliGadget(0.4, "XZ"));
    CHECK(ok);
    CHECK(f.angle == doctest::Approx(0.7));

    auto [ok2, f2] = fuse(PauliGadget(0.5, "XZ"), PauliGadget(-0.5, "XZ"));
    CHECK(ok2);
    CHECK(f2.angle == doctest::Approx(0.0));

    auto [ok3, f3] = fuse(PauliGadget(0.3, "XZ"), PauliGadget(0.4, "ZX"));
    CHECK_FALSE(ok3);
}

TEST_CASE("eliminate_common strips the worked example") {
    PauliGadget a(0.3, "YYXY"), b(0.7, "XYYY");
    ConjugatedPair p = eliminate_common(a, b);
    CHECK(p.left.string.str() == "YIXI");
    CHECK(p.right.string.str() == "XIYI");
    CHECK(pair_contract_holds(a, b, p, 1e-10));
}

TEST_CASE("eliminate_common leaves trivial overlap alone") {
    PauliGadget a(0.3, "ZX"), b(0.7, "XZ");
    ConjugatedPair p = eliminate_common(a, b);
    CHECK(p.conj.empty());
    CHECK(p.left.string == a.string);
    CHECK(p.right.string == b.string);
}

TEST_CASE("eliminate_common oracle on random pairs") {
    testsup::Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        PauliGadget a(rng.angle(), testsup::random_string(5, rng));
        PauliGadget b(rng.angle(), testsup::random_string(5, rng));
        ConjugatedPair p = eliminate_common(a, b);
        CHECK(pair_contract_holds(a, b, p, 1e-9));
    }
}

TEST_CASE("normalize_y clears mixed-Y intersections") {
    ConjugatedPair p{Circuit(4), PauliGadget(0.3, "YIXI"), PauliGadget(0.7, "XIYI")};
    p = normalize_y(p);
    CHECK(p.left.string.str() == "ZIXI");
    CHECK(p.right.string.str() == "XIZI");

    // no Y anywhere: identity transformation
    ConjugatedPair q{Circuit(2), PauliGadget(0.3, "ZX"), PauliGadget(0.7, "XZ")};
    q = normalize_y(q);
    CHECK(q.conj.empty());

    testsup::Rng rng(5);
    for (int trial = 0; trial < 15; ++trial) {
        PauliGadget a(rng.angle(), testsup::random_string(4, rng));
        PauliGadget b(rng.angle(), testsup::random_string(4, rng));
        ConjugatedPair r{Circuit(4), a, b};
        r = normalize_y(r);
        for (uint32_t i : intersection(r.left.string, r.right.string)) {
            bool ly = r.left.string[i] == Pauli::Y, ry = r.right.string[i] == Pauli::Y;
            CHECK(ly == ry);
        }
        CHECK(pair_contract_holds(a, b, r, 1e-9));
    }
}

TEST_CASE("eliminate_mismatch reduces to disjoint rotations") {
    ConjugatedPair p{Circuit(4), PauliGadget(0.3, "ZIXI"), PauliGadget(0.7, "XIZI")};
    p = eliminate_mismatch(p);
    CHECK(intersection(p.left.string, p.right.string).empty());
    CHECK(p.left.string.weight() == 1);
    CHECK(p.right.string.weight() == 1);

    // already small: unchanged
    ConjugatedPair q{Circuit(2), PauliGadget(0.3, "ZI"), PauliGadget(0.7, "XI")};
    q = eliminate_mismatch(q);
    CHECK(q.conj.empty());

    // Y present: error
    ConjugatedPair y{Circuit(2), PauliGadget(0.3, "YI"), PauliGadget(0.7, "XI")};
    CHECK_THROWS_AS((void)eliminate_mismatch(y), Error);
}

TEST_CASE("eliminate_mismatch oracle on all four 2-qubit case shapes") {
    const char* pairs[][2] = {{"ZZ", "XX"}, {"XX", "ZZ"}, {"ZX", "XZ"}, {"XZ", "ZX"}};
    for (auto [sa, sb] : pairs) {
        PauliGadget a(0.5, sa), b(1.2, sb);
        ConjugatedPair p{Circuit(2), a, b};
        p = eliminate_mismatch(p);
        CHECK(intersection(p.left.string, p.right.string).size() <= 1);
        CHECK(pair_contract_holds(a, b, p, 1e-10));
    }
}

TEST_CASE("intermediate_form reaches intersection at most 1") {
    PauliGadget a(0.3, "YYXY"), b(0.7, "XYYY");
    ConjugatedPair p = intermediate_form(a, b);
    CHECK(intersection(p.left.string, p.right.string).empty());
    CHECK(p.left.string.weight() == 1);
    CHECK(p.right.string.weight() == 1);
    CHECK(pair_contract_holds(a, b, p, 1e-10));

    // equal strings leave one retained fusable qubit
    PauliGadget c(0.3, "ZZZ"), d(0.4, "ZZZ");
    ConjugatedPair q = intermediate_form(c, d);
    auto shared = intersection(q.left.string, q.right.string);
    REQUIRE(shared.size() == 1);
    CHECK(q.left.string == q.right.string);
    CHECK(q.left.string.weight() == 1);

    testsup::Rng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        PauliGadget x(rng.angle(), testsup::random_string(6, rng));
        PauliGadget y(rng.angle(), testsup::random_string(6, rng));
        ConjugatedPair r = intermediate_form(x, y);
        CHECK(intersection(r.left.string, r.right.string).size() <= 1);
        CHECK(pair_contract_holds(x, y, r, 1e-9));
        // idempotent on its output pair
        ConjugatedPair r2 = intermediate_form(r.left, r.right);
        CHECK(r2.conj.empty());
        CHECK(r2.left.string == r.left.string);
        CHECK(r2.right.string == r.right.string);
    }
}

TEST_CASE("classify") {
    CHECK(classify(PauliGadget(1, "YYXY"), PauliGadget(1, "XYYY")) == PairClass::Commute);
    CHECK(classify(PauliGadget(1, "Z"), PauliGadget(1, "X")) == PairClass::Euler);
    CHECK(classify(PauliGadget(1, "XZ"), PauliGadget(1, "XZ")) == PairClass::Commute);
}

TEST_CASE("classified commuting pairs commute numerically") {
    testsup::Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        PauliGadget a(rng.angle(), testsup::random_string(4, rng));
        PauliGadget b(rng.angle(), testsup::random_string(4, rng));
        auto ua = sim::gadget_unitary(a);
        auto ub = sim::gadget_unitary(b);
        double diff = sim::max_abs_diff(sim::multiply(ua, ub), sim::multiply(ub, ua));
        if (classify(a, b) == PairClass::Commute)
            CHECK(diff < 1e-10);
        else
            CHECK(diff > 1e-6);
    }
}

namespace {

bool euler_exchange_holds(double a1, double a2, double a3, const PauliString& s,
                          const PauliString& t, double tol) {
    auto b = euler_exchange(a1, a2, a3, s, t);
    auto u = [&](double ang, const PauliString& str) {
        return sim::gadget_unitary(PauliGadget(ang, str));
    };
    auto lhs = sim::multiply(u(a3, s), sim::multiply(u(a2, t), u(a1, s)));
    auto rhs = sim::multiply(u(b[2], t), sim::multiply(u(b[1], s), u(b[0], t)));
    return sim::equiv_up_to_phase(lhs, rhs, tol);
}

}  // namespace

TEST_CASE("euler_exchange") {
    // symmetric triple on Z/X
    double h = std::numbers::pi / 2;
    auto b = euler_exchange(h, h, h, PauliString("Z"), PauliString("X"));
    CHECK(b[0] == doctest::Approx(h));
    CHECK(b[1] == doctest::Approx(h));
    CHECK(b[2] == doctest::Approx(h));
    CHECK(euler_exchange_holds(h, h, h, PauliString("Z"), PauliString("X"), 1e-10));

    // degenerate middle: gadgets fuse
    auto d = euler_exchange(0.4, 0.0, 0.3, PauliString("Z"), PauliString("X"));
    CHECK(d[0] == 0.0);
    CHECK(d[1] == doctest::Approx(0.7));
    CHECK(d[2] == 0.0);

    // pi middle: sign-flip branch, third angle zero
    CHECK(euler_exchange_holds(0.4, std::numbers::pi, 0.3, PauliString("Z"), PauliString("X"),
                               1e-10));
    auto e = euler_exchange(0.4, std::numbers::pi, 0.3, PauliString("Z"), PauliString("X"));
    CHECK(e[2] == 0.0);

    CHECK_THROWS_AS((void)euler_exchange(1, 1, 1, PauliString("ZZ"), PauliString("ZZ")), Error);

    testsup::Rng rng(11);
    int done = 0;
    while (done < 25) {
        PauliString s = testsup::random_string(3, rng);
        PauliString t = testsup::random_string(3, rng);
        if (commutes(s, t)) continue;
        CHECK(euler_exchange_holds(rng.angle(), rng.angle(), rng.angle(), s, t, 1e-9));
        ++done;
    }
}

TEST_CASE("pair_synth meets the cost and the oracle") {
    // the worked pair: 6 CX in 4 layers
    PauliGadget a(0.3, "YYXY"), b(0.7, "XYYY");
    Circuit c = pair_synth(a, b);
    CHECK(c.two_qubit_count() == 6);
    CHECK(c.two_qubit_depth() == 4);
    auto ref = sim::multiply(sim::gadget_unitary(b), sim::gadget_unitary(a));
    CHECK(sim::equiv_up_to_phase(sim::unitary(c), ref, 1e-10));

    // disjoint single-qubit strings: no CX
    Circuit d = pair_synth(PauliGadget(0.3, "ZI"), PauliGadget(0.7, "IZ"));
    CHECK(d.two_qubit_count() == 0);

    testsup::Rng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        PauliGadget x(rng.angle(), testsup::random_string(5, rng));
        PauliGadget y(rng.angle(), testsup::random_string(5, rng));
        Circuit pc = pair_synth(x, y);
        CHECK(pc.two_qubit_count() == cx_pair_cost(x.string, y.string));
        size_t naive = 2 * (x.string.weight() - 1) + 2 * (y.string.weight() - 1);
        CHECK(pc.two_qubit_count() <= naive);
        auto want = sim::multiply(sim::gadget_unitary(y), sim::gadget_unitary(x));
        CHECK(sim::equiv_up_to_phase(sim::unitary(pc), want, 1e-9));
    }
}

TEST_CASE("rule library certifies") {
    auto failures = rules::certify_rules(1e-10);
    for (const auto& f : failures)
        MESSAGE("rule failed: ", f.rule, " width ", f.width, " angle ", f.angle);
    CHECK(failures.empty());
}

TEST_CASE("rule catalogue lists every rule") {
    std::string text = rules::catalogue_text();
    CHECK(rules::rule_library().size() == 21);
    for (const auto& r : rules::rule_library())
        CHECK(text.find(r.name) != std::string::npos);
}
