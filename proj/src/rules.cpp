// SPDX-License-Identifier: Apache-2.0
#include "pgopt/rules.hpp"

#include "pgopt/sim.hpp"
#include "pgopt/synth.hpp"

#include <cctype>
#include <numbers>
#include <sstream>

namespace pgopt::rules {

namespace {

GateKind inverse_kind(GateKind k) {
    switch (k) {
        case GateKind::S: return GateKind::Sdg;
        case GateKind::Sdg: return GateKind::S;
        case GateKind::V: return GateKind::Vdg;
        case GateKind::Vdg: return GateKind::V;
        default: return k;
    }
}

PauliString padded_string(uint32_t width, const std::vector<uint32_t>& wires,
                          const std::vector<Pauli>& symbols) {
    PauliString s(width);
    for (uint32_t q = 0; q < width; ++q) s[q] = Pauli::Z;  // spectator legs
    for (size_t i = 0; i < wires.size(); ++i) s[wires[i]] = symbols[i];
    return s;
}

GadgetRule clifford_rule(GateKind g, Pauli leg) {
    GadgetRule r;
    r.name = std::string(gate_name(g)) + "-through-" +
             static_cast<char>(std::tolower(pauli_char(leg))) + "-leg";
    r.family = "single-qubit-clifford";
    r.arity = 1;
    r.lhs = [g, leg](uint32_t width, const std::vector<uint32_t>& qs, double angle) {
        Circuit c(width);
        c.push({g, 0.0, qs[0], qs[0]});
        c.append(synth::synth_tree(PauliGadget(angle, padded_string(width, qs, {leg}))));
        return c;
    };
    r.rhs = [g, leg](uint32_t width, const std::vector<uint32_t>& qs, double angle) {
        auto [sym, sign] = conj_1q(inverse_kind(g), leg);
        Circuit c(width);
        c.append(synth::synth_tree(PauliGadget(sign * angle, padded_string(width, qs, {sym}))));
        c.push({g, 0.0, qs[0], qs[0]});
        return c;
    };
    return r;
}

GadgetRule cx_rule(bool leg_on_control, Pauli leg) {
    GadgetRule r;
    r.name = std::string("cx-") + (leg_on_control ? "control" : "target") + "-through-" +
             static_cast<char>(std::tolower(pauli_char(leg))) + "-leg";
    r.family = "cx";
    r.arity = 2;
    auto string_for = [leg_on_control, leg](uint32_t width, const std::vector<uint32_t>& qs) {
        return padded_string(width, qs,
                             leg_on_control ? std::vector<Pauli>{leg, Pauli::I}
                                            : std::vector<Pauli>{Pauli::I, leg});
    };
    r.lhs = [string_for](uint32_t width, const std::vector<uint32_t>& qs, double angle) {
        Circuit c(width);
        c.push(Gate::cx(qs[0], qs[1]));
        c.append(synth::synth_tree(PauliGadget(angle, string_for(width, qs))));
        return c;
    };
    r.rhs = [string_for](uint32_t width, const std::vector<uint32_t>& qs, double angle) {
        PauliString s = string_for(width, qs);
        CxConj cc = conj_cx(s[qs[0]], s[qs[1]]);
        s[qs[0]] = cc.control;
        s[qs[1]] = cc.target;
        Circuit c(width);
        c.append(synth::synth_tree(PauliGadget(cc.sign * angle, s)));
        c.push(Gate::cx(qs[0], qs[1]));
        return c;
    };
    return r;
}

std::vector<GadgetRule> build_library() {
    std::vector<GadgetRule> lib;
    const GateKind cliffords[] = {GateKind::Z, GateKind::X, GateKind::H, GateKind::S,
                                  GateKind::V};
    const Pauli legs[] = {Pauli::Z, Pauli::X, Pauli::Y};
    for (GateKind g : cliffords)
        for (Pauli leg : legs) lib.push_back(clifford_rule(g, leg));
    for (bool on_control : {true, false})
        for (Pauli leg : legs) lib.push_back(cx_rule(on_control, leg));
    return lib;
}

}  // namespace

const std::vector<GadgetRule>& rule_library() {
    static const std::vector<GadgetRule> lib = build_library();
    return lib;
}

std::vector<CertificationFailure> certify_rules(double tol) {
    std::vector<CertificationFailure> failures;
    const double grid[] = {0.0, std::numbers::pi / 2, -std::numbers::pi / 2, 0.3, 2.2};
    for (const auto& rule : rule_library()) {
        for (uint32_t width = 2; width <= 4; ++width) {
            std::vector<std::vector<uint32_t>> placements;
            if (rule.arity == 1) {
                for (uint32_t q = 0; q < width; ++q) placements.push_back({q});
            } else {
                for (uint32_t c = 0; c < width; ++c)
                    for (uint32_t t = 0; t < width; ++t)
                        if (c != t) placements.push_back({c, t});
            }
            for (const auto& qs : placements) {
                for (double angle : grid) {
                    auto lhs = sim::unitary(rule.lhs(width, qs, angle));
                    auto rhs = sim::unitary(rule.rhs(width, qs, angle));
                    if (!sim::equiv_up_to_phase(lhs, rhs, tol))
                        failures.push_back({rule.name, width, qs, angle});
                }
            }
        }
    }
    return failures;
}

std::string catalogue_text() {
    std::ostringstream os;
    for (const auto& rule : rule_library()) {
        std::vector<uint32_t> qs = rule.arity == 1 ? std::vector<uint32_t>{0}
                                                   : std::vector<uint32_t>{0, 1};
        os << rule.name << "  [" << rule.family << "]\n";
        os << "  lhs: " << rule.lhs(2, qs, 0.3).str() << "\n";
        os << "  rhs: " << rule.rhs(2, qs, 0.3).str() << "\n";
    }
    return os.str();
}

}  // namespace pgopt::rules
