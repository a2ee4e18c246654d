// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pgopt/circuit.hpp"
#include "pgopt/pauli.hpp"

#include <functional>
#include <string>
#include <vector>

namespace pgopt::rules {

/// One registered identity: passing a Clifford gate (or a CX) through a
/// gadget leg. lhs and rhs are builders parameterized over width, leg
/// placement and angle so the certification can sweep them.
struct GadgetRule {
    std::string name;
    std::string family;  // "single-qubit-clifford" or "cx"
    // builds the two sides at a given width; qubits.size() is 1 for
    // single-qubit rules (the leg wire) and 2 for cx rules (control, target)
    std::function<Circuit(uint32_t width, const std::vector<uint32_t>& qubits, double angle)> lhs;
    std::function<Circuit(uint32_t width, const std::vector<uint32_t>& qubits, double angle)> rhs;
    size_t arity;  // wires the rule places
};

const std::vector<GadgetRule>& rule_library();

struct CertificationFailure {
    std::string rule;
    uint32_t width;
    std::vector<uint32_t> qubits;
    double angle;
};

/// Oracle-checks every rule at widths 2..4 over all wire placements and the
/// angle grid {0, +-pi/2, 0.3, 2.2}. Empty result means all certified.
std::vector<CertificationFailure> certify_rules(double tol);

/// Human-readable catalogue (name, family, lhs, rhs at a reference
/// placement), one rule per line block.
std::string catalogue_text();

}  // namespace pgopt::rules
