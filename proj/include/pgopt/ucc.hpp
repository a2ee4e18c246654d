// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pgopt/circuit.hpp"
#include "pgopt/pauli.hpp"

#include <vector>

namespace pgopt::ucc {

enum class Style { Ladder, Tree };

/// Trotterized-ansatz-style gadget sequence: terms come in pairs whose
/// strings share a support and differ in exactly two positions, mimicking
/// excitation-operator pairs. Deterministic in the seed.
std::vector<PauliGadget> generate_terms(uint32_t n_qubits, size_t n_terms, uint64_t seed);

Circuit generate_ucc(uint32_t n_qubits, size_t n_terms, uint64_t seed, Style style);

}  // namespace pgopt::ucc
