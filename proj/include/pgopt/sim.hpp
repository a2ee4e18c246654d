// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pgopt/circuit.hpp"
#include "pgopt/pauli.hpp"

#include <vector>

namespace pgopt::sim {

constexpr uint32_t kOracleMaxQubits = 12;

/// Dense 2^n x 2^n unitary, row major, little endian (qubit 0 is the least
/// significant bit of the basis index).
struct UnitaryMatrix {
    size_t dim = 0;
    std::vector<cplx> a;

    UnitaryMatrix() = default;
    explicit UnitaryMatrix(size_t d) : dim(d), a(d * d, cplx(0.0)) {}
    static UnitaryMatrix identity(size_t d);

    cplx& at(size_t r, size_t c) { return a[r * dim + c]; }
    const cplx& at(size_t r, size_t c) const { return a[r * dim + c]; }
};

enum class Engine { Serial, Parallel };

UnitaryMatrix multiply(const UnitaryMatrix& lhs, const UnitaryMatrix& rhs);
UnitaryMatrix adjoint(const UnitaryMatrix& m);
double max_abs_diff(const UnitaryMatrix& x, const UnitaryMatrix& y);

/// In-place left multiplication M <- G * M for one gate.
void apply_gate(UnitaryMatrix& m, const Gate& g, Engine engine);

/// Product of gate matrices in application order, times exp(i*global_phase).
/// Throws when the circuit is wider than the oracle cap.
UnitaryMatrix unitary(const Circuit& c, Engine engine);
UnitaryMatrix unitary(const Circuit& c);

/// exp(-i(theta/2) * sigma_s), padded with identities at trivial positions.
UnitaryMatrix gadget_unitary(const PauliGadget& g, Engine engine);
UnitaryMatrix gadget_unitary(const PauliGadget& g);

/// True iff a = e^{i phi} b elementwise within tol for some phi.
bool equiv_up_to_phase(const UnitaryMatrix& a, const UnitaryMatrix& b, double tol);

/// Convenience: oracle equivalence of two circuits up to global phase.
bool circuits_equiv(const Circuit& a, const Circuit& b, double tol);

}  // namespace pgopt::sim
