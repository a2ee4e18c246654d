// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pgopt/gates.hpp"

#include <array>
#include <optional>
#include <vector>

namespace pgopt::cliff {

using Mat2 = std::array<cplx, 4>;
using Mat4 = std::array<cplx, 16>;

Mat2 mul2(const Mat2& a, const Mat2& b);
Mat4 mul4(const Mat4& a, const Mat4& b);
Mat4 kron(const Mat2& hi, const Mat2& lo);  // hi on bit 1, lo on bit 0
Mat4 adjoint4(const Mat4& m);

/// The 24 single-qubit Cliffords with shortest gate words over
/// {H, S, Sdg, V, Vdg, X, Z}. Matrices are phase-canonical.
struct C1Element {
    Mat2 mat;
    std::vector<GateKind> word;
};
const std::vector<C1Element>& c1_table();

/// Looks up a 2x2 unitary in the table up to global phase; returns the word
/// and the phase phi with U = e^{i phi} * table-product.
std::optional<std::pair<std::vector<GateKind>, double>> c1_word(const Mat2& u);

/// Result of resynthesizing a two-qubit Clifford window on a (control,
/// target) wire pair. Local space: target is bit 0, control is bit 1.
struct TwoQubitForm {
    int cx_count = 0;                 // 0 or 1
    std::vector<Gate> gates;          // on local wires 0 = target, 1 = control
    double phase = 0.0;               // e^{i phase} * product(gates) = W
};

/// Tries to express W (a 4x4 Clifford) with at most one CX. Returns nullopt
/// when W needs two or more.
std::optional<TwoQubitForm> reduce_two_qubit_clifford(const Mat4& w);

/// CX in the local space; control_on_bit1 selects the orientation.
const Mat4& cx_local(bool control_on_bit1);

/// Product of local gates (wire 1 / wire 0 convention as above).
Mat4 product_local(const std::vector<Gate>& gates);

/// phi with w = e^{i phi} * product_local(gates).
double phase_for(const Mat4& w, const std::vector<Gate>& gates);

}  // namespace pgopt::cliff
