// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pgopt {

using cplx = std::complex<double>;

enum class GateKind : uint8_t { H, X, Z, S, Sdg, V, Vdg, Rz, Rx, CX };

inline bool is_rotation(GateKind k) { return k == GateKind::Rz || k == GateKind::Rx; }
inline bool is_two_qubit(GateKind k) { return k == GateKind::CX; }

/// A single primitive operation. V and Vdg denote Rx(+pi/2) and Rx(-pi/2)
/// exactly; they are kept as distinct kinds so rewrite rules can match them.
struct Gate {
    GateKind kind;
    double angle = 0.0;        // Rz/Rx only
    uint32_t q0 = 0;           // single qubit, or CX control
    uint32_t q1 = 0;           // CX target

    static Gate h(uint32_t q) { return {GateKind::H, 0.0, q, q}; }
    static Gate x(uint32_t q) { return {GateKind::X, 0.0, q, q}; }
    static Gate z(uint32_t q) { return {GateKind::Z, 0.0, q, q}; }
    static Gate s(uint32_t q) { return {GateKind::S, 0.0, q, q}; }
    static Gate sdg(uint32_t q) { return {GateKind::Sdg, 0.0, q, q}; }
    static Gate v(uint32_t q) { return {GateKind::V, 0.0, q, q}; }
    static Gate vdg(uint32_t q) { return {GateKind::Vdg, 0.0, q, q}; }
    static Gate rz(double theta, uint32_t q) { return {GateKind::Rz, theta, q, q}; }
    static Gate rx(double theta, uint32_t q) { return {GateKind::Rx, theta, q, q}; }
    static Gate cx(uint32_t control, uint32_t target) { return {GateKind::CX, 0.0, control, target}; }

    bool two_qubit() const { return kind == GateKind::CX; }
    uint32_t qubit() const { return q0; }
    uint32_t control() const { return q0; }
    uint32_t target() const { return q1; }
    bool touches(uint32_t q) const { return q0 == q || (two_qubit() && q1 == q); }

    Gate inverse() const;
    bool same_as(const Gate& o) const;
    std::string str() const;
};

const char* gate_name(GateKind k);

/// 2x2 matrix of a single-qubit gate, row major.
/// Conventions: Rz(t) = diag(e^{-it/2}, e^{it/2}), Rx(t) = cos(t/2) I - i sin(t/2) X,
/// S = diag(1, i), V = Rx(pi/2).
std::array<cplx, 4> gate_matrix_1q(GateKind k, double angle = 0.0);

/// Wraps an angle into (-pi, pi].
double normalize_angle(double a);

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pgopt
