// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pgopt/circuit.hpp"

#include <string>
#include <string_view>

namespace pgopt::qasm {

struct ParseError : Error {
    int line, column;
    ParseError(const std::string& msg, int l, int c)
        : Error(msg + " (line " + std::to_string(l) + ", column " + std::to_string(c) + ")"),
          line(l), column(c) {}
};

/// Parses the OpenQASM 2.0 subset covering the gate set: h, x, z, s, sdg,
/// rx, rz, cx, with u1 accepted as an rz alias. One quantum register.
/// rx with angle bit-equal to +/-pi/2 canonicalizes to V/Vdg.
Circuit parse(std::string_view text);

/// Deterministic text; parse(emit(c)) is gate-identical to c.
std::string emit(const Circuit& c);

/// Angle expressions: decimal literals, pi, unary minus, * and /.
double parse_angle_expr(std::string_view text);

}  // namespace pgopt::qasm
