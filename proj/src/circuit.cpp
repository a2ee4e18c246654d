// SPDX-License-Identifier: Apache-2.0
#include "pgopt/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace pgopt {

const char* gate_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "h";
        case GateKind::X: return "x";
        case GateKind::Z: return "z";
        case GateKind::S: return "s";
        case GateKind::Sdg: return "sdg";
        case GateKind::V: return "v";
        case GateKind::Vdg: return "vdg";
        case GateKind::Rz: return "rz";
        case GateKind::Rx: return "rx";
        case GateKind::CX: return "cx";
    }
    return "?";
}

double normalize_angle(double a) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    a = std::fmod(a, two_pi);
    if (a <= -std::numbers::pi) a += two_pi;
    if (a > std::numbers::pi) a -= two_pi;
    return a;
}

Gate Gate::inverse() const {
    switch (kind) {
        case GateKind::S: return Gate::sdg(q0);
        case GateKind::Sdg: return Gate::s(q0);
        case GateKind::V: return Gate::vdg(q0);
        case GateKind::Vdg: return Gate::v(q0);
        case GateKind::Rz: return Gate::rz(-angle, q0);
        case GateKind::Rx: return Gate::rx(-angle, q0);
        default: return *this;  // H, X, Z, CX self-inverse
    }
}

bool Gate::same_as(const Gate& o) const {
    if (kind != o.kind || q0 != o.q0 || q1 != o.q1) return false;
    if (is_rotation(kind)) return angle == o.angle;
    return true;
}

std::string Gate::str() const {
    std::ostringstream os;
    os << gate_name(kind);
    if (is_rotation(kind)) os << "(" << angle << ")";
    os << " q" << q0;
    if (two_qubit()) os << ",q" << q1;
    return os.str();
}

std::array<cplx, 4> gate_matrix_1q(GateKind k, double angle) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const cplx i(0.0, 1.0);
    switch (k) {
        case GateKind::H: return {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
        case GateKind::X: return {0, 1, 1, 0};
        case GateKind::Z: return {1, 0, 0, -1};
        case GateKind::S: return {1, 0, 0, i};
        case GateKind::Sdg: return {1, 0, 0, -i};
        case GateKind::V: return gate_matrix_1q(GateKind::Rx, std::numbers::pi / 2);
        case GateKind::Vdg: return gate_matrix_1q(GateKind::Rx, -std::numbers::pi / 2);
        case GateKind::Rz: {
            cplx e0 = std::exp(-i * (angle / 2)), e1 = std::exp(i * (angle / 2));
            return {e0, 0, 0, e1};
        }
        case GateKind::Rx: {
            double c = std::cos(angle / 2), s = std::sin(angle / 2);
            return {c, -i * s, -i * s, c};
        }
        case GateKind::CX: break;
    }
    throw Error("gate_matrix_1q: not a single-qubit gate");
}

void Circuit::push(const Gate& g) {
    if (g.q0 >= width_ || (g.two_qubit() && g.q1 >= width_))
        throw Error("gate qubit index out of range");
    if (g.two_qubit() && g.q0 == g.q1)
        throw Error("two-qubit gate with equal control and target");
    gates_.push_back(g);
}

void Circuit::append(const Circuit& other) {
    if (other.width_ != width_) throw Error("append: width mismatch");
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    global_phase_ += other.global_phase_;
}

size_t Circuit::two_qubit_count() const {
    return static_cast<size_t>(
        std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) { return g.two_qubit(); }));
}

size_t Circuit::two_qubit_depth() const {
    // Per-wire running CX depth. Single-qubit gates bridge gates on the same
    // wire only, which the per-wire maximum already captures.
    std::vector<size_t> wire(width_, 0);
    size_t best = 0;
    for (const Gate& g : gates_) {
        if (!g.two_qubit()) continue;
        size_t d = std::max(wire[g.q0], wire[g.q1]) + 1;
        wire[g.q0] = wire[g.q1] = d;
        best = std::max(best, d);
    }
    return best;
}

Circuit Circuit::dagger() const {
    Circuit out(width_);
    out.set_phase(-global_phase_);
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) out.push(it->inverse());
    return out;
}

bool Circuit::gates_equal(const Circuit& o) const {
    if (width_ != o.width_ || gates_.size() != o.gates_.size()) return false;
    for (size_t i = 0; i < gates_.size(); ++i)
        if (!gates_[i].same_as(o.gates_[i])) return false;
    return true;
}

std::string Circuit::str() const {
    std::ostringstream os;
    for (const Gate& g : gates_) os << g.str() << "; ";
    return os.str();
}

Circuit compose(const Circuit& a, const Circuit& b) {
    if (a.width() != b.width()) throw Error("compose: width mismatch");
    Circuit out = a;
    out.append(b);
    return out;
}

}  // namespace pgopt
