// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pgopt/gates.hpp"

#include <vector>

namespace pgopt {

/// Ordered gate list over a fixed number of qubits. Composition order is
/// application order: gates[0] is applied first. Circuits are value types;
/// passes return new circuits instead of mutating shared state.
class Circuit {
public:
    Circuit() = default;
    explicit Circuit(uint32_t width) : width_(width) {}

    uint32_t width() const { return width_; }
    double global_phase() const { return global_phase_; }
    void add_phase(double p) { global_phase_ += p; }
    void set_phase(double p) { global_phase_ = p; }

    const std::vector<Gate>& gates() const { return gates_; }
    std::vector<Gate>& gates() { return gates_; }
    size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }
    const Gate& operator[](size_t i) const { return gates_[i]; }

    void push(const Gate& g);
    void append(const Circuit& other);  // same width required

    size_t two_qubit_count() const;
    size_t two_qubit_depth() const;

    Circuit dagger() const;

    /// Gate-for-gate equality (kinds, qubits, bitwise angles); phase ignored.
    bool gates_equal(const Circuit& o) const;

    std::string str() const;

private:
    uint32_t width_ = 0;
    std::vector<Gate> gates_;
    double global_phase_ = 0.0;
};

/// a first, then b. Throws on width mismatch.
Circuit compose(const Circuit& a, const Circuit& b);

}  // namespace pgopt
