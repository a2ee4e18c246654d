// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pgopt/circuit.hpp"
#include "pgopt/pauli.hpp"

#include <random>
#include <string>

namespace testsup {

using namespace pgopt;

// hand-rolled ranges over mt19937_64 keep fixtures identical across stdlibs
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}
    uint64_t next(uint64_t bound) { return eng() % bound; }
    double uniform() { return double(eng() >> 11) * 0x1.0p-53; }
    double angle() { return (2.0 * uniform() - 1.0) * 3.141592653589793; }
};

inline Circuit random_circuit(uint32_t width, size_t gates, Rng& rng) {
    Circuit c(width);
    for (size_t i = 0; i < gates; ++i) {
        uint32_t q = static_cast<uint32_t>(rng.next(width));
        switch (rng.next(width >= 2 ? 10 : 9)) {
            case 0: c.push(Gate::h(q)); break;
            case 1: c.push(Gate::x(q)); break;
            case 2: c.push(Gate::z(q)); break;
            case 3: c.push(Gate::s(q)); break;
            case 4: c.push(Gate::sdg(q)); break;
            case 5: c.push(Gate::v(q)); break;
            case 6: c.push(Gate::vdg(q)); break;
            case 7: c.push(Gate::rz(rng.angle(), q)); break;
            case 8: c.push(Gate::rx(rng.angle(), q)); break;
            default: {
                uint32_t t = static_cast<uint32_t>(rng.next(width - 1));
                if (t >= q) ++t;
                c.push(Gate::cx(q, t));
            }
        }
    }
    return c;
}

inline PauliString random_string(uint32_t width, Rng& rng, bool nontrivial = true) {
    for (;;) {
        PauliString s(width);
        for (uint32_t i = 0; i < width; ++i)
            s[i] = static_cast<Pauli>(rng.next(4));
        if (!nontrivial || !s.trivial()) return s;
    }
}

// The worked four-qubit ansatz fragment: two ladder-form gadgets
// P(0.3, YYXY) then P(0.7, XYYY); 12 CX gates at two-qubit depth 12.
inline const char* h2_initial_qasm() {
    return R"(OPENQASM 2.0;
include "qelib1.inc";
qreg q[4];
rx(1.5707963267948966) q[0];
rx(1.5707963267948966) q[1];
h q[2];
rx(1.5707963267948966) q[3];
cx q[0],q[1];
cx q[1],q[2];
cx q[2],q[3];
rz(0.3) q[3];
cx q[2],q[3];
cx q[1],q[2];
cx q[0],q[1];
rx(-1.5707963267948966) q[0];
rx(-1.5707963267948966) q[1];
h q[2];
rx(-1.5707963267948966) q[3];
h q[0];
rx(1.5707963267948966) q[1];
rx(1.5707963267948966) q[2];
rx(1.5707963267948966) q[3];
cx q[0],q[1];
cx q[1],q[2];
cx q[2],q[3];
rz(0.7) q[3];
cx q[2],q[3];
cx q[1],q[2];
cx q[0],q[1];
h q[0];
rx(-1.5707963267948966) q[1];
rx(-1.5707963267948966) q[2];
rx(-1.5707963267948966) q[3];
)";
}

}  // namespace testsup
