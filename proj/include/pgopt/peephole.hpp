// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pgopt/circuit.hpp"

#include <string>
#include <vector>

namespace pgopt::peephole {

/// One splice: at `window_begin` in the circuit as it stood, `removed`
/// gates were replaced by `inserted`. Replaying the entries in order on the
/// pass input reproduces the pass output exactly.
struct RewriteLogEntry {
    std::string pass;
    size_t window_begin = 0;
    std::vector<Gate> removed;
    std::vector<Gate> inserted;
};
using RewriteLog = std::vector<RewriteLogEntry>;

Circuit replay(const Circuit& input, const RewriteLog& log);

/// Adjacent same-axis rotations on a wire merge; rotations with angle
/// within 1e-12 of zero are dropped.
Circuit merge_rotations(const Circuit& c, RewriteLog* log = nullptr);

/// Adjacent gate/inverse pairs on identical wires are removed, to fixpoint.
Circuit cancel_inverses(const Circuit& c, RewriteLog* log = nullptr);

/// CX-pair reduction: commutes rotations past compatible CX wires and
/// replaces CX...CX windows whose middle is single-qubit Clifford with an
/// equivalent form using fewer CX gates. Never increases two_qubit_count.
Circuit commute_and_cancel(const Circuit& c, RewriteLog* log = nullptr);

enum class EulerBasis { ZXZ, XZX };

/// Replaces every maximal single-qubit run of at least `min_run` gates with
/// at most three rotations in the chosen basis; the dropped scalar goes to
/// the global phase.
Circuit euler_1q(const Circuit& c, EulerBasis basis, size_t min_run = 4,
                 RewriteLog* log = nullptr);

/// e^{i phase} Rz(a3) Rx(a2) Rz(a1) = u for any 2x2 unitary u (as a matrix
/// product; the circuit order is Rz(a1), Rx(a2), Rz(a3)). At gimbal lock
/// the third angle is 0.
struct EulerAngles {
    double a1, a2, a3, phase;
};
EulerAngles decompose_zxz(const std::array<cplx, 4>& u);
EulerAngles decompose_xzx(const std::array<cplx, 4>& u);

}  // namespace pgopt::peephole
