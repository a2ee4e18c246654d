// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pgopt/circuit.hpp"
#include "pgopt/pauli.hpp"

#include <utility>

namespace pgopt::reduce {

/// Conjugated gadget pair: the original pair is equivalent (up to global
/// phase) to conj ; left ; right ; dagger(conj).
struct ConjugatedPair {
    Circuit conj;
    PauliGadget left, right;
};

/// Strips the maximum common substring r of the two strings. With residual
/// intersection available, r is folded out entirely through typed connector
/// gates; otherwise it folds onto a retained shared qubit (lowest index of
/// r's support) which keeps its symbol in both strings.
ConjugatedPair eliminate_common(const PauliGadget& a, const PauliGadget& b);

/// Removes Y from every intersection index where exactly one string has it:
/// V against X partners, Sdg against Z partners.
ConjugatedPair normalize_y(ConjugatedPair pair);

/// Repeatedly eliminates mismatched intersection pairs, two indices at a
/// time, one CX each (plus an H when the mismatch orientations differ).
/// Requires no Y in the intersection.
ConjugatedPair eliminate_mismatch(ConjugatedPair pair);

/// eliminate_common, normalize_y, eliminate_mismatch in sequence. The
/// resulting strings intersect in at most one index.
ConjugatedPair intermediate_form(const PauliGadget& a, const PauliGadget& b);

/// If strings are equal, the fused gadget (a.angle + b.angle, s).
std::pair<bool, PauliGadget> fuse(const PauliGadget& a, const PauliGadget& b);

enum class PairClass { Commute, Euler };
PairClass classify(const PauliGadget& a, const PauliGadget& b);

/// For non-commuting strings s, t: angles b with
///   P(b1,t); P(b2,s); P(b3,t)  ==  P(a1,s); P(a2,t); P(a3,s)
/// up to phase, from the 2x2 Euler re-decomposition of the reduced pair.
std::array<double, 3> euler_exchange(double a1, double a2, double a3, const PauliString& s,
                                     const PauliString& t);

/// Circuit for the consecutive pair a ; b. Fuses equal strings; otherwise
/// conj ; tree(left) ; tree(right) ; dagger(conj). The CX count equals
/// cx_pair_cost(s, t).
Circuit pair_synth(const PauliGadget& a, const PauliGadget& b);

}  // namespace pgopt::reduce
