// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pgopt/gates.hpp"

#include <string>
#include <vector>

namespace pgopt {

enum class Pauli : uint8_t { I, X, Y, Z };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// Fixed-length word over {I, X, Y, Z}, one symbol per qubit; index i is
/// qubit i.
class PauliString {
public:
    PauliString() = default;
    explicit PauliString(size_t n) : sym_(n, Pauli::I) {}
    explicit PauliString(const std::string& text);

    size_t length() const { return sym_.size(); }
    Pauli operator[](size_t i) const { return sym_[i]; }
    Pauli& operator[](size_t i) { return sym_[i]; }

    bool trivial() const;
    size_t weight() const;                 // number of non-identity symbols
    std::vector<uint32_t> support() const;  // indices of non-identity symbols
    std::string str() const;

    bool operator==(const PauliString& o) const { return sym_ == o.sym_; }

private:
    std::vector<Pauli> sym_;
};

/// (angle, string) pair for exp(-i(angle/2) * sigma_string). Angles live in
/// the same parameterization as Rz: a single-Z string with angle t is Rz(t).
struct PauliGadget {
    double angle = 0.0;
    PauliString string;

    PauliGadget() = default;
    PauliGadget(double a, PauliString s) : angle(a), string(std::move(s)) {}
    PauliGadget(double a, const std::string& s) : angle(a), string(PauliString(s)) {}
};

// String algebra. All binary operations require equal lengths.
bool is_substring(const PauliString& t, const PauliString& s);
PauliString pointwise_mul(const PauliString& t, const PauliString& s);
std::vector<uint32_t> intersection(const PauliString& s, const PauliString& t);
PauliString max_common_substring(const PauliString& s, const PauliString& t);
bool commutes(const PauliString& s, const PauliString& t);

/// Two-qubit-gate cost of synthesizing a consecutive gadget pair with the
/// pairwise reduction. Requires both strings non-trivial.
size_t cx_pair_cost(const PauliString& s, const PauliString& t);

// Single-symbol product up to phase: equal symbols give I, symbol times I
// gives the symbol, distinct non-identity symbols give the third.
Pauli pauli_mul(Pauli a, Pauli b);

/// a * b = i^k * prod; returns {prod, k} with k in {0,1,3}.
std::pair<Pauli, int> pauli_mul_phase(Pauli a, Pauli b);

/// Clifford conjugation g p g^dag = sign * p' for the non-rotation gate
/// kinds; returns {p', sign} with sign in {+1,-1}.
std::pair<Pauli, int> conj_1q(GateKind g, Pauli p);

/// CX (pc on control, pt on target) CX = sign * (pc' ⊗ pt').
struct CxConj { Pauli control, target; int sign; };
CxConj conj_cx(Pauli pc, Pauli pt);

}  // namespace pgopt
