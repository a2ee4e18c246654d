// SPDX-License-Identifier: Apache-2.0
#include "pgopt/pauli.hpp"

#include <algorithm>

namespace pgopt {

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::I: return 'I';
        case Pauli::X: return 'X';
        case Pauli::Y: return 'Y';
        case Pauli::Z: return 'Z';
    }
    return '?';
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I': case 'i': return Pauli::I;
        case 'X': case 'x': return Pauli::X;
        case 'Y': case 'y': return Pauli::Y;
        case 'Z': case 'z': return Pauli::Z;
    }
    throw Error(std::string("invalid Pauli symbol '") + c + "'");
}

PauliString::PauliString(const std::string& text) {
    sym_.reserve(text.size());
    for (char c : text) sym_.push_back(pauli_from_char(c));
}

bool PauliString::trivial() const {
    return std::all_of(sym_.begin(), sym_.end(), [](Pauli p) { return p == Pauli::I; });
}

size_t PauliString::weight() const {
    return static_cast<size_t>(
        std::count_if(sym_.begin(), sym_.end(), [](Pauli p) { return p != Pauli::I; }));
}

std::vector<uint32_t> PauliString::support() const {
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < sym_.size(); ++i)
        if (sym_[i] != Pauli::I) out.push_back(i);
    return out;
}

std::string PauliString::str() const {
    std::string out;
    out.reserve(sym_.size());
    for (Pauli p : sym_) out.push_back(pauli_char(p));
    return out;
}

static void check_lengths(const PauliString& a, const PauliString& b) {
    if (a.length() != b.length()) throw Error("Pauli string length mismatch");
}

bool is_substring(const PauliString& t, const PauliString& s) {
    check_lengths(t, s);
    for (size_t i = 0; i < s.length(); ++i)
        if (s[i] != t[i] && t[i] != Pauli::I) return false;
    return true;
}

Pauli pauli_mul(Pauli a, Pauli b) {
    if (a == b) return Pauli::I;
    if (a == Pauli::I) return b;
    if (b == Pauli::I) return a;
    // two distinct non-identity symbols give the third
    int missing = (int(Pauli::X) + int(Pauli::Y) + int(Pauli::Z)) - int(a) - int(b);
    return static_cast<Pauli>(missing);
}

PauliString pointwise_mul(const PauliString& t, const PauliString& s) {
    check_lengths(t, s);
    PauliString out(s.length());
    for (size_t i = 0; i < s.length(); ++i) out[i] = pauli_mul(t[i], s[i]);
    return out;
}

std::vector<uint32_t> intersection(const PauliString& s, const PauliString& t) {
    check_lengths(s, t);
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < s.length(); ++i)
        if (s[i] != Pauli::I && t[i] != Pauli::I) out.push_back(i);
    return out;
}

PauliString max_common_substring(const PauliString& s, const PauliString& t) {
    check_lengths(s, t);
    PauliString r(s.length());
    for (size_t i = 0; i < s.length(); ++i)
        if (s[i] == t[i] && s[i] != Pauli::I) r[i] = s[i];
    return r;
}

bool commutes(const PauliString& s, const PauliString& t) {
    check_lengths(s, t);
    size_t anti = 0;
    for (size_t i = 0; i < s.length(); ++i)
        if (s[i] != Pauli::I && t[i] != Pauli::I && s[i] != t[i]) ++anti;
    return anti % 2 == 0;
}

std::pair<Pauli, int> pauli_mul_phase(Pauli a, Pauli b) {
    if (a == Pauli::I) return {b, 0};
    if (b == Pauli::I) return {a, 0};
    if (a == b) return {Pauli::I, 0};
    // cyclic order X->Y->Z->X gives +i, reverse gives -i
    auto next = [](Pauli p) {
        return p == Pauli::X ? Pauli::Y : p == Pauli::Y ? Pauli::Z : Pauli::X;
    };
    Pauli prod = pauli_mul(a, b);
    return {prod, next(a) == b ? 1 : 3};
}

std::pair<Pauli, int> conj_1q(GateKind g, Pauli p) {
    if (p == Pauli::I) return {Pauli::I, 1};
    switch (g) {
        case GateKind::H:
            if (p == Pauli::X) return {Pauli::Z, 1};
            if (p == Pauli::Z) return {Pauli::X, 1};
            return {Pauli::Y, -1};
        case GateKind::X:
            if (p == Pauli::X) return {Pauli::X, 1};
            return {p, -1};
        case GateKind::Z:
            if (p == Pauli::Z) return {Pauli::Z, 1};
            return {p, -1};
        case GateKind::S:
            if (p == Pauli::X) return {Pauli::Y, 1};
            if (p == Pauli::Y) return {Pauli::X, -1};
            return {Pauli::Z, 1};
        case GateKind::Sdg:
            if (p == Pauli::X) return {Pauli::Y, -1};
            if (p == Pauli::Y) return {Pauli::X, 1};
            return {Pauli::Z, 1};
        case GateKind::V:
            if (p == Pauli::X) return {Pauli::X, 1};
            if (p == Pauli::Z) return {Pauli::Y, -1};
            return {Pauli::Z, 1};  // Y -> Z
        case GateKind::Vdg:
            if (p == Pauli::X) return {Pauli::X, 1};
            if (p == Pauli::Z) return {Pauli::Y, 1};
            return {Pauli::Z, -1};  // Y -> -Z
        default:
            throw Error("conj_1q: unsupported gate kind");
    }
}

CxConj conj_cx(Pauli pc, Pauli pt) {
    // images of single-wire factors; all carry sign +1
    auto cimg = [](Pauli p) -> std::pair<Pauli, Pauli> {
        switch (p) {
            case Pauli::I: return {Pauli::I, Pauli::I};
            case Pauli::X: return {Pauli::X, Pauli::X};
            case Pauli::Y: return {Pauli::Y, Pauli::X};
            case Pauli::Z: return {Pauli::Z, Pauli::I};
        }
        return {Pauli::I, Pauli::I};
    };
    auto timg = [](Pauli p) -> std::pair<Pauli, Pauli> {
        switch (p) {
            case Pauli::I: return {Pauli::I, Pauli::I};
            case Pauli::X: return {Pauli::I, Pauli::X};
            case Pauli::Y: return {Pauli::Z, Pauli::Y};
            case Pauli::Z: return {Pauli::Z, Pauli::Z};
        }
        return {Pauli::I, Pauli::I};
    };
    auto [c1, t1] = cimg(pc);
    auto [c2, t2] = timg(pt);
    auto [rc, kc] = pauli_mul_phase(c1, c2);
    auto [rt, kt] = pauli_mul_phase(t1, t2);
    int k = (kc + kt) % 4;
    if (k % 2 != 0) throw Error("conj_cx: non-real phase");
    return {rc, rt, k == 0 ? 1 : -1};
}

size_t cx_pair_cost(const PauliString& s, const PauliString& t) {
    check_lengths(s, t);
    if (s.trivial() || t.trivial()) throw Error("cx_pair_cost: trivial string");
    PauliString r = max_common_substring(s, t);
    size_t rw = r.weight();
    size_t u = intersection(s, t).size() - rw;
    long base = long(s.weight()) + long(t.weight()) - long(rw) - long(u / 2) - 2;
    long cost = 2 * base;
    // A common substring with no residual intersection can only be folded
    // onto a retained shared qubit, which costs one extra pair of CXs. This
    // also covers equal strings: they fuse into one gadget at 2(|s|-1).
    if (u == 0 && rw > 0) cost += 2;
    return cost < 0 ? 0 : static_cast<size_t>(cost);
}

}  // namespace pgopt
