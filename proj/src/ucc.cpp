// SPDX-License-Identifier: Apache-2.0
#include "pgopt/ucc.hpp"

#include "pgopt/synth.hpp"

#include <algorithm>
#include <numbers>
#include <random>

namespace pgopt::ucc {

namespace {

// mt19937_64 output is portable; the derived ranges are hand-rolled so the
// generated circuits are identical across standard libraries
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}
    uint64_t next(uint64_t bound) { return eng() % bound; }
    double angle() {
        double u = double(eng() >> 11) * 0x1.0p-53;  // [0,1)
        return (2.0 * u - 1.0) * std::numbers::pi;
    }
};

Pauli random_leg(Rng& rng) {
    switch (rng.next(3)) {
        case 0: return Pauli::X;
        case 1: return Pauli::Y;
        default: return Pauli::Z;
    }
}

}  // namespace

std::vector<PauliGadget> generate_terms(uint32_t n_qubits, size_t n_terms, uint64_t seed) {
    if (n_qubits < 2) throw Error("generate_ucc: need at least 2 qubits");
    Rng rng(seed);
    std::vector<PauliGadget> terms;
    terms.reserve(n_terms);
    while (terms.size() < n_terms) {
        size_t k = 2 + rng.next(std::min<uint64_t>(n_qubits, 6) - 1);
        std::vector<uint32_t> qubits(n_qubits);
        for (uint32_t i = 0; i < n_qubits; ++i) qubits[i] = i;
        for (size_t i = 0; i < k; ++i)
            std::swap(qubits[i], qubits[i + rng.next(n_qubits - i)]);
        qubits.resize(k);
        std::sort(qubits.begin(), qubits.end());

        PauliString s(n_qubits);
        for (uint32_t q : qubits) s[q] = random_leg(rng);
        terms.emplace_back(rng.angle(), s);
        if (terms.size() == n_terms) break;

        // partner: same support, exactly two symbols changed
        PauliString t = s;
        size_t i1 = rng.next(k);
        size_t i2 = (i1 + 1 + rng.next(k - 1)) % k;
        for (size_t idx : {i1, i2}) {
            Pauli old = t[qubits[idx]];
            Pauli repl = random_leg(rng);
            while (repl == old) repl = random_leg(rng);
            t[qubits[idx]] = repl;
        }
        terms.emplace_back(rng.angle(), t);
    }
    return terms;
}

Circuit generate_ucc(uint32_t n_qubits, size_t n_terms, uint64_t seed, Style style) {
    auto terms = generate_terms(n_qubits, n_terms, seed);
    Circuit out(n_qubits);
    for (const auto& g : terms)
        out.append(style == Style::Ladder ? synth::synth_ladder(g) : synth::synth_tree(g));
    return out;
}

}  // namespace pgopt::ucc
