// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pgopt/circuit.hpp"
#include "pgopt/pauli.hpp"

#include <vector>

namespace pgopt::synth {

enum class ChainStrategy { Naive, Aligned };

/// Basis-change layer for a string: H on X positions, V on Y positions.
/// The closing layer is its dagger.
Circuit basis_layer(const PauliString& s, uint32_t width);

/// Linear CX chain over the support, rotation on the last support qubit.
/// CX count and depth are both 2(k-1) for support size k.
Circuit synth_ladder(const PauliGadget& g);

/// Balanced fan-in tree over the support (adjacent-index pairing, median
/// root). CX count 2(k-1), CX depth 2*ceil(log2 k).
Circuit synth_tree(const PauliGadget& g);

/// Consecutive gadgets. Naive concatenates synth_tree outputs; Aligned
/// additionally shapes neighbouring trees so trailing and leading CX rounds
/// coincide where the strings allow, enabling later cancellation.
Circuit synth_chain(const std::vector<PauliGadget>& gs, ChainStrategy strategy);

/// One detected region: either a gadget with the gate indices it replaced,
/// or a run of raw gates passed through unchanged.
struct GadgetSegment {
    bool is_gadget = false;
    PauliGadget gadget;
    std::vector<Gate> raw;
    size_t first = 0, last = 0;  // source index range touched
};

/// Best-effort structural detection. Finds at minimum every subcircuit of
/// the exact shape emitted by synth_ladder / synth_tree (any tree shape,
/// mirrored basis layers of H, V/Vdg or Sdg,H pairs). Never a false
/// positive: concatenating the segments in order is equivalent to the
/// input up to global phase.
std::vector<GadgetSegment> detect_gadgets(const Circuit& c);

/// detect_gadgets + aligned resynthesis of every detected gadget run.
Circuit resynth_gadgets(const Circuit& c);

}  // namespace pgopt::synth
