// SPDX-License-Identifier: Apache-2.0
#include "pgopt/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <set>

namespace pgopt::synth {

Circuit basis_layer(const PauliString& s, uint32_t width) {
    Circuit out(width);
    for (uint32_t i = 0; i < s.length(); ++i) {
        if (s[i] == Pauli::X) out.push(Gate::h(i));
        if (s[i] == Pauli::Y) out.push(Gate::v(i));
    }
    return out;
}

static void check_nontrivial(const PauliGadget& g) {
    if (g.string.trivial()) throw Error("synthesis of a trivial Pauli string");
}

Circuit synth_ladder(const PauliGadget& g) {
    check_nontrivial(g);
    const uint32_t width = static_cast<uint32_t>(g.string.length());
    auto sup = g.string.support();
    Circuit out = basis_layer(g.string, width);
    for (size_t i = 0; i + 1 < sup.size(); ++i) out.push(Gate::cx(sup[i], sup[i + 1]));
    out.push(Gate::rz(g.angle, sup.back()));
    for (size_t i = sup.size() - 1; i-- > 0;) out.push(Gate::cx(sup[i], sup[i + 1]));
    out.append(basis_layer(g.string, width).dagger());
    return out;
}

// Balanced fan-in rounds over `leaves`, folding parities toward `root`.
// Adjacent survivors pair each round; the survivor of a pair is the element
// nearer the root qubit (ties to the lower index).
static std::vector<std::vector<Gate>> fold_rounds(std::vector<uint32_t> leaves, uint32_t root) {
    std::vector<std::vector<Gate>> rounds;
    while (leaves.size() > 1) {
        std::vector<Gate> round;
        std::vector<uint32_t> next;
        for (size_t i = 0; i + 1 < leaves.size(); i += 2) {
            uint32_t a = leaves[i], b = leaves[i + 1];
            auto dist = [&](uint32_t q) {
                return q > root ? q - root : root - q;
            };
            uint32_t keep = dist(a) <= dist(b) ? a : b;
            uint32_t drop = keep == a ? b : a;
            round.push_back(Gate::cx(drop, keep));
            next.push_back(keep);
        }
        if (leaves.size() % 2) next.push_back(leaves.back());
        rounds.push_back(std::move(round));
        leaves = std::move(next);
    }
    return rounds;
}

static Circuit tree_from_rounds(const PauliGadget& g, const std::vector<std::vector<Gate>>& rounds,
                                uint32_t root) {
    const uint32_t width = static_cast<uint32_t>(g.string.length());
    Circuit out = basis_layer(g.string, width);
    for (const auto& round : rounds)
        for (const Gate& cx : round) out.push(cx);
    out.push(Gate::rz(g.angle, root));
    for (auto it = rounds.rbegin(); it != rounds.rend(); ++it)
        for (auto git = it->rbegin(); git != it->rend(); ++git) out.push(*git);
    out.append(basis_layer(g.string, width).dagger());
    return out;
}

Circuit synth_tree(const PauliGadget& g) {
    check_nontrivial(g);
    auto sup = g.string.support();
    uint32_t root = sup[(sup.size() - 1) / 2];
    return tree_from_rounds(g, fold_rounds(sup, root), root);
}

// Aligns a gadget's tree to a neighbour. Equal supports already produce
// identical tree shapes, so opening and closing rounds coincide and the
// basis-layer middles are left to the Clifford passes. For differing
// supports the common equal-symbol part is folded first (outermost), where
// the basis layers cancel exactly.
static Circuit synth_tree_aligned(const PauliGadget& g, const PauliString& neighbour) {
    auto sup = g.string.support();
    if (sup == neighbour.support()) return synth_tree(g);
    auto shared = max_common_substring(g.string, neighbour).support();
    if (shared.size() < 2 || shared.size() == sup.size()) return synth_tree(g);
    uint32_t root = shared[(shared.size() - 1) / 2];
    auto rounds = fold_rounds(shared, root);
    std::vector<uint32_t> rest;
    for (uint32_t q : sup)
        if (!std::binary_search(shared.begin(), shared.end(), q)) rest.push_back(q);
    rest.push_back(root);
    std::sort(rest.begin(), rest.end());
    for (auto& round : fold_rounds(rest, root)) rounds.push_back(std::move(round));
    return tree_from_rounds(g, rounds, root);
}

Circuit synth_chain(const std::vector<PauliGadget>& gs, ChainStrategy strategy) {
    if (gs.empty()) throw Error("synth_chain: empty gadget list");
    const size_t width = gs.front().string.length();
    for (const auto& g : gs)
        if (g.string.length() != width) throw Error("synth_chain: width mismatch");

    Circuit out(static_cast<uint32_t>(width));
    for (size_t i = 0; i < gs.size(); ++i) {
        if (gs[i].string.trivial()) {
            out.add_phase(-gs[i].angle / 2);
            continue;
        }
        if (strategy == ChainStrategy::Naive || gs.size() == 1) {
            out.append(synth_tree(gs[i]));
            continue;
        }
        size_t left = 0, right = 0;
        if (i > 0) left = max_common_substring(gs[i - 1].string, gs[i].string).weight();
        if (i + 1 < gs.size())
            right = max_common_substring(gs[i].string, gs[i + 1].string).weight();
        const PauliString& nb = right >= left && i + 1 < gs.size() ? gs[i + 1].string
                                : i > 0                            ? gs[i - 1].string
                                                                   : gs[i + 1].string;
        out.append(synth_tree_aligned(gs[i], nb));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Detection

namespace {

constexpr double kCliffordTol = 1e-9;

// Rx within tolerance of +/-pi/2 participates in basis-layer matching.
std::optional<GateKind> as_basis_gate(const Gate& g) {
    switch (g.kind) {
        case GateKind::H: case GateKind::V: case GateKind::Vdg:
        case GateKind::S: case GateKind::Sdg: case GateKind::X: case GateKind::Z:
            return g.kind;
        case GateKind::Rx:
            if (std::abs(g.angle - std::numbers::pi / 2) < kCliffordTol) return GateKind::V;
            if (std::abs(g.angle + std::numbers::pi / 2) < kCliffordTol) return GateKind::Vdg;
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

GateKind inverse_kind(GateKind k) {
    switch (k) {
        case GateKind::S: return GateKind::Sdg;
        case GateKind::Sdg: return GateKind::S;
        case GateKind::V: return GateKind::Vdg;
        case GateKind::Vdg: return GateKind::V;
        default: return k;
    }
}

struct Region {
    std::set<size_t> indices;
    size_t anchor;
    size_t lo, hi;
    std::set<uint32_t> zset;   // current Z-support of the peeled core
    double angle;
};

class Detector {
public:
    explicit Detector(const Circuit& c) : c_(c), consumed_(c.size(), false) {}

    std::vector<GadgetSegment> run() {
        for (size_t p = 0; p < c_.size(); ++p) {
            if (consumed_[p]) continue;
            const Gate& g = c_[p];
            if (g.kind == GateKind::Rz) grow_region(p);
        }
        return assemble();
    }

private:
    struct Found {
        size_t index;
        std::vector<size_t> anchors;
    };

    const Circuit& c_;
    std::vector<bool> consumed_;
    std::vector<std::pair<std::vector<size_t>, PauliGadget>> regions_;
    std::vector<size_t> region_anchor_;

    bool touches_any(const Gate& g, const std::set<uint32_t>& wires) const {
        if (wires.count(g.q0)) return true;
        return g.two_qubit() && wires.count(g.q1);
    }

    // Nearest gate before `from` touching `wires`; blockers included.
    std::optional<size_t> prev_on(size_t from, const std::set<uint32_t>& wires) const {
        for (size_t i = from; i-- > 0;)
            if (touches_any(c_[i], wires)) return i;
        return std::nullopt;
    }

    std::optional<size_t> next_on(size_t from, const std::set<uint32_t>& wires) const {
        for (size_t i = from + 1; i < c_.size(); ++i)
            if (touches_any(c_[i], wires)) return i;
        return std::nullopt;
    }

    bool range_clear(size_t begin, size_t end, const std::set<uint32_t>& wires,
                     const Region& r) const {
        for (size_t i = begin + 1; i < end; ++i) {
            if (r.indices.count(i)) continue;
            if (touches_any(c_[i], wires)) return false;
        }
        return true;
    }

    void grow_region(size_t anchor) {
        Region r;
        r.indices.insert(anchor);
        r.anchor = anchor;
        r.lo = r.hi = anchor;
        r.zset.insert(c_[anchor].qubit());
        r.angle = c_[anchor].angle;

        while (peel_cx(r)) {}
        PauliString str = absorb_basis(r);

        std::vector<size_t> idx(r.indices.begin(), r.indices.end());
        for (size_t i : idx) consumed_[i] = true;
        regions_.emplace_back(std::move(idx), PauliGadget(r.angle, std::move(str)));
        region_anchor_.push_back(anchor);
    }

    bool peel_cx(Region& r) {
        auto pi = prev_on(r.lo, r.zset);
        if (!pi) return false;
        const Gate& g = c_[*pi];
        if (consumed_[*pi] || g.kind != GateKind::CX) return false;
        std::set<uint32_t> cxw{g.control(), g.target()};

        // the mirror must be the next gate on either CX wire
        auto nj = next_on(r.hi, cxw);
        if (!nj || consumed_[*nj] || !c_[*nj].same_as(g)) return false;
        // nothing between the CX and the region may touch its wires
        if (!range_clear(*pi, r.lo, cxw, r)) return false;
        if (!range_clear(r.hi, *nj, cxw, r)) return false;
        // nor may any interior non-region gate
        if (!range_clear(r.lo, r.hi + 1, cxw, r)) return false;

        if (r.zset.count(g.target())) {
            if (!r.zset.erase(g.control())) r.zset.insert(g.control());
        }
        r.indices.insert(*pi);
        r.indices.insert(*nj);
        r.lo = *pi;
        r.hi = *nj;
        return true;
    }

    // Nearest non-region gate on wire q beyond the region's own extent on
    // that wire; region gates on other wires are transparent.
    std::optional<size_t> boundary_left(const Region& r, uint32_t q) const {
        size_t start = r.lo;
        for (size_t i : r.indices)
            if (c_[i].touches(q)) { start = i; break; }  // indices are sorted
        for (size_t i = start; i-- > 0;) {
            if (r.indices.count(i)) continue;
            if (c_[i].touches(q)) return i;
        }
        return std::nullopt;
    }

    std::optional<size_t> boundary_right(const Region& r, uint32_t q) const {
        size_t start = r.hi;
        for (auto it = r.indices.rbegin(); it != r.indices.rend(); ++it)
            if (c_[*it].touches(q)) { start = *it; break; }
        for (size_t i = start + 1; i < c_.size(); ++i) {
            if (r.indices.count(i)) continue;
            if (c_[i].touches(q)) return i;
        }
        return std::nullopt;
    }

    // Per-qubit mirrored basis pairs fold into the string symbol. Repeats
    // per wire, so e.g. sdg,h ... h,s absorbs in two steps (Z -> X -> Y).
    PauliString absorb_basis(Region& r) {
        PauliString str(c_.width());
        int sign = 1;
        for (uint32_t q : r.zset) str[q] = Pauli::Z;

        for (uint32_t q : r.zset) {
            for (;;) {
                auto li = boundary_left(r, q);
                auto ri = boundary_right(r, q);
                if (!li || !ri || consumed_[*li] || consumed_[*ri]) break;
                const Gate& lg = c_[*li];
                const Gate& rg = c_[*ri];
                if (lg.two_qubit() || rg.two_qubit()) break;
                auto lk = as_basis_gate(lg);
                auto rk = as_basis_gate(rg);
                if (!lk || !rk || inverse_kind(*lk) != *rk) break;
                // gadget string symbol evolves by L^dag sym L
                auto [sym, sg] = conj_1q(inverse_kind(*lk), str[q]);
                if (sym == str[q] && sg == 1) break;  // no effect; leave alone
                str[q] = sym;
                sign *= sg;
                r.indices.insert(*li);
                r.indices.insert(*ri);
                r.lo = std::min(r.lo, *li);
                r.hi = std::max(r.hi, *ri);
            }
        }
        r.angle *= sign;
        return str;
    }

    // Emission order: raw gates sort at their own index; a gadget sorts at
    // its anchor. Gates left of the anchor inside a region's span commute
    // with every region gate before them (the peel and absorption checks
    // guarantee it), and symmetrically on the right, so this order is
    // equivalent to the input.
    std::vector<GadgetSegment> assemble() const {
        std::vector<size_t> owner(c_.size(), SIZE_MAX);
        for (size_t k = 0; k < regions_.size(); ++k)
            for (size_t i : regions_[k].first) owner[i] = k;

        struct Item {
            size_t pos;
            bool is_gadget;
            size_t payload;  // region id or gate index
        };
        std::vector<Item> items;
        for (size_t i = 0; i < c_.size(); ++i)
            if (owner[i] == SIZE_MAX) items.push_back({i, false, i});
        for (size_t k = 0; k < regions_.size(); ++k)
            items.push_back({region_anchor_[k], true, k});
        std::sort(items.begin(), items.end(),
                  [](const Item& a, const Item& b) { return a.pos < b.pos; });

        std::vector<GadgetSegment> segs;
        std::vector<Gate> raw;
        size_t raw_first = 0;
        auto flush_raw = [&](size_t last) {
            if (raw.empty()) return;
            GadgetSegment s;
            s.is_gadget = false;
            s.raw = std::move(raw);
            s.first = raw_first;
            s.last = last;
            segs.push_back(std::move(s));
            raw = {};
        };
        for (const Item& it : items) {
            if (!it.is_gadget) {
                if (raw.empty()) raw_first = it.payload;
                raw.push_back(c_[it.payload]);
                continue;
            }
            flush_raw(it.pos ? it.pos - 1 : 0);
            GadgetSegment s;
            s.is_gadget = true;
            s.gadget = regions_[it.payload].second;
            s.first = regions_[it.payload].first.front();
            s.last = regions_[it.payload].first.back();
            segs.push_back(std::move(s));
        }
        flush_raw(c_.empty() ? 0 : c_.size() - 1);
        return segs;
    }
};

}  // namespace

std::vector<GadgetSegment> detect_gadgets(const Circuit& c) {
    return Detector(c).run();
}

Circuit resynth_gadgets(const Circuit& c) {
    auto segs = detect_gadgets(c);
    Circuit out(c.width());
    out.set_phase(c.global_phase());

    std::vector<PauliGadget> run;
    auto flush = [&] {
        if (run.empty()) return;
        out.append(synth_chain(run, ChainStrategy::Aligned));
        run.clear();
    };
    for (const auto& seg : segs) {
        if (seg.is_gadget) {
            run.push_back(seg.gadget);
        } else {
            flush();
            for (const Gate& g : seg.raw) out.push(g);
        }
    }
    flush();
    return out;
}

}  // namespace pgopt::synth
