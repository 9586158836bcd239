#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rainbow/core.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

/// n colorings f_v : E(K_n) -> [1, k], one per owner vertex v.
///
/// Dense families store every (owner, edge) cell. The procedural kinds are
/// evaluated on demand so that hosts with thousands of vertices fit in memory:
///   uniform       cell i = owner * |E| + edge_index is 1 + scale_to(splitmix_at(seed, i), k),
///                 i.e. the i-th draw of a SplitMix64 stream, so materialize()
///                 reproduces the sequential stream exactly;
///   monochromatic every cell is 1;
///   injective     edge {a,b} gets 1 + edge_index(a,b) for every owner (needs k >= |E|);
///   rotated_sum   f_v({a,b}) = 1 + (a + b + v) mod k.
class ColoringFamily {
public:
    enum class Kind { dense, uniform, monochromatic, injective, rotated_sum };

    static ColoringFamily dense(std::size_t n, Color k, std::vector<Color> colors);
    static ColoringFamily uniform(std::size_t n, Color k, std::uint64_t seed);
    static ColoringFamily monochromatic(std::size_t n, Color k = 1);
    static ColoringFamily injective(std::size_t n, Color k);
    static ColoringFamily injective(std::size_t n) {
        return injective(n, static_cast<Color>(complete_edge_count(n)));
    }
    static ColoringFamily rotated_sum(std::size_t n, Color k);

    std::size_t n() const { return n_; }
    Color k() const { return k_; }
    Kind kind() const { return kind_; }
    std::uint64_t seed() const { return seed_; }
    std::uint64_t edge_count() const { return edges_; }

    Color color(Vertex owner, Vertex u, Vertex v) const {
        const Vertex a = u < v ? u : v;
        const Vertex b = u < v ? v : u;
        return color_at(owner, a, b, edge_index(n_, a, b));
    }
    Color color(Vertex owner, const Edge& e) const { return color_at(owner, e.a, e.b, edge_index(n_, e.a, e.b)); }

    /// All cells in owner-major, edge-lexicographic order.
    ColoringFamily materialize() const;

    /// Same cells, with k raised (no color changes).
    ColoringFamily with_palette(Color k) const;

    /// Dense storage; empty unless kind() == Kind::dense.
    std::span<const Color> cells() const { return cells_; }

    friend bool operator==(const ColoringFamily& x, const ColoringFamily& y);

private:
    ColoringFamily(Kind kind, std::size_t n, Color k, std::uint64_t seed);

    Color color_at(Vertex owner, Vertex a, Vertex b, std::uint64_t index) const {
        switch (kind_) {
            case Kind::dense: return cells_[owner * edges_ + index];
            case Kind::uniform:
                return 1 + static_cast<Color>(scale_to(splitmix_at(seed_, owner * edges_ + index), k_));
            case Kind::monochromatic: return 1;
            case Kind::injective: return static_cast<Color>(index + 1);
            case Kind::rotated_sum: return 1 + static_cast<Color>((std::uint64_t{a} + b + owner) % k_);
        }
        return 0;
    }

    Kind kind_;
    std::size_t n_;
    Color k_;
    std::uint64_t seed_ = 0;
    std::uint64_t edges_;
    std::vector<Color> cells_;
};

}  // namespace rainbow
