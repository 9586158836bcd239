#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rainbow/pattern.hpp"

namespace rainbow {

/// Injective map V(H) -> V(K_n); the copy T is the image of H.
struct Embedding {
    PatternGraph pattern;
    std::vector<Vertex> image;

    Vertex operator[](Vertex pattern_vertex) const { return image[pattern_vertex]; }

    /// Host edges of the copy, in pattern edge order.
    std::vector<Edge> copy_edges() const;
    bool contains_edge(const Edge& host_edge) const;

    /// Throws std::invalid_argument unless the map is injective, total and inside [0, n).
    void validate(std::size_t n) const;
};

/// (n)_v / |Aut(H)|: the number of distinct copies of H in K_n.
std::uint64_t copy_count(const PatternGraph& pattern, std::size_t n);

/// Placements of H on the vertex set {0..v-1}, one per distinct copy. Each is
/// a permutation p with p[pattern vertex] = slot. Requires v <= 11.
std::vector<std::vector<Vertex>> labeled_placements(const PatternGraph& pattern);

/// Streams every copy of H in K_n exactly once: vertex subsets in
/// lexicographic order, then placements in lexicographic order. The visitor
/// receives the image map and returns false to stop early.
void enumerate_copies(const PatternGraph& pattern, std::size_t n,
                      const std::function<bool(std::span<const Vertex>)>& visit);

}  // namespace rainbow
