#include "rainbow/copies.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace rainbow {

std::vector<Edge> Embedding::copy_edges() const {
    std::vector<Edge> edges;
    edges.reserve(pattern.num_edges());
    for (const auto& e : pattern.edges()) edges.push_back(make_edge(image[e.a], image[e.b]));
    return edges;
}

bool Embedding::contains_edge(const Edge& host_edge) const {
    for (const auto& e : pattern.edges())
        if (make_edge(image[e.a], image[e.b]) == host_edge) return true;
    return false;
}

void Embedding::validate(std::size_t n) const {
    if (image.size() != pattern.num_vertices())
        throw std::invalid_argument("embedding has " + std::to_string(image.size()) +
                                    " images for a pattern with " +
                                    std::to_string(pattern.num_vertices()) + " vertices");
    std::vector<Vertex> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("embedding is not injective");
    if (!sorted.empty() && sorted.back() >= n)
        throw std::invalid_argument("embedding image " + std::to_string(sorted.back()) +
                                    " outside host of size " + std::to_string(n));
}

std::uint64_t copy_count(const PatternGraph& pattern, std::size_t n) {
    const std::size_t v = pattern.num_vertices();
    if (v > n) return 0;
    unsigned __int128 falling = 1;
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t aut = automorphism_count(pattern);
    for (std::size_t i = 0; i < v; ++i) {
        falling *= (n - i);
        if (falling / aut > kMax) return kMax;
    }
    return static_cast<std::uint64_t>(falling / aut);
}

std::vector<std::vector<Vertex>> labeled_placements(const PatternGraph& pattern) {
    const std::size_t v = pattern.num_vertices();
    if (v > 11) throw ScaleGuardExceeded("copy enumeration supports patterns with at most 11 vertices");
    std::vector<std::vector<Vertex>> placements;
    std::unordered_set<std::uint64_t> seen;
    std::vector<Vertex> p(v);
    std::iota(p.begin(), p.end(), Vertex{0});
    do {
        std::uint64_t mask = 0;
        for (const auto& e : pattern.edges()) {
            const auto f = make_edge(p[e.a], p[e.b]);
            mask |= std::uint64_t{1} << edge_index(v, f.a, f.b);
        }
        if (seen.insert(mask).second) placements.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return placements;
}

void enumerate_copies(const PatternGraph& pattern, std::size_t n,
                      const std::function<bool(std::span<const Vertex>)>& visit) {
    const std::size_t v = pattern.num_vertices();
    if (v > n)
        throw std::invalid_argument("pattern with " + std::to_string(v) +
                                    " vertices does not fit a host of size " + std::to_string(n));
    const auto placements = labeled_placements(pattern);
    std::vector<Vertex> subset(v);
    std::iota(subset.begin(), subset.end(), Vertex{0});
    std::vector<Vertex> image(v);
    while (true) {
        for (const auto& p : placements) {
            for (std::size_t u = 0; u < v; ++u) image[u] = subset[p[u]];
            if (!visit(image)) return;
        }
        // Next v-subset of [0, n) in lexicographic order.
        std::size_t i = v;
        while (i > 0 && subset[i - 1] == n - v + (i - 1)) --i;
        if (i == 0) return;
        ++subset[i - 1];
        for (std::size_t j = i; j < v; ++j) subset[j] = subset[j - 1] + 1;
    }
}

}  // namespace rainbow
