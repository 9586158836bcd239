#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/core.hpp"

namespace rainbow {

/// A small target graph H. Vertices are 0..num_vertices()-1; isolated
/// vertices are explicit. The optional name is a structural tag such as
/// "P4", "K7,7" or "P2+K2+K2+3K1" and is checked against the edges.
class PatternGraph {
public:
    PatternGraph() = default;
    PatternGraph(std::size_t num_vertices, std::vector<Edge> edges, std::string name = {});

    std::size_t num_vertices() const { return num_vertices_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& name() const { return name_; }

    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
    bool has_edge(Vertex u, Vertex v) const;
    std::size_t max_degree() const;
    std::size_t isolated_count() const;

    PatternGraph renamed(std::string name) const;

    friend bool operator==(const PatternGraph& x, const PatternGraph& y) {
        return x.num_vertices_ == y.num_vertices_ && x.edges_ == y.edges_;
    }

private:
    std::size_t num_vertices_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::string name_;
};

// Named constructors. Sizes must be positive; they throw std::invalid_argument otherwise.
PatternGraph path(std::size_t length);          // P_t: t edges, t+1 vertices
PatternGraph star(std::size_t leaves);          // S_t: centre 0
PatternGraph matching(std::size_t size);        // I_t
PatternGraph cycle(std::size_t length);         // C_t, t >= 3
PatternGraph clique(std::size_t order);         // K_r
PatternGraph complete_bipartite(std::size_t s, std::size_t t);  // sides [0,s) and [s,s+t)
PatternGraph isolated_vertices(std::size_t count);
PatternGraph disjoint_union(const PatternGraph& first, const PatternGraph& second);

/// Parses a tag: '+'-separated terms, each an optional multiplicity followed
/// by P<t>, S<t>, I<t>, C<t>, K<r> or K<s>,<t>. "3K1" adds three isolated vertices.
PatternGraph parse_pattern(std::string_view tag);

/// Vertex map sending every needle edge onto a haystack edge, if one exists.
/// Backtracking with degree pruning; intended for patterns up to ~20 vertices.
std::optional<std::vector<Vertex>> subgraph_contains(const PatternGraph& haystack,
                                                     const PatternGraph& needle);

bool isomorphic(const PatternGraph& x, const PatternGraph& y);

/// True when the pattern has no name or its name parses to an isomorphic graph.
bool tag_matches_structure(const PatternGraph& pattern);

/// Number of automorphisms, by exhaustive search.
std::uint64_t automorphism_count(const PatternGraph& pattern);

}  // namespace rainbow
