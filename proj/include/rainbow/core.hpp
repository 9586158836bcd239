#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace rainbow {

using Vertex = std::uint32_t;
using Color = std::uint32_t;

// Unordered edge stored canonically with a < b.
struct Edge {
    Vertex a = 0;
    Vertex b = 0;

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("edge endpoints must be distinct");
    return u < v ? Edge{u, v} : Edge{v, u};
}

inline bool touches(const Edge& e, Vertex v) { return e.a == v || e.b == v; }

inline bool shares_vertex(const Edge& e, const Edge& f) {
    return touches(f, e.a) || touches(f, e.b);
}

/// Number of edges of K_n.
constexpr std::uint64_t complete_edge_count(std::uint64_t n) { return n * (n - 1) / 2; }

/// Position of {a,b} (a<b) in the lexicographic order of E(K_n).
constexpr std::uint64_t edge_index(std::uint64_t n, Vertex a, Vertex b) {
    return static_cast<std::uint64_t>(a) * (2 * n - a - 1) / 2 + (b - a - 1);
}

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exhaustive computation would exceed its configured work limit.
class ScaleGuardExceeded : public Error {
public:
    using Error::Error;
};

std::string to_string(const Edge& e);

}  // namespace rainbow
