#pragma once

// Independent reference implementations used by the unit tests and the
// acceptance runner. Deliberately naive: nothing here reuses library code
// beyond the data types and ColoringFamily::color.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/family.hpp"
#include "rainbow/pattern.hpp"

namespace oracle {

using rainbow::Color;
using rainbow::ColoringFamily;
using rainbow::PatternGraph;
using rainbow::Vertex;

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

// Every injective map V(H) -> [n], in lexicographic order.
inline void for_each_labeled(std::size_t v, std::size_t n, const std::function<void(const std::vector<Vertex>&)>& f) {
    std::vector<Vertex> map(v);
    std::vector<char> used(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == v) {
            f(map);
            return;
        }
        for (Vertex x = 0; x < n; ++x) {
            if (used[x]) continue;
            used[x] = 1;
            map[i] = x;
            rec(i + 1);
            used[x] = 0;
        }
    };
    rec(0);
}

inline EdgeList image_edges(const PatternGraph& H, const std::vector<Vertex>& map) {
    EdgeList out;
    for (const auto& e : H.edges()) {
        Vertex a = map[e.a], b = map[e.b];
        out.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Distinct copies = distinct (edge set, vertex set) images of labeled maps.
inline std::uint64_t copy_count(const PatternGraph& H, std::size_t n) {
    std::set<std::pair<EdgeList, std::vector<Vertex>>> seen;
    for_each_labeled(H.num_vertices(), n, [&](const std::vector<Vertex>& map) {
        auto vs = map;
        std::sort(vs.begin(), vs.end());
        seen.emplace(image_edges(H, map), vs);
    });
    return seen.size();
}

inline bool rainbow_for(const ColoringFamily& f, Vertex owner, const EdgeList& edges) {
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (f.color(owner, edges[i].first, edges[i].second) == f.color(owner, edges[j].first, edges[j].second))
                return false;
    return true;
}

// Goodness over all labeled embeddings (each copy visited |Aut(H)| times).
inline bool is_good(const ColoringFamily& f, const PatternGraph& H) {
    bool good = true;
    for_each_labeled(H.num_vertices(), f.n(), [&](const std::vector<Vertex>& map) {
        if (!good) return;
        const auto edges = image_edges(H, map);
        bool some = false;
        for (Vertex v : map) some = some || rainbow_for(f, v, edges);
        if (!some) good = false;
    });
    return good;
}

// --- extraction recounts -------------------------------------------------

inline std::uint64_t star_triples(const ColoringFamily& f, Vertex x, const std::vector<Vertex>& S,
                                  const std::vector<Vertex>& P) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j)
            for (Vertex p : P) c += f.color(p, x, S[i]) == f.color(p, x, S[j]);
    return c;
}

inline std::uint64_t matching_triples(const ColoringFamily& f, const EdgeList& M, const std::vector<Vertex>& Y) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = i + 1; j < M.size(); ++j)
            for (Vertex p : Y) c += f.color(p, M[i].first, M[i].second) == f.color(p, M[j].first, M[j].second);
    return c;
}

inline std::uint64_t bipartition_triples(const ColoringFamily& f, const std::vector<Vertex>& A,
                                         const std::vector<Vertex>& B) {
    std::uint64_t c = 0;
    for (Vertex a : A)
        for (std::size_t i = 0; i < B.size(); ++i)
            for (std::size_t j = i + 1; j < B.size(); ++j) c += f.color(a, a, B[i]) == f.color(a, a, B[j]);
    return c;
}

inline std::uint64_t clique_pairs(const ColoringFamily& f, const std::vector<Vertex>& X, const std::vector<Vertex>& L) {
    EdgeList edges;
    for (std::size_t i = 0; i < L.size(); ++i)
        for (std::size_t j = i + 1; j < L.size(); ++j) edges.emplace_back(L[i], L[j]);
    std::uint64_t c = 0;
    for (Vertex b : X)
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j)
                c += f.color(b, edges[i].first, edges[i].second) == f.color(b, edges[j].first, edges[j].second);
    return c;
}

// --- raw exhaustive goodness ----------------------------------------------

// Does any family with k colors on K_n exist that is good for H? Loops over
// all k^(n*|E|) families; per-owner colorings are pre-scored into bitmasks
// of the copies they are rainbow on. Needs at most 64 copies.
inline bool raw_good_exists(std::size_t n, const PatternGraph& H, Color k) {
    if (H.num_vertices() > n) return true;
    EdgeList host;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) host.emplace_back(a, b);
    const std::size_t E = host.size();
    std::vector<EdgeList> copies;
    std::vector<std::vector<Vertex>> copy_vertices;
    {
        std::set<std::pair<EdgeList, std::vector<Vertex>>> seen;
        for_each_labeled(H.num_vertices(), n, [&](const std::vector<Vertex>& map) {
            auto vs = map;
            std::sort(vs.begin(), vs.end());
            if (seen.emplace(image_edges(H, map), vs).second) {
                copies.push_back(image_edges(H, map));
                copy_vertices.push_back(vs);
            }
        });
    }
    if (copies.size() > 64) throw std::invalid_argument("raw oracle handles at most 64 copies");
    const std::uint64_t all = copies.size() == 64 ? ~0ULL : ((1ULL << copies.size()) - 1);
    std::uint64_t per_owner = 1;
    for (std::size_t i = 0; i < E; ++i) per_owner *= k;

    auto edge_pos = [&](Vertex a, Vertex b) {
        return static_cast<std::size_t>(std::find(host.begin(), host.end(), std::make_pair(a, b)) - host.begin());
    };
    // mask[v][c]: copies containing v on which coloring number c is rainbow.
    std::vector<std::vector<std::uint64_t>> mask(n, std::vector<std::uint64_t>(per_owner, 0));
    std::vector<Color> colors(E);
    for (std::uint64_t code = 0; code < per_owner; ++code) {
        std::uint64_t c = code;
        for (std::size_t i = 0; i < E; ++i) {
            colors[i] = static_cast<Color>(c % k);
            c /= k;
        }
        std::uint64_t rainbow = 0;
        for (std::size_t t = 0; t < copies.size(); ++t) {
            std::vector<Color> seen;
            for (auto& e : copies[t]) seen.push_back(colors[edge_pos(e.first, e.second)]);
            std::sort(seen.begin(), seen.end());
            if (std::adjacent_find(seen.begin(), seen.end()) == seen.end()) rainbow |= 1ULL << t;
        }
        for (Vertex v = 0; v < n; ++v) {
            std::uint64_t contains = 0;
            for (std::size_t t = 0; t < copies.size(); ++t)
                if (std::binary_search(copy_vertices[t].begin(), copy_vertices[t].end(), v)) contains |= 1ULL << t;
            mask[v][code] = rainbow & contains;
        }
    }
    // Odometer over (c_0, ..., c_{n-1}).
    std::vector<std::uint64_t> idx(n, 0);
    while (true) {
        std::uint64_t covered = 0;
        for (Vertex v = 0; v < n; ++v) covered |= mask[v][idx[v]];
        if (covered == all) return true;
        std::size_t pos = 0;
        while (pos < n && ++idx[pos] == per_owner) idx[pos++] = 0;
        if (pos == n) return false;
    }
}

// --- DPLL -----------------------------------------------------------------

struct Cnf {
    int variables = 0;
    std::vector<std::vector<int>> clauses;
};

inline Cnf parse_dimacs(const std::string& text) {
    Cnf cnf;
    std::istringstream in(text);
    std::string line;
    std::vector<int> current;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            std::size_t count;
            ls >> p >> fmt >> cnf.variables >> count;
            continue;
        }
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                cnf.clauses.push_back(current);
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
    }
    return cnf;
}

// Plain recursive DPLL with unit propagation. Returns a full model
// (index = variable, value +1/-1) or empty when unsatisfiable.
inline std::vector<int> dpll(const Cnf& cnf) {
    std::vector<int> value(cnf.variables + 1, 0);
    std::function<bool()> solve = [&]() -> bool {
        std::vector<int> assigned;
        auto undo = [&] {
            for (int v : assigned) value[v] = 0;
        };
        while (true) {
            bool changed = false;
            for (const auto& clause : cnf.clauses) {
                int unassigned = 0, last = 0;
                bool sat = false;
                for (int lit : clause) {
                    const int v = value[std::abs(lit)];
                    if (v == 0) {
                        ++unassigned;
                        last = lit;
                    } else if ((v > 0) == (lit > 0)) {
                        sat = true;
                        break;
                    }
                }
                if (sat) continue;
                if (unassigned == 0) {
                    undo();
                    return false;
                }
                if (unassigned == 1) {
                    value[std::abs(last)] = last > 0 ? 1 : -1;
                    assigned.push_back(std::abs(last));
                    changed = true;
                }
            }
            if (!changed) break;
        }
        int branch = 0;
        for (int v = 1; v <= cnf.variables && !branch; ++v)
            if (value[v] == 0) branch = v;
        if (!branch) return true;
        for (int polarity : {1, -1}) {
            value[branch] = polarity;
            if (solve()) return true;
            value[branch] = 0;
        }
        undo();
        return false;
    };
    if (!solve()) return {};
    return value;
}

// --- graph catalog --------------------------------------------------------

// Canonical form of a graph on v vertices: lexicographically least sorted
// edge list over all vertex permutations.
inline EdgeList canonical(std::size_t v, const EdgeList& edges) {
    std::vector<Vertex> perm(v);
    std::iota(perm.begin(), perm.end(), 0);
    EdgeList best;
    bool first = true;
    do {
        EdgeList mapped;
        for (auto& e : edges) {
            Vertex a = perm[e.first], b = perm[e.second];
            mapped.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(mapped.begin(), mapped.end());
        if (first || mapped < best) {
            best = mapped;
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

struct SmallGraph {
    std::size_t vertices;
    EdgeList edges;
    bool operator<(const SmallGraph& o) const {
        return std::tie(vertices, edges) < std::tie(o.vertices, o.edges);
    }
};

// Connected graphs with exactly e edges, up to isomorphism. Grown one edge
// at a time: every connected graph loses a cycle edge or a leaf edge and
// stays connected, so the growth reaches all of them.
inline std::vector<std::vector<SmallGraph>> connected_graphs(std::size_t max_edges) {
    std::vector<std::vector<SmallGraph>> by_edges(max_edges + 1);
    by_edges[1] = {SmallGraph{2, {{0, 1}}}};
    for (std::size_t e = 2; e <= max_edges; ++e) {
        std::set<SmallGraph> found;
        for (const auto& g : by_edges[e - 1]) {
            auto present = [&](Vertex a, Vertex b) {
                return std::find(g.edges.begin(), g.edges.end(), std::make_pair(a, b)) != g.edges.end();
            };
            for (Vertex a = 0; a < g.vertices; ++a) {
                for (Vertex b = a + 1; b < g.vertices; ++b) {
                    if (present(a, b)) continue;
                    auto edges = g.edges;
                    edges.emplace_back(a, b);
                    found.insert(SmallGraph{g.vertices, canonical(g.vertices, edges)});
                }
                auto edges = g.edges;
                edges.emplace_back(a, static_cast<Vertex>(g.vertices));
                found.insert(SmallGraph{g.vertices + 1, canonical(g.vertices + 1, edges)});
            }
        }
        by_edges[e].assign(found.begin(), found.end());
    }
    return by_edges;
}

// All graphs with exactly `edges` edges and no isolated vertices, up to
// isomorphism, as multisets of connected components.
inline std::vector<PatternGraph> graphs_without_isolated(std::size_t edges) {
    const auto conn = connected_graphs(edges);
    std::vector<SmallGraph> pool;  // ordered by (edges, index) for multiset generation
    for (std::size_t e = 1; e <= edges; ++e)
        for (const auto& g : conn[e]) pool.push_back(g);
    std::vector<PatternGraph> out;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t remaining) {
        if (remaining == 0) {
            std::vector<rainbow::Edge> all;
            std::size_t offset = 0;
            for (auto i : chosen) {
                for (auto& [a, b] : pool[i].edges)
                    all.push_back(rainbow::make_edge(static_cast<Vertex>(a + offset), static_cast<Vertex>(b + offset)));
                offset += pool[i].vertices;
            }
            out.emplace_back(offset, std::move(all));
            return;
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
            if (pool[i].edges.size() > remaining) continue;
            chosen.push_back(i);
            rec(i, remaining - pool[i].edges.size());
            chosen.pop_back();
        }
    };
    rec(0, edges);
    return out;
}

}  // namespace oracle
