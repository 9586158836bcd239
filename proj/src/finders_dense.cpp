#include <functional>
#include <numeric>

#include "finder_support.hpp"

namespace rainbow {

using namespace detail;

namespace {

std::vector<Edge> edges_within(const std::vector<Vertex>& vertices) {
    std::vector<Edge> edges;
    edges.reserve(vertices.size() * (vertices.size() - 1) / 2);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j) edges.push_back(make_edge(vertices[i], vertices[j]));
    return edges;
}

// Union-find with parity: tracks whether a growing edge set stays bipartite.
class ParityForest {
public:
    bool add(Vertex u, Vertex v) {
        const auto [ru, pu] = find(u);
        const auto [rv, pv] = find(v);
        if (ru == rv) return pu != pv;
        parent_[ru] = rv;
        parity_[ru] = pu ^ pv ^ 1;
        return true;
    }

private:
    std::pair<Vertex, int> find(Vertex v) {
        if (!parent_.count(v)) {
            parent_[v] = v;
            parity_[v] = 0;
        }
        int parity = 0;
        Vertex r = v;
        while (parent_[r] != r) {
            parity ^= parity_[r];
            r = parent_[r];
        }
        return {r, parity};
    }

    std::map<Vertex, Vertex> parent_;
    std::map<Vertex, int> parity_;
};

bool stays_bipartite(const std::vector<Edge>& edges) {
    ParityForest forest;
    for (const auto& e : edges)
        if (!forest.add(e.a, e.b)) return false;
    return true;
}

}  // namespace

FinderOutcome find_clique(const ColoringFamily& family, std::size_t r, const FinderConfig& config) {
    if (r < 8) throw std::invalid_argument("find_clique handles r >= 8");
    if (family.n() % 2 != 0) throw std::invalid_argument("find_clique needs an even host");
    Diagnostics diag;
    auto stage = bipartite_stage(family, config, diag);
    if (auto* rf = std::get_if<ThresholdNotMet>(&stage)) return {*rf, std::move(diag)};
    const auto& [b1, b2, A] = std::get<BipartiteStage>(stage);
    if (A.size() < r - 2) return refuse(std::move(diag), "pair", static_cast<double>(A.size()), r - 2.0);

    const auto E = edges_within(A);
    std::vector<std::uint64_t> keys1, keys2;
    keys1.reserve(E.size());
    keys2.reserve(E.size());
    for (const auto& e : E) {
        keys1.push_back(family.color(b1, e));
        keys2.push_back(family.color(b2, e));
    }
    auto first = peel_stage(keys1, 3, config.coverage, "peel_b1", diag);
    if (auto* rf = std::get_if<ThresholdNotMet>(&first)) return {*rf, std::move(diag)};
    auto second = peel_stage(keys2, 3, config.coverage, "peel_b2", diag);
    if (auto* rf = std::get_if<ThresholdNotMet>(&second)) return {*rf, std::move(diag)};
    const auto& sys1 = std::get<PeelSystem>(first);
    const auto& sys2 = std::get<PeelSystem>(second);
    const auto hub = common_item({&sys1, &sys2}, E.size());
    if (!hub) return refuse(std::move(diag), "intersect", 0, 1);
    const auto i2 = partners(sys1, *hub)[0];
    std::uint32_t i3 = 0;
    for (auto q : partners(sys2, *hub))
        if (q != i2) {
            i3 = q;
            break;
        }
    const Edge f1 = E[*hub], f2 = E[i2], f3 = E[i3];

    std::vector<Vertex> chosen;
    for (const auto& e : {f1, f2, f3})
        for (Vertex v : {e.a, e.b})
            if (std::find(chosen.begin(), chosen.end(), v) == chosen.end()) chosen.push_back(v);
    for (Vertex a : A) {
        if (chosen.size() >= r - 2) break;
        if (std::find(chosen.begin(), chosen.end(), a) == chosen.end()) chosen.push_back(a);
    }

    std::vector<Vertex> image{b1, b2};
    std::vector<CollisionPair> collisions{{f1, f2}, {f1, f3}};
    for (Vertex a : chosen) {
        image.push_back(a);
        collisions.push_back({make_edge(a, b1), make_edge(a, b2)});
    }
    return succeed(family, clique(r), std::move(image), std::move(collisions), HubAnchor{b1, b2},
                   unused(A, chosen), std::move(diag));
}

FinderOutcome find_complete_bipartite(const ColoringFamily& family, std::size_t s, std::size_t t,
                                      const FinderConfig& config) {
    if (s < 7 || t < 7) throw std::invalid_argument("find_complete_bipartite handles s, t >= 7");
    if (family.n() % 3 != 0) throw std::invalid_argument("find_complete_bipartite needs a host size divisible by 3");
    Diagnostics diag;
    SplitOptions options;
    options.count_budget = config.total_count_budget;
    const auto split = clique_extract(family, options);
    const auto& VR = split.X;
    const auto& VL = split.L;
    if (split.pair_count) diag.set("clique_pairs", static_cast<double>(*split.pair_count));

    const std::vector<Vertex> window_vertices(
        VL.begin(), VL.begin() + static_cast<std::ptrdiff_t>(std::min(config.edge_window_vertices, VL.size())));
    const auto candidates = edges_within(window_vertices);
    if (candidates.size() < 2 || VL.size() < 4)
        return refuse(std::move(diag), "pair", static_cast<double>(candidates.size()), 2);
    PairBallot ballot(candidates.size());
    std::vector<std::uint64_t> keys(candidates.size());
    for (Vertex b : VR) {
        for (std::size_t i = 0; i < candidates.size(); ++i) keys[i] = family.color(b, candidates[i]);
        ballot.vote(keys);
    }
    const auto best = ballot.best();
    const Edge e1 = candidates[best.first], e2 = candidates[best.second];
    std::vector<Vertex> R;
    for (Vertex b : VR)
        if (family.color(b, e1) == family.color(b, e2)) R.push_back(b);
    diag.set("edge_window", static_cast<double>(candidates.size()));
    diag.set("A", static_cast<double>(R.size()));
    const std::size_t need = std::max<std::size_t>(10, s + t - 4);
    if (R.size() < need) return refuse(std::move(diag), "pair", static_cast<double>(R.size()), static_cast<double>(need));

    const Vertex v1 = e1.a, v2 = e1.b;
    Vertex u1 = e2.a, u2 = e2.b;
    const bool shared = shares_vertex(e1, e2);
    if (shared) {
        u1 = touches(e1, e2.a) ? e2.b : e2.a;
        for (Vertex v : VL)
            if (v != v1 && v != v2 && v != u1) {
                u2 = v;
                break;
            }
    }
    diag.set("shared_endpoint", shared ? 1 : 0);

    const auto E = edges_within(R);
    const std::pair<Vertex, std::size_t> owners[] = {{v1, 2}, {v2, 7}, {u1, 16}, {u2, 29}};
    const char* names[] = {"peel_v1", "peel_v2", "peel_u1", "peel_u2"};
    std::vector<PeelSystem> systems;
    for (std::size_t i = 0; i < 4; ++i) {
        std::vector<std::uint64_t> peel_keys;
        peel_keys.reserve(E.size());
        for (const auto& e : E) peel_keys.push_back(family.color(owners[i].first, e));
        auto system = peel_stage(peel_keys, owners[i].second, config.coverage, names[i], diag);
        if (auto* rf = std::get_if<ThresholdNotMet>(&system)) return {*rf, std::move(diag)};
        systems.push_back(std::move(std::get<PeelSystem>(system)));
    }
    const auto hub = common_item({&systems[0], &systems[1], &systems[2], &systems[3]}, E.size());
    if (!hub) return refuse(std::move(diag), "intersect", 0, 1);

    // e^1, its F1 partner, then one edge from each larger set keeping the special edges bipartite.
    std::vector<std::uint32_t> special{*hub, partners(systems[0], *hub)[0]};
    for (std::size_t i = 1; i < 4; ++i) {
        std::optional<std::uint32_t> pick, repeat;
        for (auto q : partners(systems[i], *hub)) {
            std::vector<Edge> trial;
            for (auto x : special) trial.push_back(E[x]);
            trial.push_back(E[q]);
            if (!stays_bipartite(trial)) continue;
            const bool fresh = std::find(special.begin(), special.end(), q) == special.end();
            if (fresh) {
                pick = q;
                break;
            }
            if (!repeat) repeat = q;
        }
        if (!pick) pick = repeat;
        if (!pick) throw std::logic_error("no bipartite-preserving edge in a peeled set");
        special.push_back(*pick);
    }

    // Components of the special graph, 2-colored, then oriented so the sides fit s and t.
    std::vector<Edge> graph{e1, e2};
    for (auto x : special) graph.push_back(E[x]);
    std::vector<Vertex> vertices{v1, v2, u1, u2};
    for (auto x : special)
        for (Vertex v : {E[x].a, E[x].b}) vertices.push_back(v);
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::map<Vertex, int> color;
    std::vector<std::array<std::vector<Vertex>, 2>> components;
    for (Vertex root : vertices) {
        if (color.count(root)) continue;
        components.emplace_back();
        std::vector<Vertex> stack{root};
        color[root] = 0;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            components.back()[color[v]].push_back(v);
            for (const auto& e : graph) {
                if (!touches(e, v)) continue;
                const Vertex w = e.a == v ? e.b : e.a;
                if (!color.count(w)) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    throw std::logic_error("special edges are not bipartite");
                }
            }
        }
    }
    std::optional<std::uint64_t> orientation;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << components.size()) && !orientation; ++mask) {
        std::size_t left = 0, right = 0;
        for (std::size_t c = 0; c < components.size(); ++c) {
            const int flip = (mask >> c) & 1;
            left += components[c][flip].size();
            right += components[c][1 - flip].size();
        }
        if (left <= s && right <= t) orientation = mask;
    }
    if (!orientation) throw std::logic_error("special edges do not fit the bipartite sides");
    std::vector<Vertex> left, right;
    for (std::size_t c = 0; c < components.size(); ++c) {
        const int flip = (*orientation >> c) & 1;
        left.insert(left.end(), components[c][flip].begin(), components[c][flip].end());
        right.insert(right.end(), components[c][1 - flip].begin(), components[c][1 - flip].end());
    }
    auto pool = unused(R, vertices);
    std::size_t next = 0;
    while (left.size() < s) left.push_back(pool[next++]);
    while (right.size() < t) right.push_back(pool[next++]);
    pool.erase(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(next));

    const Edge f1 = E[special[0]];
    std::map<Vertex, CollisionPair> by_owner;
    by_owner[v1] = {f1, E[special[1]]};
    by_owner[v2] = {f1, E[special[2]]};
    by_owner[u1] = {f1, E[special[3]]};
    by_owner[u2] = {f1, E[special[4]]};
    std::vector<Vertex> image(left);
    image.insert(image.end(), right.begin(), right.end());
    std::vector<CollisionPair> collisions;
    for (Vertex v : image) {
        const auto it = by_owner.find(v);
        collisions.push_back(it != by_owner.end() ? it->second : CollisionPair{e1, e2});
    }
    diag.set("special_vertices", static_cast<double>(vertices.size()));
    return succeed(family, complete_bipartite(s, t), std::move(image), std::move(collisions), CommonAnchor{e1, e2},
                   std::move(pool), std::move(diag));
}

}  // namespace rainbow
