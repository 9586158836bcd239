#pragma once

// Shared stages of the violation finders.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <variant>

#include "rainbow/extract.hpp"
#include "rainbow/finders.hpp"
#include "rainbow/peel.hpp"
#include "rainbow/verify.hpp"

namespace rainbow::detail {

inline std::uint64_t pack(Color a, Color b) { return (std::uint64_t{a} << 32) | b; }

/// Dense ranks of color tuples, so any tuple width fits a 64-bit key.
template <std::size_t N>
std::vector<std::uint64_t> rank_keys(const std::vector<std::array<Color, N>>& tuples) {
    std::vector<std::array<Color, N>> distinct(tuples);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<std::uint64_t> keys;
    keys.reserve(tuples.size());
    for (const auto& t : tuples)
        keys.push_back(static_cast<std::uint64_t>(std::lower_bound(distinct.begin(), distinct.end(), t) -
                                                  distinct.begin()));
    return keys;
}

inline FinderOutcome refuse(Diagnostics diag, std::string stage, double observed, double required) {
    return FinderOutcome{ThresholdNotMet{std::move(stage), observed, required}, std::move(diag)};
}

/// Assembles a result and re-checks it; a failed check is a bug, not a refusal.
inline FinderOutcome succeed(const ColoringFamily& family, PatternGraph pattern, std::vector<Vertex> image,
                             std::vector<CollisionPair> collisions, Anchor anchor, std::vector<Vertex> slack,
                             Diagnostics diag) {
    for (auto& c : collisions)
        if (c.second < c.first) std::swap(c.first, c.second);
    AnchoredViolation av{ViolationCertificate{Embedding{std::move(pattern), std::move(image)}, std::move(collisions)},
                         std::move(anchor), std::move(slack)};
    const auto check = check_anchored(family, av);
    if (!check) {
        std::string what = "finder produced an invalid certificate:";
        for (const auto& p : check.problems) what += " " + p + ";";
        throw std::logic_error(what);
    }
    diag.set("slack", static_cast<double>(av.slack.size()));
    return FinderOutcome{std::move(av), std::move(diag)};
}

/// Vertices of `pool` not in `used`, in pool order.
inline std::vector<Vertex> unused(const std::vector<Vertex>& pool, const std::vector<Vertex>& used) {
    std::vector<Vertex> sorted(used);
    std::sort(sorted.begin(), sorted.end());
    std::vector<Vertex> out;
    for (Vertex v : pool)
        if (!std::binary_search(sorted.begin(), sorted.end(), v)) out.push_back(v);
    return out;
}

/// Consecutive pairs (A[0],A[1]), (A[2],A[3]), ...
inline std::vector<Edge> consecutive_matching(const std::vector<Vertex>& A) {
    std::vector<Edge> H;
    for (std::size_t i = 0; i + 1 < A.size(); i += 2) H.push_back(make_edge(A[i], A[i + 1]));
    return H;
}

/// First item covered by every system, in item order.
inline std::optional<std::uint32_t> common_item(const std::vector<const PeelSystem*>& systems, std::size_t items) {
    for (std::uint32_t i = 0; i < items; ++i) {
        bool all = true;
        for (const auto* s : systems) all = all && s->tuple_of[i] >= 0;
        if (all) return i;
    }
    return std::nullopt;
}

/// Members of the tuple containing `item`, other than `item`.
inline std::vector<std::uint32_t> partners(const PeelSystem& system, std::uint32_t item) {
    std::vector<std::uint32_t> out;
    for (auto x : system.tuples[static_cast<std::size_t>(system.tuple_of[item])])
        if (x != item) out.push_back(x);
    return out;
}

// -- anchor stages ---------------------------------------------------------

/// x with S, the best pair (s, s') and A = {p in P : f_p(xs) = f_p(xs')}.
struct StarStage {
    Vertex x = 0, s = 0, s2 = 0;
    std::vector<Vertex> A;
};

std::variant<StarStage, ThresholdNotMet> star_stage(const ColoringFamily& family, const FinderConfig& config,
                                                    Diagnostics& diag);

/// e1 = v1u1, e2 = v2u2 from M and A = {p in Y : f_p(e1) = f_p(e2)}.
struct MatchingStage {
    Edge e1, e2;
    std::vector<Vertex> A;
};

std::variant<MatchingStage, ThresholdNotMet> matching_stage(const ColoringFamily& family, const FinderConfig& config,
                                                            Diagnostics& diag);

/// (b1, b2) from B and A' = {a in A : f_a(ab1) = f_a(ab2)}.
struct BipartiteStage {
    Vertex b1 = 0, b2 = 0;
    std::vector<Vertex> A;
};

std::variant<BipartiteStage, ThresholdNotMet> bipartite_stage(const ColoringFamily& family,
                                                              const FinderConfig& config, Diagnostics& diag);

/// Peels `keys` into tuples and refuses below the coverage target.
std::variant<PeelSystem, ThresholdNotMet> peel_stage(const std::vector<std::uint64_t>& keys, std::size_t tuple_size,
                                                     double coverage, const std::string& stage, Diagnostics& diag);

}  // namespace rainbow::detail
