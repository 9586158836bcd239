#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "rainbow/family.hpp"

namespace rainbow {

/// Sum of C(size, 2) over color buckets; the number of colliding unordered pairs.
std::uint64_t pairs_in_buckets(std::span<const Color> colors);

/// x(x-1)/2 and x(x-1)(x-2)/6 over the reals (convex extensions used in bounds).
double real_choose2(double x);
double real_choose3(double x);

// ---------------------------------------------------------------------------
// Star extraction on K_n.

struct StarExtraction {
    Vertex x = 0;
    std::vector<Vertex> S;  // f_x(xs) equal for all s in S
    std::vector<Vertex> P;  // everything outside S and x
    std::optional<std::uint64_t> triple_count;  // (unordered {s,s'}, p) with f_p(xs) = f_p(xs')
};

struct StarOptions {
    std::optional<Vertex> x;          // force the center
    std::size_t x_candidates = 0;     // 0 tries every vertex, else vertices 0..x_candidates-1
    std::optional<std::size_t> s_cap; // keep only the first s_cap vertices of the color class
    std::uint64_t count_budget = std::numeric_limits<std::uint64_t>::max();
};

StarExtraction star_extract(const ColoringFamily& family, const StarOptions& options = {});
std::uint64_t star_triple_count(const ColoringFamily& family, Vertex x, std::span<const Vertex> S,
                                std::span<const Vertex> P);

/// Smallest host size from which n^3/(24k^3) follows from the convexity step,
/// provided |P| >= n/2.
std::size_t star_threshold(Color k);
double star_bound(std::size_t n, Color k);
/// k * C(|S|/k, 2) * |P|: the finite inequality every star extraction satisfies.
double star_convexity_floor(std::size_t s_size, std::size_t p_size, Color k);

// ---------------------------------------------------------------------------
// Matching extraction on K_{3n}: Y of size n, perfect matching M on the rest.

struct MatchingExtraction {
    std::vector<Vertex> Y;
    std::vector<Edge> M;
    std::optional<std::uint64_t> triple_count;  // (unordered {e,e'}, p in Y) with f_p(e) = f_p(e')
};

/// Split candidates: candidate j relabels vertex v as (v + j*n) mod 3n before
/// taking X = [0,2n) matched as (0,1),(2,3),... and Y = [2n,3n). With seed set,
/// candidate 0 is a seeded random permutation instead.
struct SplitOptions {
    std::size_t candidates = 1;
    std::optional<std::uint64_t> seed;
    std::uint64_t count_budget = std::numeric_limits<std::uint64_t>::max();
};

MatchingExtraction matching_extract(const ColoringFamily& family, const SplitOptions& options = {});
std::uint64_t matching_triple_count(const ColoringFamily& family, std::span<const Edge> M,
                                    std::span<const Vertex> Y);

// ---------------------------------------------------------------------------
// Bipartition extraction on K_{2n}.

struct BipartitionExtraction {
    std::vector<Vertex> A;
    std::vector<Vertex> B;
    std::optional<std::uint64_t> triple_count;  // (a, unordered {b1,b2}) with f_a(ab1) = f_a(ab2)
};

BipartitionExtraction bipartition_extract(const ColoringFamily& family, const SplitOptions& options = {});
std::uint64_t bipartition_triple_count(const ColoringFamily& family, std::span<const Vertex> A,
                                       std::span<const Vertex> B);

// ---------------------------------------------------------------------------
// Clique extraction on K_{3n}: X of size n, L of size 2n.

struct CliqueExtraction {
    std::vector<Vertex> X;
    std::vector<Vertex> L;
    std::optional<std::uint64_t> pair_count;  // (b in X, unordered {e,e'} in E(L)) with f_b(e) = f_b(e')
};

/// Pair counting costs |X| * |E(L)|; it is skipped (pair_count absent) above
/// options.count_budget, and with more than one split candidate that raises
/// ScaleGuardExceeded instead.
CliqueExtraction clique_extract(const ColoringFamily& family, const SplitOptions& options = {});
std::uint64_t clique_pair_count(const ColoringFamily& family, std::span<const Vertex> X,
                                std::span<const Vertex> L);

/// Smallest part size n from which the stated bound follows by convexity.
std::size_t matching_threshold(Color k);      // n^3/(3k)
std::size_t bipartition_threshold(Color k);   // n^3/(3k)
std::size_t clique_threshold(Color k);        // n^5/(3k)
double cubic_bound(std::size_t n, Color k);   // n^3/(3k)
double quintic_bound(std::size_t n, Color k); // n^5/(3k)

}  // namespace rainbow
