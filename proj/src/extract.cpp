#include "rainbow/extract.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "rainbow/buckets.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

std::uint64_t pairs_in_buckets(std::span<const Color> colors) {
    std::vector<Color> sorted(colors.begin(), colors.end());
    std::sort(sorted.begin(), sorted.end());
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        total += (j - i) * (j - i - 1) / 2;
        i = j;
    }
    return total;
}

double real_choose2(double x) { return x * (x - 1) / 2; }
double real_choose3(double x) { return x * (x - 1) * (x - 2) / 6; }

namespace {

// Smallest n >= lo with holds(m) for every m in [n, hi]; scanning downward.
std::size_t scan_threshold(std::size_t lo, std::size_t hi, const std::function<bool(std::size_t)>& holds) {
    std::size_t n = hi + 1;
    while (n > lo && holds(n - 1)) --n;
    return n;
}

std::vector<Vertex> split_order(std::size_t n, std::size_t candidate, std::size_t part,
                                const std::optional<std::uint64_t>& seed) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    if (seed && candidate == 0) {
        SplitMix64 rng(*seed);
        for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
        return order;
    }
    std::rotate(order.begin(), order.begin() + static_cast<std::ptrdiff_t>((candidate * part) % n), order.end());
    return order;
}

void require_candidates(const SplitOptions& options) {
    if (options.candidates == 0) throw std::invalid_argument("at least one split candidate is needed");
}

}  // namespace

// ---------------------------------------------------------------------------

std::uint64_t star_triple_count(const ColoringFamily& family, Vertex x, std::span<const Vertex> S,
                                std::span<const Vertex> P) {
    BucketCounter counter(family.k());
    std::vector<Color> colors(S.size());
    std::uint64_t total = 0;
    for (Vertex p : P) {
        for (std::size_t i = 0; i < S.size(); ++i) colors[i] = family.color(p, x, S[i]);
        total += counter.pairs(colors);
    }
    return total;
}

namespace {

StarExtraction star_at(const ColoringFamily& family, Vertex x, const StarOptions& options) {
    const std::size_t n = family.n();
    // Largest color class of f_x on the edges at x; ties go to the smaller color.
    std::vector<std::pair<Color, Vertex>> rows;
    rows.reserve(n - 1);
    for (Vertex v = 0; v < n; ++v)
        if (v != x) rows.emplace_back(family.color(x, x, v), v);
    std::sort(rows.begin(), rows.end());
    std::size_t best_begin = 0, best_size = 0;
    for (std::size_t i = 0; i < rows.size();) {
        std::size_t j = i;
        while (j < rows.size() && rows[j].first == rows[i].first) ++j;
        if (j - i > best_size) best_begin = i, best_size = j - i;
        i = j;
    }
    if (options.s_cap) best_size = std::min(best_size, *options.s_cap);

    StarExtraction out;
    out.x = x;
    std::vector<bool> in_s(n, false);
    for (std::size_t i = best_begin; i < best_begin + best_size; ++i) {
        out.S.push_back(rows[i].second);
        in_s[rows[i].second] = true;
    }
    for (Vertex v = 0; v < n; ++v)
        if (v != x && !in_s[v]) out.P.push_back(v);
    return out;
}

}  // namespace

StarExtraction star_extract(const ColoringFamily& family, const StarOptions& options) {
    const std::size_t n = family.n();
    if (n < 3) throw std::invalid_argument("star extraction needs a host of at least 3 vertices");
    if (options.x) {
        if (*options.x >= n) throw std::out_of_range("forced center outside the host");
        auto out = star_at(family, *options.x, options);
        if (static_cast<double>(out.S.size()) * out.P.size() <= static_cast<double>(options.count_budget))
            out.triple_count = star_triple_count(family, out.x, out.S, out.P);
        return out;
    }
    const std::size_t candidates = options.x_candidates == 0 ? n : std::min(n, options.x_candidates);
    if (candidates == 1) {
        StarOptions forced = options;
        forced.x = 0;
        return star_extract(family, forced);
    }
    std::optional<StarExtraction> best;
    for (Vertex x = 0; x < candidates; ++x) {
        auto current = star_at(family, x, options);
        current.triple_count = star_triple_count(family, x, current.S, current.P);
        if (!best || *current.triple_count > *best->triple_count) best = std::move(current);
    }
    return *best;
}

double star_bound(std::size_t n, Color k) {
    const double nn = static_cast<double>(n), kk = k;
    return nn * nn * nn / (24 * kk * kk * kk);
}

double star_convexity_floor(std::size_t s_size, std::size_t p_size, Color k) {
    const double per = k * real_choose2(static_cast<double>(s_size) / k);
    return per > 0 ? per * static_cast<double>(p_size) : 0.0;
}

std::size_t star_threshold(Color k) {
    // |S| >= (n-1)/k, so each p contributes at least k * C((n-1)/k^2, 2); with |P| >= n/2
    // the total reaches n^3/(24k^3). Holds for every n >= 5k^2, so scan below that.
    const double kk = k;
    const std::size_t hi = 5 * static_cast<std::size_t>(k) * k + 16;
    return scan_threshold(3, hi, [&](std::size_t n) {
        const double x = (static_cast<double>(n) - 1) / (kk * kk);
        if (x < 1) return false;
        return (static_cast<double>(n) / 2) * kk * real_choose2(x) >= star_bound(n, k);
    });
}

// ---------------------------------------------------------------------------

std::uint64_t matching_triple_count(const ColoringFamily& family, std::span<const Edge> M,
                                    std::span<const Vertex> Y) {
    BucketCounter counter(family.k());
    std::vector<Color> colors(M.size());
    std::uint64_t total = 0;
    for (Vertex p : Y) {
        for (std::size_t i = 0; i < M.size(); ++i) colors[i] = family.color(p, M[i]);
        total += counter.pairs(colors);
    }
    return total;
}

MatchingExtraction matching_extract(const ColoringFamily& family, const SplitOptions& options) {
    const std::size_t host = family.n();
    if (host % 3 != 0) throw std::invalid_argument("matching extraction needs a host size divisible by 3");
    require_candidates(options);
    const std::size_t n = host / 3;
    const bool counting =
        options.candidates > 1 || static_cast<double>(n) * n <= static_cast<double>(options.count_budget);
    std::optional<MatchingExtraction> best;
    for (std::size_t j = 0; j < options.candidates; ++j) {
        const auto order = split_order(host, j, n, options.seed);
        MatchingExtraction current;
        for (std::size_t i = 0; i < 2 * n; i += 2) current.M.push_back(make_edge(order[i], order[i + 1]));
        current.Y.assign(order.begin() + static_cast<std::ptrdiff_t>(2 * n), order.end());
        if (counting) current.triple_count = matching_triple_count(family, current.M, current.Y);
        if (!best || (counting && *current.triple_count > *best->triple_count)) best = std::move(current);
    }
    return *best;
}

std::uint64_t bipartition_triple_count(const ColoringFamily& family, std::span<const Vertex> A,
                                       std::span<const Vertex> B) {
    BucketCounter counter(family.k());
    std::vector<Color> colors(B.size());
    std::uint64_t total = 0;
    for (Vertex a : A) {
        for (std::size_t i = 0; i < B.size(); ++i) colors[i] = family.color(a, a, B[i]);
        total += counter.pairs(colors);
    }
    return total;
}

BipartitionExtraction bipartition_extract(const ColoringFamily& family, const SplitOptions& options) {
    const std::size_t host = family.n();
    if (host % 2 != 0) throw std::invalid_argument("bipartition extraction needs an even host size");
    require_candidates(options);
    const std::size_t n = host / 2;
    const bool counting =
        options.candidates > 1 || static_cast<double>(n) * n <= static_cast<double>(options.count_budget);
    std::optional<BipartitionExtraction> best;
    for (std::size_t j = 0; j < options.candidates; ++j) {
        const auto order = split_order(host, j, n, options.seed);
        BipartitionExtraction current;
        current.A.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n));
        current.B.assign(order.begin() + static_cast<std::ptrdiff_t>(n), order.end());
        if (counting) current.triple_count = bipartition_triple_count(family, current.A, current.B);
        if (!best || (counting && *current.triple_count > *best->triple_count)) best = std::move(current);
    }
    return *best;
}

std::uint64_t clique_pair_count(const ColoringFamily& family, std::span<const Vertex> X,
                                std::span<const Vertex> L) {
    BucketCounter counter(family.k());
    std::vector<Color> colors;
    colors.reserve(L.size() * (L.size() - 1) / 2);
    std::uint64_t total = 0;
    for (Vertex b : X) {
        colors.clear();
        for (std::size_t i = 0; i < L.size(); ++i)
            for (std::size_t j = i + 1; j < L.size(); ++j) colors.push_back(family.color(b, L[i], L[j]));
        total += counter.pairs(colors);
    }
    return total;
}

CliqueExtraction clique_extract(const ColoringFamily& family, const SplitOptions& options) {
    const std::size_t host = family.n();
    if (host % 3 != 0) throw std::invalid_argument("clique extraction needs a host size divisible by 3");
    require_candidates(options);
    const std::size_t n = host / 3;
    const double work = static_cast<double>(n) * static_cast<double>(complete_edge_count(2 * n));
    const bool counting = work <= static_cast<double>(options.count_budget);
    if (!counting && options.candidates > 1)
        throw ScaleGuardExceeded("comparing clique splits needs " + std::to_string(work) +
                                 " cell reads, above the configured budget");
    std::optional<CliqueExtraction> best;
    for (std::size_t j = 0; j < options.candidates; ++j) {
        const auto order = split_order(host, j, n, options.seed);
        CliqueExtraction current;
        current.L.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(2 * n));
        current.X.assign(order.begin() + static_cast<std::ptrdiff_t>(2 * n), order.end());
        if (counting) current.pair_count = clique_pair_count(family, current.X, current.L);
        if (!best || (counting && *current.pair_count > *best->pair_count)) best = std::move(current);
    }
    return *best;
}

double cubic_bound(std::size_t n, Color k) {
    const double nn = static_cast<double>(n);
    return nn * nn * nn / (3.0 * k);
}

double quintic_bound(std::size_t n, Color k) {
    const double nn = static_cast<double>(n);
    return nn * nn * nn * nn * nn / (3.0 * k);
}

namespace {

// Each of the n outside vertices sees `items` things in k buckets.
bool convexity_reaches(double items, std::size_t n, Color k, double bound) {
    return static_cast<double>(n) * k * real_choose2(items / k) >= bound;
}

}  // namespace

std::size_t matching_threshold(Color k) {
    return scan_threshold(1, 8 * static_cast<std::size_t>(k) + 16, [&](std::size_t n) {
        return convexity_reaches(static_cast<double>(n), n, k, cubic_bound(n, k));
    });
}

std::size_t bipartition_threshold(Color k) { return matching_threshold(k); }

std::size_t clique_threshold(Color k) {
    return scan_threshold(1, 8 * static_cast<std::size_t>(k) + 16, [&](std::size_t n) {
        return convexity_reaches(static_cast<double>(complete_edge_count(2 * n)), n, k, quintic_bound(n, k));
    });
}

}  // namespace rainbow
