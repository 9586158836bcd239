#include "doctest.h"
#include "oracles.hpp"
#include "rainbow/buckets.hpp"
#include "rainbow/extract.hpp"

using namespace rainbow;

namespace {

oracle::EdgeList as_pairs(const std::vector<Edge>& M) {
    oracle::EdgeList out;
    for (const auto& e : M) out.emplace_back(e.a, e.b);
    return out;
}

void check_star_witness(const ColoringFamily& f, const StarExtraction& s) {
    std::vector<char> seen(f.n(), 0);
    seen[s.x] = 1;
    for (Vertex v : s.S) {
        CHECK_FALSE(seen[v]);
        seen[v] = 1;
        CHECK(f.color(s.x, s.x, v) == f.color(s.x, s.x, s.S.front()));
    }
    for (Vertex v : s.P) {
        CHECK_FALSE(seen[v]);
        seen[v] = 1;
    }
    CHECK(std::count(seen.begin(), seen.end(), 1) == static_cast<long>(f.n()));
}

}  // namespace

TEST_CASE("bucketing identity") {
    BucketCounter small(4), huge(5'000'000);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        SplitMix64 rng(seed);
        std::vector<Color> colors(1 + seed * 3);
        for (auto& c : colors) c = 1 + static_cast<Color>(rng.below(4));
        std::uint64_t pairs = 0, triples = 0;
        for (std::size_t i = 0; i < colors.size(); ++i)
            for (std::size_t j = i + 1; j < colors.size(); ++j) {
                pairs += colors[i] == colors[j];
                for (std::size_t l = j + 1; l < colors.size(); ++l)
                    triples += colors[i] == colors[j] && colors[j] == colors[l];
            }
        CHECK(small.pairs(colors) == pairs);
        CHECK(huge.pairs(colors) == pairs);
        CHECK(pairs_in_buckets(colors) == pairs);
        CHECK(small.triples(colors) == triples);
        CHECK(huge.triples(colors) == triples);
    }
}

TEST_CASE("star extraction examples") {
    const auto mono = ColoringFamily::monochromatic(6);
    const auto s = star_extract(mono);
    CHECK(s.S.size() == 5);
    CHECK(s.P.empty());
    REQUIRE(s.triple_count.has_value());
    CHECK(*s.triple_count == 0);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto f = ColoringFamily::uniform(13, 6, seed);
        CHECK(star_extract(f).S.size() >= 2);
    }

    const auto f = ColoringFamily::uniform(40, 2, 7);
    const auto r = star_extract(f);
    check_star_witness(f, r);
    CHECK(*r.triple_count == oracle::star_triples(f, r.x, r.S, r.P));
    CHECK(r.S.size() >= 20);  // ceil(39/2)

    CHECK_THROWS(star_extract(ColoringFamily::monochromatic(2)));
}

TEST_CASE("star extraction options") {
    const auto f = ColoringFamily::uniform(30, 3, 1);
    StarOptions forced;
    forced.x = 4;
    const auto at4 = star_extract(f, forced);
    CHECK(at4.x == 4);
    StarOptions capped;
    capped.s_cap = 3;
    capped.x_candidates = 1;
    const auto small = star_extract(f, capped);
    CHECK(small.S.size() == 3);
    check_star_witness(f, small);
    CHECK(*small.triple_count == oracle::star_triples(f, small.x, small.S, small.P));
    // Trying every center never does worse than any single one.
    CHECK(*star_extract(f).triple_count >= *at4.triple_count);
}

TEST_CASE("matching, bipartition and clique examples") {
    const auto mono9 = ColoringFamily::monochromatic(9);
    CHECK(*matching_extract(mono9).triple_count == 9);
    CHECK(*clique_extract(mono9).pair_count == 315);
    CHECK(*bipartition_extract(ColoringFamily::monochromatic(6)).triple_count == 9);

    const auto inj = ColoringFamily::injective(9);
    CHECK(*matching_extract(inj).triple_count == 0);
    CHECK(*clique_extract(inj).pair_count == 0);
    CHECK(*bipartition_extract(ColoringFamily::injective(10)).triple_count == 0);

    CHECK_THROWS(matching_extract(ColoringFamily::monochromatic(10)));
    CHECK_THROWS(bipartition_extract(ColoringFamily::monochromatic(7)));
    CHECK_THROWS(clique_extract(ColoringFamily::monochromatic(8)));
}

TEST_CASE("extraction counts equal naive recounts") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const std::size_t host = 6 * (1 + seed % 10);  // 6..60
        const Color k = 1 + static_cast<Color>(seed % 5);
        const auto f = ColoringFamily::uniform(host, k, seed);
        CAPTURE(host);
        CAPTURE(k);

        const auto s = star_extract(f);
        check_star_witness(f, s);
        CHECK(*s.triple_count == oracle::star_triples(f, s.x, s.S, s.P));

        SplitOptions split;
        split.candidates = 1 + seed % 3;
        if (seed % 2) split.seed = seed;

        const auto m = matching_extract(f, split);
        CHECK(m.Y.size() == host / 3);
        CHECK(m.M.size() == host / 3);
        std::vector<char> used(host, 0);
        for (auto& e : m.M) {
            CHECK_FALSE(used[e.a]);
            CHECK_FALSE(used[e.b]);
            used[e.a] = used[e.b] = 1;
        }
        for (Vertex y : m.Y) {
            CHECK_FALSE(used[y]);
            used[y] = 1;
        }
        CHECK(*m.triple_count == oracle::matching_triples(f, as_pairs(m.M), m.Y));

        const auto b = bipartition_extract(f, split);
        CHECK(b.A.size() == host / 2);
        CHECK(b.B.size() == host / 2);
        CHECK(*b.triple_count == oracle::bipartition_triples(f, b.A, b.B));

        const auto c = clique_extract(f, split);
        CHECK(c.X.size() == host / 3);
        CHECK(c.L.size() == 2 * host / 3);
        CHECK(*c.pair_count == oracle::clique_pairs(f, c.X, c.L));
    }
}

TEST_CASE("bounds beyond the documented thresholds") {
    for (Color k : {2u, 3u, 4u, 6u}) {
        const std::size_t n0 = star_threshold(k);
        for (std::size_t n : {n0, n0 + 7, 2 * n0}) {
            for (std::uint64_t seed = 0; seed < 5; ++seed) {
                const auto f = ColoringFamily::uniform(n, k, seed);
                StarOptions proof;
                proof.s_cap = (n - 1 + k - 1) / k;
                CHECK(static_cast<double>(*star_extract(f, proof).triple_count) >= star_bound(n, k));
                CHECK(static_cast<double>(*star_extract(f).triple_count) >= star_bound(n, k));
            }
        }
        const std::size_t m0 = matching_threshold(k);
        for (std::size_t part : {m0, m0 + 3}) {
            const auto f = ColoringFamily::uniform(3 * part, k, part);
            CHECK(static_cast<double>(*matching_extract(f).triple_count) >= cubic_bound(part, k));
            CHECK(static_cast<double>(*clique_extract(f).pair_count) >= quintic_bound(part, k));
            const auto g = ColoringFamily::uniform(2 * part, k, part);
            CHECK(static_cast<double>(*bipartition_extract(g).triple_count) >= cubic_bound(part, k));
        }
    }
    // The finite inequality behind every star extraction.
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto f = ColoringFamily::uniform(25, 3, seed);
        const auto s = star_extract(f);
        CHECK(static_cast<double>(*s.triple_count) >= star_convexity_floor(s.S.size(), s.P.size(), 3) - 1e-9);
    }
}
