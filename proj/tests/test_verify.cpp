#include "doctest.h"
#include "oracles.hpp"
#include "rainbow/finders.hpp"
#include "rainbow/verify.hpp"

using namespace rainbow;

namespace {

ColoringFamily random_dense(std::size_t n, Color k, std::uint64_t seed) {
    return ColoringFamily::uniform(n, k, seed).materialize();
}

// Same equality pattern, colors renamed per owner by a seeded permutation.
ColoringFamily permute_colors(const ColoringFamily& f, std::uint64_t seed) {
    const auto E = complete_edge_count(f.n());
    std::vector<Color> cells(f.n() * E);
    SplitMix64 rng(seed);
    for (Vertex v = 0; v < f.n(); ++v) {
        std::vector<Color> perm(f.k());
        std::iota(perm.begin(), perm.end(), 1);
        for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
        std::size_t idx = 0;
        for (Vertex a = 0; a < f.n(); ++a)
            for (Vertex b = a + 1; b < f.n(); ++b) cells[v * E + idx++] = perm[f.color(v, a, b) - 1];
    }
    return ColoringFamily::dense(f.n(), f.k(), std::move(cells));
}

}  // namespace

TEST_CASE("is_rainbow and copy_is_good") {
    // Owner 0 colors edge 01 with 1 and 12 with 2; owner 1 colors both 1.
    std::vector<Color> cells(3 * 3, 1);
    cells[0 * 3 + 2] = 2;  // f_0({1,2})
    const auto f = ColoringFamily::dense(3, 2, cells);
    const Embedding copy{path(2), {0, 1, 2}};
    CHECK(is_rainbow(f, 0, copy));
    CHECK_FALSE(is_rainbow(f, 1, copy));
    CHECK(copy_is_good(f, copy));

    const auto mono = ColoringFamily::monochromatic(5, 3);
    CHECK_FALSE(copy_is_good(mono, Embedding{star(3), {4, 0, 1, 2}}));
    CHECK(copy_is_good(mono, Embedding{clique(2), {1, 3}}));
}

TEST_CASE("goodness examples") {
    // n=3, k=2: f_v is rainbow on the P2 centred at v.
    std::vector<Color> cells(9);
    // edges in order 01, 02, 12
    const Color f0[] = {1, 2, 1}, f1[] = {1, 1, 2}, f2[] = {1, 1, 2};
    for (int i = 0; i < 3; ++i) {
        cells[0 * 3 + i] = f0[i];
        cells[1 * 3 + i] = f1[i];
        cells[2 * 3 + i] = f2[i];
    }
    const auto hand = ColoringFamily::dense(3, 2, cells);
    CHECK(family_is_good(hand, path(2)).is_good);
    CHECK(oracle::is_good(hand, path(2)));

    for (std::size_t n = 3; n <= 6; ++n) CHECK_FALSE(family_is_good(ColoringFamily::monochromatic(n), path(2)).is_good);

    const auto mono8 = ColoringFamily::monochromatic(8);
    const auto report = family_is_good(mono8, matching(4));
    CHECK_FALSE(report.is_good);
    REQUIRE(report.witness.has_value());
    CHECK(check_certificate(mono8, *report.witness).valid);
}

TEST_CASE("scale guard") {
    GoodnessOptions tight;
    tight.max_copies = 10;
    CHECK_THROWS_AS(family_is_good(ColoringFamily::monochromatic(6), path(2), tight), ScaleGuardExceeded);
}

TEST_CASE("family_is_good agrees with the labeled-embedding oracle") {
    const std::vector<PatternGraph> patterns{path(2), path(3), cycle(4), matching(2), star(2)};
    std::uint64_t seed = 1;
    for (const auto& H : patterns) {
        int good = 0, bad = 0;
        for (int trial = 0; trial < 60; ++trial, ++seed) {
            const std::size_t n = H.num_vertices() + seed % (7 - H.num_vertices());
            const Color k = 1 + static_cast<Color>(seed % 3);
            const auto f = trial % 4 == 3 ? ColoringFamily::rotated_sum(n, k).materialize() : random_dense(n, k, seed);
            const auto report = family_is_good(f, H);
            CAPTURE(H.name());
            CAPTURE(n);
            CAPTURE(k);
            CHECK(report.is_good == oracle::is_good(f, H));
            if (report.witness) CHECK(check_certificate(f, *report.witness).valid);
            (report.is_good ? good : bad)++;
        }
        CHECK(bad > 0);
    }
}

TEST_CASE("permutation invariance and palette monotonicity") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto f = random_dense(5, 3, seed);
        for (const auto& H : {path(2), matching(2), star(2), cycle(4)}) {
            const bool verdict = family_is_good(f, H).is_good;
            CHECK(family_is_good(permute_colors(f, seed + 99), H).is_good == verdict);
            CHECK(family_is_good(f.with_palette(5), H).is_good == verdict);
        }
    }
}

TEST_CASE("certificate checking rejects forgeries") {
    const auto f = random_dense(6, 2, 5);
    const auto report = family_is_good(f, path(3));
    REQUIRE_FALSE(report.is_good);
    auto cert = *report.witness;
    CHECK(check_certificate(f, cert).valid);
    CHECK_FALSE(copy_is_good(f, cert.embedding));

    // Forged equality: swap in a pair that does not collide.
    auto forged = cert;
    bool changed = false;
    const auto edges = cert.embedding.copy_edges();
    for (std::size_t i = 0; i < edges.size() && !changed; ++i)
        for (std::size_t j = i + 1; j < edges.size() && !changed; ++j)
            if (f.color(cert.embedding[0], edges[i]) != f.color(cert.embedding[0], edges[j])) {
                forged.collisions[0] = {edges[i], edges[j]};
                changed = true;
            }
    if (changed) CHECK_FALSE(check_certificate(f, forged).valid);

    // Collision edge outside the copy.
    auto outside = cert;
    Vertex spare = 0;
    while (std::count(cert.embedding.image.begin(), cert.embedding.image.end(), spare)) ++spare;
    outside.collisions[1].second = make_edge(spare, cert.embedding[0]);
    CHECK_FALSE(check_certificate(f, outside).valid);

    // Repeated edge is not a pair.
    auto same = cert;
    same.collisions[2].second = same.collisions[2].first;
    CHECK_FALSE(check_certificate(f, same).valid);

    auto missing = cert;
    missing.collisions.pop_back();
    CHECK_FALSE(check_certificate(f, missing).valid);
}

TEST_CASE("extend_violation") {
    const auto mono = ColoringFamily::monochromatic(6);
    const auto c4 = family_is_good(mono, cycle(4)).witness;
    REQUIRE(c4.has_value());
    const auto k4 = extend_violation(mono, *c4, clique(4));
    CHECK(check_certificate(mono, k4).valid);
    CHECK(k4.embedding.pattern.num_edges() == 6);

    const auto mono8 = ColoringFamily::monochromatic(8);
    const auto i4 = family_is_good(mono8, matching(4)).witness;
    REQUIRE(i4.has_value());
    // I4 plus edges 1-2 and 3-4 on the same eight vertices.
    PatternGraph target(8, {Edge{0, 1}, Edge{1, 2}, Edge{2, 3}, Edge{3, 4}, Edge{4, 5}, Edge{6, 7}});
    const auto extended = extend_violation(mono8, *i4, target);
    CHECK(check_certificate(mono8, extended).valid);

    CHECK_THROWS(extend_violation(mono, *c4, path(4)));
}

TEST_CASE("extend_with_slack") {
    const auto mono = ColoringFamily::monochromatic(10);
    auto s4 = find_s4(mono);
    REQUIRE(s4.success());
    const auto target = parse_pattern("S4+K1");
    const auto cert = extend_with_slack(mono, s4.violation(), target);
    CHECK(check_certificate(mono, cert).valid);
    CHECK(cert.embedding.pattern.num_vertices() == 6);

    auto empty = s4.violation();
    empty.slack.clear();
    CHECK_THROWS(extend_with_slack(mono, empty, target));

    const auto mono20 = ColoringFamily::monochromatic(20);
    auto k8 = find_clique(mono20, 8);
    REQUIRE(k8.success());
    REQUIRE(!k8.violation().slack.empty());
    const auto k9 = extend_with_slack(mono20, k8.violation(), clique(9));
    CHECK(check_certificate(mono20, k9).valid);
}

TEST_CASE("anchored check covers slack") {
    const auto mono = ColoringFamily::monochromatic(12);
    auto out = find_p2_p2(mono);
    REQUIRE(out.success());
    auto av = out.violation();
    CHECK(check_anchored(mono, av).valid);
    av.slack.push_back(av.certificate.embedding[0]);  // slack must avoid the copy
    CHECK_FALSE(check_anchored(mono, av).valid);
}
