#include <functional>

#include "doctest.h"
#include "oracles.hpp"
#include "rainbow/finders.hpp"
#include "rainbow/io.hpp"
#include "rainbow/verify.hpp"

using namespace rainbow;

namespace {

struct Named {
    const char* name;
    const char* tag;
    std::function<FinderOutcome(const ColoringFamily&)> run;
};

const std::vector<Named>& all_finders() {
    static const std::vector<Named> list{
        {"find_p4", "P4", [](const ColoringFamily& f) { return find_p4(f); }},
        {"find_s4", "S4", [](const ColoringFamily& f) { return find_s4(f); }},
        {"find_p2_p2", "P2+P2", [](const ColoringFamily& f) { return find_p2_p2(f); }},
        {"find_p2_k2_k2", "P2+K2+K2", [](const ColoringFamily& f) { return find_p2_k2_k2(f); }},
        {"find_star5", "S5", [](const ColoringFamily& f) { return find_star(f, 5); }},
        {"find_star6", "S6", [](const ColoringFamily& f) { return find_star(f, 6); }},
        {"find_i4", "I4", [](const ColoringFamily& f) { return find_i4(f); }},
        {"find_matching5", "I5", [](const ColoringFamily& f) { return find_matching_56(f, 5); }},
        {"find_matching6", "I6", [](const ColoringFamily& f) { return find_matching_56(f, 6); }},
        {"find_matching7", "I7", [](const ColoringFamily& f) { return find_matching_large(f, 7); }},
        {"find_matching9", "I9", [](const ColoringFamily& f) { return find_matching_large(f, 9); }},
        {"find_p2_3k2", "P2+3K2", [](const ColoringFamily& f) { return find_p2_3k2(f); }},
        {"find_c4", "C4", [](const ColoringFamily& f) { return find_c4(f); }},
        {"find_clique8", "K8", [](const ColoringFamily& f) { return find_clique(f, 8); }},
        {"find_clique10", "K10", [](const ColoringFamily& f) { return find_clique(f, 10); }},
        {"find_bipartite77", "K7,7", [](const ColoringFamily& f) { return find_complete_bipartite(f, 7, 7); }},
        {"find_bipartite79", "K7,9", [](const ColoringFamily& f) { return find_complete_bipartite(f, 7, 9); }},
    };
    return list;
}

void require_sound(const ColoringFamily& f, const FinderOutcome& out, const PatternGraph& H) {
    REQUIRE(out.success());
    const auto& av = out.violation();
    CHECK(check_certificate(f, av.certificate).valid);
    CHECK(check_anchored(f, av).valid);
    CHECK_FALSE(copy_is_good(f, av.certificate.embedding));
    CHECK(isomorphic(av.certificate.embedding.pattern, H));
}

}  // namespace

TEST_CASE("monochromatic families at the minimum host") {
    for (const auto& finder : all_finders()) {
        const auto H = parse_pattern(finder.tag);
        const auto f = ColoringFamily::monochromatic(minimum_host(H));
        CAPTURE(finder.name);
        require_sound(f, finder.run(f), H);
    }
}

TEST_CASE("injective families are refused") {
    for (const auto& finder : all_finders()) {
        const auto H = parse_pattern(finder.tag);
        for (std::size_t host : {minimum_host(H), 3 * minimum_host(H)}) {
            const auto out = finder.run(ColoringFamily::injective(host));
            CAPTURE(finder.name);
            CHECK_FALSE(out.success());
            if (!out.success()) {
                CHECK_FALSE(out.refusal().stage.empty());
                CHECK(out.refusal().observed < out.refusal().required);
            }
        }
    }
}

TEST_CASE("every success on random families verifies") {
    // Small hosts and generous palettes, so both outcomes occur.
    int successes = 0, refusals = 0;
    for (const auto& finder : all_finders()) {
        const auto H = parse_pattern(finder.tag);
        const std::size_t base = minimum_host(H);
        for (std::uint64_t seed = 1; seed <= 12; ++seed) {
            const std::size_t host = base * (1 + seed % 3);
            const Color k = 1 + static_cast<Color>(seed % 4);
            const auto f = ColoringFamily::uniform(host, k, seed);
            const auto out = finder.run(f);
            CAPTURE(finder.name);
            CAPTURE(seed);
            if (out.success()) {
                ++successes;
                require_sound(f, out, H);
            } else {
                ++refusals;
                CHECK(out.refusal().observed < out.refusal().required);
            }
        }
    }
    CHECK(successes > 0);
    CHECK(refusals > 0);
}

TEST_CASE("random examples at documented points") {
    struct Case {
        const char* label;
        std::size_t host;
        Color k;
        std::uint64_t seed;
        std::function<FinderOutcome(const ColoringFamily&)> run;
        const char* tag;
    };
    const std::vector<Case> cases{
        {"p4", 400, 3, 1, [](const ColoringFamily& f) { return find_p4(f); }, "P4"},
        {"s4", 3000, 4, 2, [](const ColoringFamily& f) { return find_s4(f); }, "S4"},
        {"p2k2k2", 3000, 4, 3, [](const ColoringFamily& f) { return find_p2_k2_k2(f); }, "P2+K2+K2"},
        {"p2p2", 3000, 4, 3, [](const ColoringFamily& f) { return find_p2_p2(f); }, "P2+P2"},
        {"star5", 10000, 5, 4, [](const ColoringFamily& f) { return find_star(f, 5); }, "S5"},
        {"i4", 6000, 3, 5, [](const ColoringFamily& f) { return find_i4(f); }, "I4"},
        {"p2_3k2", 10000, 4, 8, [](const ColoringFamily& f) { return find_p2_3k2(f); }, "P2+3K2"},
        {"c4", 800, 3, 9, [](const ColoringFamily& f) { return find_c4(f); }, "C4"},
        {"k8", 2000, 3, 10, [](const ColoringFamily& f) { return find_clique(f, 8); }, "K8"},
        {"k77", 9000, 3, 11, [](const ColoringFamily& f) { return find_complete_bipartite(f, 7, 7); }, "K7,7"},
        {"i5", 36000, 3, 6, [](const ColoringFamily& f) { return find_matching_56(f, 5); }, "I5"},
        {"i7", 45000, 4, 7, [](const ColoringFamily& f) { return find_matching_large(f, 7); }, "I7"},
    };
    for (const auto& c : cases) {
        const auto f = ColoringFamily::uniform(c.host, c.k, c.seed);
        CAPTURE(c.label);
        require_sound(f, c.run(f), parse_pattern(c.tag));
    }
    const auto k77 = ColoringFamily::uniform(9000, 3, 11);
    const auto out = find_complete_bipartite(k77, 7, 7);
    REQUIRE(out.success());
    const auto& emb = out.violation().certificate.embedding;
    for (const auto& e : emb.pattern.edges()) CHECK((e.a < 7) != (e.b < 7));
}

TEST_CASE("matching finders below their desk hosts refuse at a peeling stage") {
    // Hosts 6000 (k=3) and 9000 (k=4) leave matchings too small for 99%
    // coverage by disjoint tuples; the finders must say so instead of guessing.
    const auto f56 = ColoringFamily::uniform(6000, 3, 6);
    const auto a = find_matching_56(f56, 5);
    if (a.success()) {
        require_sound(f56, a, matching(5));
    } else {
        CHECK(a.refusal().stage.rfind("peel", 0) == 0);
        CHECK(a.refusal().observed < 0.99);
    }
    const auto f7 = ColoringFamily::uniform(9000, 4, 7);
    const auto b = find_matching_large(f7, 7);
    if (b.success()) {
        require_sound(f7, b, matching(7));
    } else {
        CHECK(b.refusal().stage.rfind("peel", 0) == 0);
        CHECK(b.refusal().observed < 0.99);
    }
}

TEST_CASE("parameter errors") {
    const auto f = ColoringFamily::monochromatic(40);
    CHECK_THROWS_AS(find_star(f, 4), std::invalid_argument);
    CHECK_THROWS_AS(find_matching_56(f, 7), std::invalid_argument);
    CHECK_THROWS_AS(find_matching_large(f, 6), std::invalid_argument);
    CHECK_THROWS_AS(find_clique(f, 7), std::invalid_argument);
    CHECK_THROWS_AS(find_complete_bipartite(ColoringFamily::monochromatic(90), 6, 7), std::invalid_argument);
}

TEST_CASE("determinism") {
    const auto f = ColoringFamily::uniform(900, 3, 4);
    for (const auto& finder : all_finders()) {
        const auto a = finder.run(f);
        const auto b = finder.run(f);
        CAPTURE(finder.name);
        REQUIRE(a.success() == b.success());
        if (a.success()) CHECK(certificate_to_json(a.violation()) == certificate_to_json(b.violation()));
        CHECK(a.diagnostics.to_json() == b.diagnostics.to_json());
    }
}

TEST_CASE("peeling stages report their coverage") {
    const auto f = ColoringFamily::uniform(2000, 3, 10);
    const auto out = find_clique(f, 8);
    REQUIRE(out.success());
    bool any = false;
    for (const auto& [key, value] : out.diagnostics.values) {
        if (key.find("coverage") == std::string::npos) continue;
        any = true;
        CHECK(value >= 0.99);
    }
    CHECK(any);
}

TEST_CASE("reconstructed procedure is flagged") {
    const auto f = ColoringFamily::monochromatic(20);
    const auto out = find_p2_3k2(f);
    REQUIRE(out.success());
    CHECK(out.diagnostics.reconstructed);
    CHECK_FALSE(find_s4(ColoringFamily::monochromatic(8)).diagnostics.reconstructed);
}

TEST_CASE("H6 member detection") {
    CHECK(detect_h6_member(clique(4)).tag == "C4");
    CHECK(detect_h6_member(path(6)).tag == "P2+P2");
    CHECK_THROWS_AS(detect_h6_member(path(5)), std::invalid_argument);
    const auto two_triangles = disjoint_union(clique(3), clique(3));
    const auto m = detect_h6_member(two_triangles);
    CHECK(m.tag == "P2+P2");
    for (const auto& e : m.member.edges()) CHECK(two_triangles.has_edge(m.embedding[e.a], m.embedding[e.b]));
}

TEST_CASE("generic_find") {
    const auto mono = ColoringFamily::monochromatic(8);
    const auto k4 = generic_find(mono, clique(4));
    require_sound(mono, k4, clique(4));
    CHECK(k4.diagnostics.member == "C4");
    CHECK_FALSE(k4.diagnostics.fallback);

    const auto H = parse_pattern("S5+K2");
    const auto f = ColoringFamily::uniform(3000, 3, 12);
    const auto out = generic_find(f, H);
    require_sound(f, out, H);
    CHECK(out.diagnostics.member == "S4");

    const auto triangles = disjoint_union(clique(3), clique(3));
    const auto mono12 = ColoringFamily::monochromatic(12);
    require_sound(mono12, generic_find(mono12, triangles), triangles);

    // C4 member with an extra vertex goes through the guarded search.
    const auto k4k1 = parse_pattern("K4+K1");
    const auto fb = generic_find(mono, k4k1);
    require_sound(mono, fb, k4k1);
    CHECK(fb.diagnostics.fallback);

    CHECK_THROWS_AS(generic_find(mono, path(5)), std::invalid_argument);
}

TEST_CASE("dispatch handles isolated padding") {
    for (const char* tag : {"S4+2K1", "I4+K1", "P2+P2+3K1", "P2+K2+K2+K1", "K8+K1", "S5+K1", "K7,7+2K1", "I7+K1"}) {
        const auto H = parse_pattern(tag);
        const auto f = ColoringFamily::monochromatic(minimum_host(H));
        CAPTURE(tag);
        require_sound(f, find_for_pattern(f, H), H);
    }
    CHECK_THROWS_AS(find_for_pattern(ColoringFamily::monochromatic(10), path(3)), std::invalid_argument);
}

TEST_CASE("desk points are listed for every finder family") {
    CHECK(desk_points().size() == 13);
    for (const auto& p : desk_points()) {
        CHECK(p.k >= 3);
        CHECK(p.host >= minimum_host(parse_pattern(p.finder)));
    }
}
