#include "finder_support.hpp"
#include "rainbow/buckets.hpp"

namespace rainbow {

using namespace detail;

namespace {

constexpr auto kNone = std::monostate{};

std::vector<Vertex> endpoints(std::initializer_list<Edge> edges) {
    std::vector<Vertex> out;
    for (const auto& e : edges) out.insert(out.end(), {e.a, e.b});
    return out;
}

}  // namespace

FinderOutcome find_p4(const ColoringFamily& family, const FinderConfig& config) {
    if (family.n() % 2 != 0) throw std::invalid_argument("find_p4 needs an even host");
    Diagnostics diag;
    SplitOptions options;
    options.count_budget = config.total_count_budget;
    const auto split = bipartition_extract(family, options);
    const auto& A = split.A;
    const auto& B = split.B;
    if (B.size() < 3) return refuse(std::move(diag), "triple_select", static_cast<double>(B.size()), 3);

    const double nb = static_cast<double>(B.size());
    if (nb * static_cast<double>(A.size()) <= static_cast<double>(config.total_count_budget)) {
        BucketCounter counter(family.k());
        std::vector<Color> colors(B.size());
        std::uint64_t quads = 0;
        for (Vertex a : A) {
            for (std::size_t i = 0; i < B.size(); ++i) colors[i] = family.color(a, a, B[i]);
            quads += counter.triples(colors);
        }
        const auto base = static_cast<double>(B.size() / family.k());
        diag.set("quadruples", static_cast<double>(quads));
        diag.set("quadruple_floor", static_cast<double>(A.size()) * family.k() * real_choose3(base));
    }

    const std::size_t width = std::min(config.triple_window, B.size());
    TripleBallot ballot(width);
    std::vector<std::uint64_t> keys(width);
    for (Vertex a : A) {
        for (std::size_t i = 0; i < width; ++i) keys[i] = family.color(a, a, B[i]);
        ballot.vote(keys);
    }
    const auto best = ballot.best();
    const Vertex b1 = B[best.first], b2 = B[best.second], b3 = B[best.third];
    std::vector<Vertex> chosen;
    for (Vertex a : A) {
        const Color c = family.color(a, a, b1);
        if (family.color(a, a, b2) == c && family.color(a, a, b3) == c) chosen.push_back(a);
    }
    diag.set("triple_window", static_cast<double>(width));
    diag.set("A", static_cast<double>(chosen.size()));
    if (chosen.size() < 2) return refuse(std::move(diag), "triple_select", static_cast<double>(chosen.size()), 2);

    std::vector<std::array<Color, 3>> tuples;
    for (Vertex a : chosen)
        tuples.push_back({family.color(b1, b2, a), family.color(b2, b2, a), family.color(b3, b2, a)});
    const auto bucket = largest_class(rank_keys(tuples));
    diag.set("k3_bucket", static_cast<double>(bucket.size()));
    if (bucket.size() < 2) return refuse(std::move(diag), "pigeonhole_k3", static_cast<double>(bucket.size()), 2);
    const Vertex a1 = chosen[bucket[0]], a2 = chosen[bucket[1]];

    const Edge b2a1 = make_edge(b2, a1), b2a2 = make_edge(b2, a2);
    return succeed(family, path(4), {b1, a1, b2, a2, b3},
                   {{b2a1, b2a2}, {make_edge(a1, b1), b2a1}, {b2a1, b2a2}, {b2a2, make_edge(a2, b3)}, {b2a1, b2a2}},
                   kNone, {}, std::move(diag));
}

FinderOutcome find_s4(const ColoringFamily& family, const FinderConfig& config) {
    Diagnostics diag;
    auto stage = star_stage(family, config, diag);
    if (auto* r = std::get_if<ThresholdNotMet>(&stage)) return {*r, std::move(diag)};
    const auto& [x, s, s2, A] = std::get<StarStage>(stage);
    if (A.size() < 2) return refuse(std::move(diag), "pair", static_cast<double>(A.size()), 2);

    std::vector<std::uint64_t> keys;
    for (Vertex a : A) keys.push_back(family.color(s, x, a));
    std::vector<Vertex> first;
    for (auto i : largest_class(keys)) first.push_back(A[i]);
    diag.set("A1", static_cast<double>(first.size()));
    if (first.size() < 2) return refuse(std::move(diag), "pigeonhole_fs", static_cast<double>(first.size()), 2);
    keys.clear();
    for (Vertex a : first) keys.push_back(family.color(s2, x, a));
    std::vector<Vertex> second;
    for (auto i : largest_class(keys)) second.push_back(first[i]);
    diag.set("A2", static_cast<double>(second.size()));
    if (second.size() < 2) return refuse(std::move(diag), "pigeonhole_fs2", static_cast<double>(second.size()), 2);

    const Vertex a = second[0], a2 = second[1];
    const Edge xs = make_edge(x, s), xs2 = make_edge(x, s2), xa = make_edge(x, a), xa2 = make_edge(x, a2);
    return succeed(family, star(4), {x, s, s2, a, a2}, {{xs, xs2}, {xa, xa2}, {xa, xa2}, {xs, xs2}, {xs, xs2}},
                   CommonAnchor{xs, xs2}, unused(A, {a, a2}), std::move(diag));
}

FinderOutcome find_p2_k2_k2(const ColoringFamily& family, const FinderConfig& config) {
    Diagnostics diag;
    auto stage = star_stage(family, config, diag);
    if (auto* r = std::get_if<ThresholdNotMet>(&stage)) return {*r, std::move(diag)};
    const auto& [x, s, s2, A] = std::get<StarStage>(stage);
    if (A.size() < 4) return refuse(std::move(diag), "pair", static_cast<double>(A.size()), 4);

    const auto H = consecutive_matching(A);
    std::vector<std::uint64_t> keys;
    for (const auto& h : H) keys.push_back(pack(family.color(s, h), family.color(s2, h)));
    const auto bucket = largest_class(keys);
    diag.set("k2_bucket", static_cast<double>(bucket.size()));
    if (bucket.size() < 2) return refuse(std::move(diag), "pigeonhole_k2", static_cast<double>(bucket.size()), 2);

    const Edge e1 = H[bucket[0]], e2 = H[bucket[1]];
    const Edge xs = make_edge(x, s), xs2 = make_edge(x, s2);
    const CollisionPair anchor{xs, xs2};
    return succeed(family, parse_pattern("P2+K2+K2"), {s, x, s2, e1.a, e1.b, e2.a, e2.b},
                   {{e1, e2}, anchor, {e1, e2}, anchor, anchor, anchor, anchor}, CommonAnchor{xs, xs2},
                   unused(A, endpoints({e1, e2})), std::move(diag));
}

FinderOutcome find_p2_p2(const ColoringFamily& family, const FinderConfig& config) {
    Diagnostics diag;
    auto stage = star_stage(family, config, diag);
    if (auto* r = std::get_if<ThresholdNotMet>(&stage)) return {*r, std::move(diag)};
    const auto& [x, s, s2, A] = std::get<StarStage>(stage);
    if (A.size() < 3) return refuse(std::move(diag), "pair", static_cast<double>(A.size()), 3);

    const Vertex p = A[0];
    std::vector<std::uint64_t> keys;
    for (std::size_t i = 1; i < A.size(); ++i) keys.push_back(pack(family.color(s, p, A[i]), family.color(s2, p, A[i])));
    const auto bucket = largest_class(keys);
    diag.set("k2_bucket", static_cast<double>(bucket.size()));
    if (bucket.size() < 2) return refuse(std::move(diag), "pigeonhole_k2", static_cast<double>(bucket.size()), 2);

    const Vertex a = A[bucket[0] + 1], b = A[bucket[1] + 1];
    const Edge xs = make_edge(x, s), xs2 = make_edge(x, s2), pa = make_edge(p, a), pb = make_edge(p, b);
    const CollisionPair anchor{xs, xs2};
    return succeed(family, parse_pattern("P2+P2"), {s, x, s2, a, p, b},
                   {{pa, pb}, anchor, {pa, pb}, anchor, anchor, anchor}, CommonAnchor{xs, xs2},
                   unused(A, {p, a, b}), std::move(diag));
}

FinderOutcome find_star(const ColoringFamily& family, std::size_t t, const FinderConfig& config) {
    if (t < 5) throw std::invalid_argument("find_star handles t >= 5; use find_s4 for t = 4");
    Diagnostics diag;
    auto stage = star_stage(family, config, diag);
    if (auto* r = std::get_if<ThresholdNotMet>(&stage)) return {*r, std::move(diag)};
    const auto& [x, s, s2, A] = std::get<StarStage>(stage);
    if (A.size() < 3) return refuse(std::move(diag), "pair", static_cast<double>(A.size()), 3);

    std::vector<std::uint64_t> keys1, keys2;
    for (Vertex p : A) {
        keys1.push_back(family.color(s, x, p));
        keys2.push_back(family.color(s2, x, p));
    }
    auto first = peel_stage(keys1, 3, config.star_coverage, "peel_fs", diag);
    if (auto* r = std::get_if<ThresholdNotMet>(&first)) return {*r, std::move(diag)};
    auto second = peel_stage(keys2, 3, config.star_coverage, "peel_fs2", diag);
    if (auto* r = std::get_if<ThresholdNotMet>(&second)) return {*r, std::move(diag)};
    const auto& sys1 = std::get<PeelSystem>(first);
    const auto& sys2 = std::get<PeelSystem>(second);
    const auto hub = common_item({&sys1, &sys2}, A.size());
    if (!hub) return refuse(std::move(diag), "intersect", 0, 1);

    const auto k_item = partners(sys1, *hub)[0];
    std::uint32_t h_item = 0;
    for (auto q : partners(sys2, *hub))
        if (q != k_item) {
            h_item = q;
            break;
        }
    const Vertex pt = A[*hub], pk = A[k_item], ph = A[h_item];
    auto rest = unused(A, {pt, pk, ph});
    if (rest.size() < t - 5) return refuse(std::move(diag), "padding", static_cast<double>(rest.size()), t - 5.0);

    const Edge xs = make_edge(x, s), xs2 = make_edge(x, s2);
    const CollisionPair anchor{xs, xs2};
    std::vector<Vertex> image{x, s, s2, pt, pk, ph};
    std::vector<CollisionPair> collisions{anchor, {make_edge(x, pt), make_edge(x, pk)},
                                          {make_edge(x, pt), make_edge(x, ph)}, anchor, anchor, anchor};
    for (std::size_t i = 0; i < t - 5; ++i) {
        image.push_back(rest[i]);
        collisions.push_back(anchor);
    }
    rest.erase(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(t - 5));
    return succeed(family, star(t), std::move(image), std::move(collisions), CommonAnchor{xs, xs2}, std::move(rest),
                   std::move(diag));
}

FinderOutcome find_i4(const ColoringFamily& family, const FinderConfig& config) {
    if (family.n() % 3 != 0) throw std::invalid_argument("find_i4 needs a host size divisible by 3");
    Diagnostics diag;
    auto stage = matching_stage(family, config, diag);
    if (auto* r = std::get_if<ThresholdNotMet>(&stage)) return {*r, std::move(diag)};
    const auto& [e1, e2, A] = std::get<MatchingStage>(stage);
    if (A.size() < 4) return refuse(std::move(diag), "pair", static_cast<double>(A.size()), 4);

    const auto H = consecutive_matching(A);
    std::vector<Edge> current = H;
    const std::pair<Vertex, const char*> owners[] = {
        {e1.a, "pigeonhole_v1"}, {e1.b, "pigeonhole_u1"}, {e2.a, "pigeonhole_v2"}, {e2.b, "pigeonhole_u2"}};
    for (const auto& [owner, name] : owners) {
        std::vector<std::uint64_t> keys;
        for (const auto& h : current) keys.push_back(family.color(owner, h));
        std::vector<Edge> next;
        for (auto i : largest_class(keys)) next.push_back(current[i]);
        current = std::move(next);
        diag.set(std::string(name) + "_bucket", static_cast<double>(current.size()));
        if (current.size() < 2) return refuse(std::move(diag), name, static_cast<double>(current.size()), 2);
    }
    const Edge h1 = current[0], h2 = current[1];
    const CollisionPair hh{h1, h2}, ee{e1, e2};
    return succeed(family, matching(4), {e1.a, e1.b, e2.a, e2.b, h1.a, h1.b, h2.a, h2.b},
                   {hh, hh, hh, hh, ee, ee, ee, ee}, CommonAnchor{e1, e2}, unused(A, endpoints({h1, h2})),
                   std::move(diag));
}

FinderOutcome find_matching_56(const ColoringFamily& family, std::size_t t, const FinderConfig& config) {
    if (t != 5 && t != 6) throw std::invalid_argument("find_matching_56 handles t in {5, 6}");
    if (family.n() % 3 != 0) throw std::invalid_argument("find_matching_56 needs a host size divisible by 3");
    Diagnostics diag;
    auto stage = matching_stage(family, config, diag);
    if (auto* r = std::get_if<ThresholdNotMet>(&stage)) return {*r, std::move(diag)};
    const auto& [e1, e2, A] = std::get<MatchingStage>(stage);
    if (A.size() < 6) return refuse(std::move(diag), "pair", static_cast<double>(A.size()), 6);

    const auto H = consecutive_matching(A);
    std::vector<std::uint64_t> keys1, keys2;
    for (const auto& h : H) {
        keys1.push_back(pack(family.color(e1.a, h), family.color(e1.b, h)));
        keys2.push_back(pack(family.color(e2.a, h), family.color(e2.b, h)));
    }
    auto first = peel_stage(keys1, 3, config.coverage, "peel_v1u1", diag);
    if (auto* r = std::get_if<ThresholdNotMet>(&first)) return {*r, std::move(diag)};
    auto second = peel_stage(keys2, 3, config.coverage, "peel_v2u2", diag);
    if (auto* r = std::get_if<ThresholdNotMet>(&second)) return {*r, std::move(diag)};
    const auto& sys1 = std::get<PeelSystem>(first);
    const auto& sys2 = std::get<PeelSystem>(second);
    const auto hub = common_item({&sys1, &sys2}, H.size());
    if (!hub) return refuse(std::move(diag), "intersect", 0, 1);
    const auto j = partners(sys1, *hub)[0];
    std::uint32_t m = 0;
    for (auto q : partners(sys2, *hub))
        if (q != j) {
            m = q;
            break;
        }
    std::vector<Edge> picked{H[*hub], H[j], H[m]};
    if (t == 6) {
        std::optional<Edge> extra;
        for (std::uint32_t i = 0; i < H.size() && !extra; ++i)
            if (i != *hub && i != j && i != m) extra = H[i];
        if (!extra) return refuse(std::move(diag), "padding", 0, 1);
        picked.push_back(*extra);
    }

    const CollisionPair first_pair{H[*hub], H[j]}, second_pair{H[*hub], H[m]}, ee{e1, e2};
    std::vector<Vertex> image{e1.a, e1.b, e2.a, e2.b};
    std::vector<CollisionPair> collisions{first_pair, first_pair, second_pair, second_pair};
    std::vector<Vertex> used;
    for (const auto& h : picked) {
        image.insert(image.end(), {h.a, h.b});
        used.insert(used.end(), {h.a, h.b});
        collisions.insert(collisions.end(), {ee, ee});
    }
    return succeed(family, matching(t), std::move(image), std::move(collisions), CommonAnchor{e1, e2},
                   unused(A, used), std::move(diag));
}

namespace {

// Distinct representatives, one per partner list, lexicographically first.
bool distinct_representatives(const std::vector<std::vector<std::uint32_t>>& lists, std::size_t depth,
                              std::vector<std::uint32_t>& chosen) {
    if (depth == lists.size()) return true;
    for (auto candidate : lists[depth]) {
        if (std::find(chosen.begin(), chosen.end(), candidate) != chosen.end()) continue;
        chosen.push_back(candidate);
        if (distinct_representatives(lists, depth + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

FinderOutcome find_matching_large(const ColoringFamily& family, std::size_t t, const FinderConfig& config) {
    if (t < 7) throw std::invalid_argument("find_matching_large handles t >= 7");
    if (family.n() % 3 != 0) throw std::invalid_argument("find_matching_large needs a host size divisible by 3");
    Diagnostics diag;
    auto stage = matching_stage(family, config, diag);
    if (auto* r = std::get_if<ThresholdNotMet>(&stage)) return {*r, std::move(diag)};
    const auto& [e1, e2, A] = std::get<MatchingStage>(stage);
    if (A.size() < 10) return refuse(std::move(diag), "pair", static_cast<double>(A.size()), 10);

    const auto H = consecutive_matching(A);
    const std::pair<Vertex, const char*> owners[] = {
        {e1.a, "peel_v1"}, {e1.b, "peel_u1"}, {e2.a, "peel_v2"}, {e2.b, "peel_u2"}};
    std::vector<PeelSystem> systems;
    for (const auto& [owner, name] : owners) {
        std::vector<std::uint64_t> keys;
        for (const auto& h : H) keys.push_back(family.color(owner, h));
        auto system = peel_stage(keys, 5, config.coverage, name, diag);
        if (auto* r = std::get_if<ThresholdNotMet>(&system)) return {*r, std::move(diag)};
        systems.push_back(std::move(std::get<PeelSystem>(system)));
    }
    const auto hub = common_item({&systems[0], &systems[1], &systems[2], &systems[3]}, H.size());
    if (!hub) return refuse(std::move(diag), "intersect", 0, 1);
    std::vector<std::vector<std::uint32_t>> lists;
    for (const auto& system : systems) lists.push_back(partners(system, *hub));
    std::vector<std::uint32_t> reps;
    if (!distinct_representatives(lists, 0, reps))
        throw std::logic_error("four 4-element partner lists always admit distinct representatives");

    std::vector<std::uint32_t> picked{*hub};
    picked.insert(picked.end(), reps.begin(), reps.end());
    for (std::uint32_t i = 0; i < H.size() && picked.size() < t - 2; ++i)
        if (std::find(picked.begin(), picked.end(), i) == picked.end()) picked.push_back(i);
    if (picked.size() < t - 2)
        return refuse(std::move(diag), "padding", static_cast<double>(H.size()) - 5, static_cast<double>(t) - 7);

    const CollisionPair ee{e1, e2};
    std::vector<Vertex> image{e1.a, e1.b, e2.a, e2.b};
    std::vector<CollisionPair> collisions;
    for (auto rep : reps) collisions.push_back({H[*hub], H[rep]});
    std::vector<Vertex> used;
    for (auto i : picked) {
        image.insert(image.end(), {H[i].a, H[i].b});
        used.insert(used.end(), {H[i].a, H[i].b});
        collisions.insert(collisions.end(), {ee, ee});
    }
    return succeed(family, matching(t), std::move(image), std::move(collisions), CommonAnchor{e1, e2},
                   unused(A, used), std::move(diag));
}

FinderOutcome find_p2_3k2(const ColoringFamily& family, const FinderConfig& config) {
    Diagnostics diag;
    diag.reconstructed = true;
    auto stage = star_stage(family, config, diag);
    if (auto* r = std::get_if<ThresholdNotMet>(&stage)) return {*r, std::move(diag)};
    const auto& [x, s, s2, A] = std::get<StarStage>(stage);
    if (A.size() < 10) return refuse(std::move(diag), "pair", static_cast<double>(A.size()), 10);

    const auto H = consecutive_matching(A);
    std::vector<std::uint64_t> keys1, keys2;
    for (const auto& h : H) {
        keys1.push_back(family.color(s, h));
        keys2.push_back(family.color(s2, h));
    }
    auto first = peel_stage(keys1, 5, config.coverage, "peel_fs", diag);
    if (auto* r = std::get_if<ThresholdNotMet>(&first)) return {*r, std::move(diag)};
    auto second = peel_stage(keys2, 5, config.coverage, "peel_fs2", diag);
    if (auto* r = std::get_if<ThresholdNotMet>(&second)) return {*r, std::move(diag)};
    const auto& sys1 = std::get<PeelSystem>(first);
    const auto& sys2 = std::get<PeelSystem>(second);
    const auto hub = common_item({&sys1, &sys2}, H.size());
    if (!hub) return refuse(std::move(diag), "intersect", 0, 1);
    const auto j = partners(sys1, *hub)[0];
    std::uint32_t m = 0;
    for (auto q : partners(sys2, *hub))
        if (q != j) {
            m = q;
            break;
        }

    const Edge ht = H[*hub], h1 = H[j], h2 = H[m];
    const Edge xs = make_edge(x, s), xs2 = make_edge(x, s2);
    const CollisionPair anchor{xs, xs2};
    return succeed(family, parse_pattern("P2+3K2"), {s, x, s2, ht.a, ht.b, h1.a, h1.b, h2.a, h2.b},
                   {{ht, h1}, anchor, {ht, h2}, anchor, anchor, anchor, anchor, anchor, anchor}, CommonAnchor{xs, xs2},
                   unused(A, endpoints({ht, h1, h2})), std::move(diag));
}

FinderOutcome find_c4(const ColoringFamily& family, const FinderConfig& config) {
    if (family.n() % 2 != 0) throw std::invalid_argument("find_c4 needs an even host");
    Diagnostics diag;
    auto stage = bipartite_stage(family, config, diag);
    if (auto* r = std::get_if<ThresholdNotMet>(&stage)) return {*r, std::move(diag)};
    const auto& [b1, b2, A] = std::get<BipartiteStage>(stage);
    if (A.size() < 2) return refuse(std::move(diag), "pair", static_cast<double>(A.size()), 2);

    std::vector<std::uint64_t> keys;
    for (Vertex a : A) keys.push_back(pack(family.color(b1, b1, a), family.color(b2, b2, a)));
    const auto bucket = largest_class(keys);
    diag.set("k2_bucket", static_cast<double>(bucket.size()));
    if (bucket.size() < 2) return refuse(std::move(diag), "pigeonhole_k2", static_cast<double>(bucket.size()), 2);
    const Vertex a1 = A[bucket[0]], a2 = A[bucket[1]];

    const Edge a1b1 = make_edge(a1, b1), a1b2 = make_edge(a1, b2), a2b1 = make_edge(a2, b1),
               a2b2 = make_edge(a2, b2);
    return succeed(family, cycle(4), {a1, b1, a2, b2}, {{a1b1, a1b2}, {a1b1, a2b1}, {a2b1, a2b2}, {a1b2, a2b2}},
                   kNone, {}, std::move(diag));
}

}  // namespace rainbow
