#include "finder_support.hpp"

namespace rainbow {

using namespace detail;

H6Member detect_h6_member(const PatternGraph& H) {
    if (H.num_edges() < 6)
        throw std::invalid_argument("member detection needs at least 6 edges, got " + std::to_string(H.num_edges()));
    for (const char* tag : {"I4", "S4", "P2+P2", "P2+K2+K2", "P4", "C4"}) {
        auto member = parse_pattern(tag);
        if (auto map = subgraph_contains(H, member)) return H6Member{tag, std::move(member), std::move(*map)};
    }
    throw std::logic_error("graph with at least 6 edges contains no H6 member");
}

namespace {

FinderOutcome run_member(const ColoringFamily& family, const std::string& tag, const FinderConfig& config) {
    if (tag == "I4") return find_i4(family, config);
    if (tag == "S4") return find_s4(family, config);
    if (tag == "P2+P2") return find_p2_p2(family, config);
    if (tag == "P2+K2+K2") return find_p2_k2_k2(family, config);
    if (tag == "P4") return find_p4(family, config);
    return find_c4(family, config);
}

// Host-size preconditions of the member finders, expressed as a refusal
// instead of an input error so that generic dispatch never throws on them.
std::optional<ThresholdNotMet> host_mismatch(const ColoringFamily& family, const std::string& tag) {
    const std::size_t divisor = tag == "I4" ? 3 : (tag == "P4" || tag == "C4") ? 2 : 1;
    if (family.n() % divisor != 0)
        return ThresholdNotMet{"host_divisibility", static_cast<double>(family.n() % divisor), 0};
    return std::nullopt;
}

FinderOutcome exhaustive_fallback(const ColoringFamily& family, const PatternGraph& H, const FinderConfig& config,
                                  Diagnostics diag) {
    diag.fallback = true;
    GoodnessOptions options;
    options.max_copies = config.fallback_max_copies;
    const auto report = family_is_good(family, H, options);
    diag.set("fallback_copies", static_cast<double>(report.copies_checked));
    if (!report.witness) return refuse(std::move(diag), "fallback", 0, 1);
    auto cert = *report.witness;
    return succeed(family, cert.embedding.pattern, cert.embedding.image, cert.collisions, std::monostate{}, {},
                   std::move(diag));
}

// The member's violation re-targeted onto H; the anchor and remaining slack carry over.
FinderOutcome lift(const ColoringFamily& family, const PatternGraph& H, FinderOutcome member,
                   const FinderConfig& config) {
    if (!member.success()) return member;
    const auto& av = member.violation();
    const auto& source = av.certificate.embedding.pattern;
    if (source.num_vertices() == H.num_vertices()) {
        auto cert = extend_violation(family, av.certificate, H);
        return succeed(family, H, cert.embedding.image, cert.collisions, av.anchor, av.slack,
                       std::move(member.diagnostics));
    }
    if (!av.has_anchor()) return exhaustive_fallback(family, H, config, std::move(member.diagnostics));
    const std::size_t extra = H.num_vertices() - source.num_vertices();
    if (av.slack.size() < extra)
        return refuse(std::move(member.diagnostics), "slack", static_cast<double>(av.slack.size()),
                      static_cast<double>(extra));
    auto cert = extend_with_slack(family, av, H);
    return succeed(family, H, cert.embedding.image, cert.collisions, av.anchor,
                   unused(av.slack, cert.embedding.image), std::move(member.diagnostics));
}

}  // namespace

FinderOutcome generic_find(const ColoringFamily& family, const PatternGraph& H, const FinderConfig& config) {
    if (H.num_vertices() > family.n())
        throw std::invalid_argument("pattern with " + std::to_string(H.num_vertices()) +
                                    " vertices does not fit a host of size " + std::to_string(family.n()));
    const auto member = detect_h6_member(H);
    Diagnostics diag;
    diag.member = member.tag;
    if (auto mismatch = host_mismatch(family, member.tag)) return {*mismatch, std::move(diag)};
    auto outcome = run_member(family, member.tag, config);
    outcome.diagnostics.member = member.tag;
    return lift(family, H, std::move(outcome), config);
}

namespace {

struct Recognized {
    std::string family;  // finder name
    std::size_t a = 0, b = 0;
};

std::optional<Recognized> recognize(const PatternGraph& core) {
    const std::size_t v = core.num_vertices(), e = core.num_edges();
    if (e == 0) return std::nullopt;
    const auto same = [&](const PatternGraph& g) { return isomorphic(core, g); };
    if (e == 4 && v == 5 && same(path(4))) return Recognized{"P4"};
    if (e == 4 && v == 4 && same(cycle(4))) return Recognized{"C4"};
    if (v == e + 1 && e >= 4 && core.max_degree() == e) return Recognized{"S", e};
    if (v == 2 * e && e >= 4 && core.max_degree() == 1) return Recognized{"I", e};
    if (e == 4 && v == 6 && same(parse_pattern("P2+P2"))) return Recognized{"P2+P2"};
    if (e == 4 && v == 7 && same(parse_pattern("P2+K2+K2"))) return Recognized{"P2+K2+K2"};
    if (e == 5 && v == 9 && same(parse_pattern("P2+3K2"))) return Recognized{"P2+3K2"};
    if (v >= 8 && e == v * (v - 1) / 2) return Recognized{"K", v};
    for (std::size_t s = 7; s * 2 <= v; ++s)
        if (s * (v - s) == e && same(complete_bipartite(s, v - s))) return Recognized{"Kst", s, v - s};
    return std::nullopt;
}

PatternGraph without_isolated(const PatternGraph& H) {
    std::vector<Vertex> relabel(H.num_vertices(), 0);
    Vertex next = 0;
    for (Vertex v = 0; v < H.num_vertices(); ++v)
        if (H.degree(v) > 0) relabel[v] = next++;
    std::vector<Edge> edges;
    for (const auto& e : H.edges()) edges.push_back(make_edge(relabel[e.a], relabel[e.b]));
    return PatternGraph(next, std::move(edges));
}

}  // namespace

FinderOutcome find_for_pattern(const ColoringFamily& family, const PatternGraph& H, const FinderConfig& config) {
    const auto core = without_isolated(H);
    const auto known = recognize(core);
    if (!known) {
        if (H.num_edges() >= 6) return generic_find(family, H, config);
        throw std::invalid_argument("no finder for pattern '" + H.name() + "' with " +
                                    std::to_string(H.num_edges()) + " edges");
    }
    const auto& f = known->family;
    // The clique slack collides on edges into the hubs, which isolated
    // vertices do not have; go through a common-anchor member instead.
    if (f == "K" && H.isolated_count() > 0) return generic_find(family, H, config);
    FinderOutcome outcome;
    if (f == "P4") outcome = find_p4(family, config);
    else if (f == "C4") outcome = find_c4(family, config);
    else if (f == "P2+P2") outcome = find_p2_p2(family, config);
    else if (f == "P2+K2+K2") outcome = find_p2_k2_k2(family, config);
    else if (f == "P2+3K2") outcome = find_p2_3k2(family, config);
    else if (f == "S") outcome = known->a == 4 ? find_s4(family, config) : find_star(family, known->a, config);
    else if (f == "I")
        outcome = known->a == 4   ? find_i4(family, config)
                  : known->a <= 6 ? find_matching_56(family, known->a, config)
                                  : find_matching_large(family, known->a, config);
    else if (f == "K") outcome = find_clique(family, known->a, config);
    else outcome = find_complete_bipartite(family, known->a, known->b, config);

    if (!outcome.success()) return outcome;
    if (H.isolated_count() == 0 && outcome.violation().certificate.embedding.pattern == H) return outcome;
    return lift(family, H, std::move(outcome), config);
}

const std::vector<DeskPoint>& desk_points() {
    static const std::vector<DeskPoint> points{
        {"P4", 400, 3},     {"S4", 3000, 4},     {"P2+P2", 3000, 4}, {"P2+K2+K2", 3000, 4},
        {"S5", 10000, 5},   {"I4", 6000, 3},     {"I5", 36000, 3},   {"I7", 45000, 4},
        {"P2+3K2", 20000, 4}, {"C4", 800, 3},    {"K8", 2000, 3},    {"K7,7", 9000, 3},
        {"K4", 800, 3},
    };
    return points;
}

std::size_t minimum_host(const PatternGraph& H) {
    const auto core = without_isolated(H);
    const auto known = recognize(core);
    std::size_t host = 0, step = 1;
    if (known) {
        const auto& f = known->family;
        if (f == "P4") host = 10;
        else if (f == "C4") host = 8;
        else if (f == "P2+P2" || f == "P2+K2+K2") host = 12;
        else if (f == "P2+3K2") host = 20;
        else if (f == "S") host = known->a == 4 ? 8 : 2 * known->a + 4;
        else if (f == "I")
            host = known->a == 4 ? 24 : known->a <= 6 ? 36 : 3 * std::max<std::size_t>(20, 2 * (known->a - 2));
        else if (f == "K") host = 2 * std::max<std::size_t>(10, known->a - 2);
        else host = 3 * std::max<std::size_t>(30, known->a + known->b - 4);
        step = (f == "I" || f == "Kst") ? 3 : (f == "P4" || f == "C4" || f == "K") ? 2 : 1;
        if (H.isolated_count() == 0) return host;
    } else {
        if (H.num_edges() < 6) throw std::invalid_argument("no finder for this pattern");
        const auto member = detect_h6_member(H);
        host = minimum_host(member.member);
        step = member.tag == "I4" ? 3 : (member.tag == "P4" || member.tag == "C4") ? 2 : 1;
    }
    // Extra vertices draw on the slack, which grows with the host: search upward.
    host = std::max(host, H.num_vertices() + (step - H.num_vertices() % step) % step);
    for (std::size_t tries = 0; tries < 4096; ++tries, host += step)
        if (find_for_pattern(ColoringFamily::monochromatic(host), H).success()) return host;
    throw std::logic_error("no monochromatic host found for this pattern");
}

}  // namespace rainbow
