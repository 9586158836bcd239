#include "rainbow/verify.hpp"

#include <algorithm>
#include <set>

namespace rainbow {

CollisionPair anchor_pair_for(const Anchor& anchor, Vertex slack_vertex) {
    if (const auto* common = std::get_if<CommonAnchor>(&anchor))
        return {common->first, common->second};
    if (const auto* hub = std::get_if<HubAnchor>(&anchor))
        return {make_edge(slack_vertex, hub->hub_first), make_edge(slack_vertex, hub->hub_second)};
    throw std::invalid_argument("violation has no anchor");
}

bool is_rainbow(const ColoringFamily& family, Vertex owner, const Embedding& copy) {
    if (owner >= family.n())
        throw std::out_of_range("owner " + std::to_string(owner) + " outside host");
    std::vector<Color> colors;
    for (const auto& e : copy.copy_edges()) colors.push_back(family.color(owner, e));
    std::sort(colors.begin(), colors.end());
    return std::adjacent_find(colors.begin(), colors.end()) == colors.end();
}

bool copy_is_good(const ColoringFamily& family, const Embedding& copy) {
    return std::any_of(copy.image.begin(), copy.image.end(),
                       [&](Vertex v) { return is_rainbow(family, v, copy); });
}

std::optional<CollisionPair> least_collision(const ColoringFamily& family, Vertex owner,
                                             std::vector<Edge> copy_edges) {
    std::sort(copy_edges.begin(), copy_edges.end());
    for (std::size_t i = 0; i < copy_edges.size(); ++i) {
        const Color c = family.color(owner, copy_edges[i]);
        for (std::size_t j = i + 1; j < copy_edges.size(); ++j)
            if (family.color(owner, copy_edges[j]) == c) return CollisionPair{copy_edges[i], copy_edges[j]};
    }
    return std::nullopt;
}

GoodnessReport family_is_good(const ColoringFamily& family, const PatternGraph& pattern,
                              const GoodnessOptions& options) {
    const auto total = copy_count(pattern, family.n());
    if (total > options.max_copies)
        throw ScaleGuardExceeded("pattern " + pattern.name() + " has " + std::to_string(total) +
                                 " copies in K_" + std::to_string(family.n()) + ", above the limit of " +
                                 std::to_string(options.max_copies));
    GoodnessReport report;
    std::vector<Edge> edges(pattern.num_edges());
    enumerate_copies(pattern, family.n(), [&](std::span<const Vertex> image) {
        ++report.copies_checked;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto& e = pattern.edges()[i];
            edges[i] = make_edge(image[e.a], image[e.b]);
        }
        std::vector<CollisionPair> collisions;
        for (Vertex owner : image) {
            auto pair = least_collision(family, owner, edges);
            if (!pair) return true;  // this owner is rainbow: copy is good
            collisions.push_back(*pair);
        }
        report.is_good = false;
        report.witness = ViolationCertificate{
            Embedding{pattern, std::vector<Vertex>(image.begin(), image.end())},
            std::move(collisions)};
        return false;
    });
    return report;
}

CertificateCheck check_certificate(const ColoringFamily& family, const ViolationCertificate& cert) {
    CertificateCheck check;
    const auto& emb = cert.embedding;
    try {
        emb.validate(family.n());
    } catch (const std::invalid_argument& e) {
        check.problems.push_back(e.what());
        return check;
    }
    if (cert.collisions.size() != emb.pattern.num_vertices()) {
        check.problems.push_back("certificate lists " + std::to_string(cert.collisions.size()) +
                                 " collisions for " + std::to_string(emb.pattern.num_vertices()) +
                                 " copy vertices");
        return check;
    }
    const auto edges = emb.copy_edges();
    const std::set<Edge> copy_edges(edges.begin(), edges.end());
    for (Vertex p = 0; p < emb.pattern.num_vertices(); ++p) {
        const Vertex owner = emb.image[p];
        const auto& pair = cert.collisions[p];
        const std::string who = "vertex " + std::to_string(p) + " (host " + std::to_string(owner) + "): ";
        if (pair.first.a >= pair.first.b || pair.second.a >= pair.second.b) {
            check.problems.push_back(who + "collision edge is not canonical");
        } else if (pair.first == pair.second) {
            check.problems.push_back(who + "collision edges coincide");
        } else if (!copy_edges.count(pair.first) || !copy_edges.count(pair.second)) {
            check.problems.push_back(who + "collision edge " +
                                     to_string(copy_edges.count(pair.first) ? pair.second : pair.first) +
                                     " is not a copy edge");
        } else if (family.color(owner, pair.first) != family.color(owner, pair.second)) {
            check.problems.push_back(who + "colors " + std::to_string(family.color(owner, pair.first)) +
                                     " and " + std::to_string(family.color(owner, pair.second)) + " differ");
        }
    }
    check.valid = check.problems.empty();
    return check;
}

CertificateCheck check_anchored(const ColoringFamily& family, const AnchoredViolation& violation) {
    auto check = check_certificate(family, violation.certificate);
    try {
        violation.certificate.embedding.validate(family.n());
    } catch (const std::invalid_argument&) {
        return check;
    }
    const auto& emb = violation.certificate.embedding;
    const std::set<Vertex> image(emb.image.begin(), emb.image.end());

    if (std::holds_alternative<std::monostate>(violation.anchor)) {
        if (!violation.slack.empty()) check.problems.push_back("slack without an anchor");
    } else if (const auto* common = std::get_if<CommonAnchor>(&violation.anchor)) {
        if (common->first == common->second) check.problems.push_back("anchor edges coincide");
        if (!emb.contains_edge(common->first) || !emb.contains_edge(common->second))
            check.problems.push_back("anchor edge is not a copy edge");
    } else if (const auto* hub = std::get_if<HubAnchor>(&violation.anchor)) {
        if (hub->hub_first == hub->hub_second || !image.count(hub->hub_first) ||
            !image.count(hub->hub_second))
            check.problems.push_back("anchor hubs must be two distinct copy vertices");
    }

    std::set<Vertex> seen;
    for (Vertex s : violation.slack) {
        const std::string who = "slack " + std::to_string(s) + ": ";
        if (s >= family.n()) {
            check.problems.push_back(who + "outside host");
            continue;
        }
        if (image.count(s)) check.problems.push_back(who + "already in the copy");
        if (!seen.insert(s).second) check.problems.push_back(who + "listed twice");
        if (!violation.has_anchor()) continue;
        const auto pair = anchor_pair_for(violation.anchor, s);
        if (family.color(s, pair.first) != family.color(s, pair.second))
            check.problems.push_back(who + "does not collide on the anchor pair");
    }
    check.valid = check.problems.empty();
    return check;
}

ViolationCertificate extend_violation(const ColoringFamily& family, const ViolationCertificate& cert,
                                      const PatternGraph& target) {
    const auto& source = cert.embedding.pattern;
    if (source.num_vertices() != target.num_vertices())
        throw std::invalid_argument("extend_violation needs equal vertex counts (" +
                                    std::to_string(source.num_vertices()) + " vs " +
                                    std::to_string(target.num_vertices()) + ")");
    if (!check_certificate(family, cert)) throw std::invalid_argument("input certificate is invalid");
    const auto map = subgraph_contains(target, source);
    if (!map) throw std::invalid_argument("certified pattern is not a subgraph of the target");

    ViolationCertificate out{Embedding{target, std::vector<Vertex>(target.num_vertices())},
                             std::vector<CollisionPair>(target.num_vertices())};
    for (Vertex i = 0; i < source.num_vertices(); ++i) {
        out.embedding.image[(*map)[i]] = cert.embedding.image[i];
        out.collisions[(*map)[i]] = cert.collisions[i];
    }
    if (!check_certificate(family, out)) throw std::logic_error("extended certificate failed re-check");
    return out;
}

ViolationCertificate extend_with_slack(const ColoringFamily& family,
                                       const AnchoredViolation& violation,
                                       const PatternGraph& target) {
    const auto& cert = violation.certificate;
    const auto& source = cert.embedding.pattern;
    if (!check_anchored(family, violation)) throw std::invalid_argument("input violation is invalid");
    const auto map = subgraph_contains(target, source);
    if (!map) throw std::invalid_argument("certified pattern is not a subgraph of the target");

    const std::size_t extra = target.num_vertices() - source.num_vertices();
    if (extra > 0 && !violation.has_anchor())
        throw std::invalid_argument("violation has no anchor to attach extra vertices");
    if (violation.slack.size() < extra)
        throw std::invalid_argument("slack set has " + std::to_string(violation.slack.size()) +
                                    " vertices, target needs " + std::to_string(extra));

    ViolationCertificate out{Embedding{target, std::vector<Vertex>(target.num_vertices())},
                             std::vector<CollisionPair>(target.num_vertices())};
    std::vector<bool> placed(target.num_vertices(), false);
    for (Vertex i = 0; i < source.num_vertices(); ++i) {
        out.embedding.image[(*map)[i]] = cert.embedding.image[i];
        out.collisions[(*map)[i]] = cert.collisions[i];
        placed[(*map)[i]] = true;
    }
    std::size_t next = 0;
    for (Vertex t = 0; t < target.num_vertices(); ++t) {
        if (placed[t]) continue;
        const Vertex s = violation.slack[next++];
        out.embedding.image[t] = s;
        out.collisions[t] = anchor_pair_for(violation.anchor, s);
    }
    for (Vertex t = 0; t < target.num_vertices(); ++t) {
        const auto& pair = out.collisions[t];
        if (!out.embedding.contains_edge(pair.first) || !out.embedding.contains_edge(pair.second))
            throw std::invalid_argument("anchor pair is not contained in the target copy");
    }
    if (!check_certificate(family, out)) throw std::logic_error("extended certificate failed re-check");
    return out;
}

}  // namespace rainbow
