#pragma once

#include <variant>
#include <vector>

#include "rainbow/copies.hpp"

namespace rainbow {

/// Two distinct copy edges that one owner's coloring paints alike.
struct CollisionPair {
    Edge first;
    Edge second;

    friend auto operator<=>(const CollisionPair&, const CollisionPair&) = default;
};

/// A copy T plus, for every pattern vertex p, a collision under f_{image(p)}:
/// no vertex of T is rainbow on T.
struct ViolationCertificate {
    Embedding embedding;
    std::vector<CollisionPair> collisions;
};

/// Every slack vertex s satisfies f_s(first) = f_s(second).
struct CommonAnchor {
    Edge first;
    Edge second;
};

/// Every slack vertex s satisfies f_s(s hub_first) = f_s(s hub_second).
struct HubAnchor {
    Vertex hub_first;
    Vertex hub_second;
};

using Anchor = std::variant<std::monostate, CommonAnchor, HubAnchor>;

/// A certificate with a reservoir of outside vertices that can be added to
/// the copy without losing the violation.
struct AnchoredViolation {
    ViolationCertificate certificate;
    Anchor anchor;
    std::vector<Vertex> slack;

    bool has_anchor() const { return !std::holds_alternative<std::monostate>(anchor); }
};

/// The pair a slack vertex would use, given the anchor.
CollisionPair anchor_pair_for(const Anchor& anchor, Vertex slack_vertex);

}  // namespace rainbow
