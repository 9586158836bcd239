#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/certificate.hpp"
#include "rainbow/family.hpp"

namespace rainbow {

bool is_rainbow(const ColoringFamily& family, Vertex owner, const Embedding& copy);

/// Some vertex of the copy is rainbow on it.
bool copy_is_good(const ColoringFamily& family, const Embedding& copy);

/// Lexicographically least pair of copy edges (in host edge order) that
/// f_owner colors alike, if any.
std::optional<CollisionPair> least_collision(const ColoringFamily& family, Vertex owner,
                                             std::vector<Edge> copy_edges);

struct GoodnessOptions {
    std::uint64_t max_copies = 100'000'000;
};

struct GoodnessReport {
    bool is_good = true;
    std::optional<ViolationCertificate> witness;  // first bad copy in enumeration order
    std::uint64_t copies_checked = 0;
};

/// Exhaustive check over every copy of the pattern. Throws ScaleGuardExceeded
/// when the copy count is above options.max_copies.
GoodnessReport family_is_good(const ColoringFamily& family, const PatternGraph& pattern,
                              const GoodnessOptions& options = {});

struct CertificateCheck {
    bool valid = false;
    std::vector<std::string> problems;  // one line per failing vertex or structural defect

    explicit operator bool() const { return valid; }
};

CertificateCheck check_certificate(const ColoringFamily& family, const ViolationCertificate& cert);

/// Certificate check plus the slack and anchor invariants.
CertificateCheck check_anchored(const ColoringFamily& family, const AnchoredViolation& violation);

/// Re-targets a certificate for H' onto H, where H' is a spanning subgraph of
/// H (same vertex count). Collisions on a subset of edges survive on a superset.
ViolationCertificate extend_violation(const ColoringFamily& family, const ViolationCertificate& cert,
                                      const PatternGraph& target);

/// Embeds the certified pattern into a larger target and fills the target's
/// extra vertices from the slack set; each added vertex collides on the anchor.
ViolationCertificate extend_with_slack(const ColoringFamily& family,
                                       const AnchoredViolation& violation,
                                       const PatternGraph& target);

}  // namespace rainbow
