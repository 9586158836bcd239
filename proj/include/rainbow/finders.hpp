#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rainbow/certificate.hpp"
#include "rainbow/family.hpp"

namespace rainbow {

/// Honest refusal: the named pigeonhole stage produced a bucket (or coverage)
/// below what the next step needs.
struct ThresholdNotMet {
    std::string stage;
    double observed = 0;
    double required = 0;
};

struct Diagnostics {
    std::vector<std::pair<std::string, double>> values;  // in stage order
    std::string member;          // H6 member used by generic_find
    bool reconstructed = false;  // procedure has no written proof to follow
    bool fallback = false;       // found by bounded exhaustive search

    void set(const std::string& key, double value);
    std::optional<double> get(const std::string& key) const;
    std::string to_json() const;
};

struct FinderOutcome {
    std::variant<AnchoredViolation, ThresholdNotMet> result;
    Diagnostics diagnostics;

    bool success() const { return std::holds_alternative<AnchoredViolation>(result); }
    const AnchoredViolation& violation() const { return std::get<AnchoredViolation>(result); }
    const ThresholdNotMet& refusal() const { return std::get<ThresholdNotMet>(result); }
};

/// Finite-scale knobs. The max-bucket searches range over a window of
/// candidates (voters always range over the full set); each search is exact
/// when the candidate set fits its window.
struct FinderConfig {
    double coverage = 0.99;               // peeling target for clique, K_{s,t}, matchings
    double star_coverage = 2.0 / 3.0;     // peeling target for S_t, t >= 5
    std::size_t pair_window = 64;         // candidates for (s,s'), (e1,e2), (b1,b2)
    std::size_t triple_window = 48;       // candidates for (b1,b2,b3)
    std::size_t edge_window_vertices = 24;  // K_{s,t}: edge pairs among the first V_L vertices
    std::size_t star_x_candidates = 1;    // centers tried by the star stage
    std::uint64_t total_count_budget = 20'000'000;  // extraction totals reported when cheaper
    std::uint64_t fallback_max_copies = 10'000'000;
};

FinderOutcome find_p4(const ColoringFamily& family, const FinderConfig& config = {});
FinderOutcome find_s4(const ColoringFamily& family, const FinderConfig& config = {});
FinderOutcome find_p2_k2_k2(const ColoringFamily& family, const FinderConfig& config = {});
FinderOutcome find_p2_p2(const ColoringFamily& family, const FinderConfig& config = {});
FinderOutcome find_star(const ColoringFamily& family, std::size_t t, const FinderConfig& config = {});
FinderOutcome find_i4(const ColoringFamily& family, const FinderConfig& config = {});
FinderOutcome find_matching_56(const ColoringFamily& family, std::size_t t, const FinderConfig& config = {});
FinderOutcome find_matching_large(const ColoringFamily& family, std::size_t t, const FinderConfig& config = {});
FinderOutcome find_p2_3k2(const ColoringFamily& family, const FinderConfig& config = {});
FinderOutcome find_c4(const ColoringFamily& family, const FinderConfig& config = {});
FinderOutcome find_clique(const ColoringFamily& family, std::size_t r, const FinderConfig& config = {});
FinderOutcome find_complete_bipartite(const ColoringFamily& family, std::size_t s, std::size_t t,
                                      const FinderConfig& config = {});

struct H6Member {
    std::string tag;                // "I4", "S4", "P2+P2", "P2+K2+K2", "P4" or "C4"
    PatternGraph member;
    std::vector<Vertex> embedding;  // member vertex -> H vertex
};

/// Some member of {I4, S4, P2+P2, P2+K2+K2, P4, C4} inside H, first in that
/// order. Throws std::invalid_argument when H has fewer than 6 edges.
H6Member detect_h6_member(const PatternGraph& H);

/// Member finder plus extension; C4/P4 members with extra H vertices fall
/// back to a guarded exhaustive search (ScaleGuardExceeded past the guard).
FinderOutcome generic_find(const ColoringFamily& family, const PatternGraph& H, const FinderConfig& config = {});

/// Picks the dedicated finder for a recognized pattern (optionally padded with
/// isolated vertices) and generic_find otherwise. Throws std::invalid_argument
/// for patterns with no finder (at most 3 edges, or 4-5 edges outside the
/// named families).
FinderOutcome find_for_pattern(const ColoringFamily& family, const PatternGraph& H,
                               const FinderConfig& config = {});

/// Host and palette at which a finder is run on random families.
struct DeskPoint {
    std::string finder;   // pattern tag understood by parse_pattern
    std::size_t host;
    Color k;
};

/// Desk-scale operating points (host, k-hat) for the randomized gate.
const std::vector<DeskPoint>& desk_points();

/// Documented minimum host for the monochromatic family (the finder succeeds there).
std::size_t minimum_host(const PatternGraph& H);

}  // namespace rainbow
