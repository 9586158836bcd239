#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rainbow/family.hpp"
#include "rainbow/pattern.hpp"

namespace rainbow {

struct DecideOptions {
    std::uint64_t max_nodes = 200'000'000;  // search nodes before giving up
    std::uint64_t max_copies = 1'000'000;
};

struct Decision {
    bool good_exists = false;
    std::optional<ColoringFamily> witness;  // verified good family when good_exists
    std::uint64_t nodes = 0;
};

/// Complete backtracking search for a good family with k colors. Cells are
/// assigned owner by owner in edge order; each owner's colors follow a
/// restricted-growth order (first cell gets 1, later cells at most one above
/// the owner's maximum so far), which quotients per-owner color permutations.
/// A branch dies as soon as every owner of some copy has a collision on it.
/// Throws ScaleGuardExceeded past options.max_nodes or options.max_copies.
Decision decide_good_exists(std::size_t n, const PatternGraph& pattern, Color k, const DecideOptions& options = {});

struct ExactResult {
    std::size_t n = 0;
    PatternGraph pattern;
    std::optional<Color> value;   // C(n,H) when both sides were settled
    Color lower = 1;              // every k < lower was refuted
    std::optional<Color> upper;   // smallest k with a witness found
    std::optional<ColoringFamily> witness_family;
    std::string method;           // "exhaustive" or "backtracking"
};

/// Scans k = 1..k_max. A guard hit at some k leaves a bracket [lower, upper].
ExactResult compute_c(std::size_t n, const PatternGraph& pattern, Color k_max, const DecideOptions& options = {});

// DIMACS export. Variable (v*|E| + e)*k + c + 1 says f_v(e) = c+1 (e in
// lexicographic edge order, c in [0,k)); auxiliary variables follow, one per
// (copy, copy vertex) in copy enumeration order, meaning "this owner is
// rainbow on this copy".
struct CnfStats {
    std::uint64_t color_variables = 0;
    std::uint64_t auxiliary_variables = 0;
    std::uint64_t clauses = 0;
    std::uint64_t copies = 0;
};

CnfStats write_cnf(std::ostream& out, std::size_t n, const PatternGraph& pattern, Color k,
                   std::uint64_t max_copies = 1'000'000);
CnfStats export_cnf(std::size_t n, const PatternGraph& pattern, Color k, const std::filesystem::path& path,
                    std::uint64_t max_copies = 1'000'000);

/// Reads a solver model: integers after optional "v" prefixes, "s"/"c" lines
/// skipped, terminated by 0 or end of input.
std::vector<int> parse_model(std::istream& in);

/// Family from the true color variables of a model. Throws when a cell has
/// no true color variable.
ColoringFamily decode_model(std::size_t n, Color k, std::span<const int> literals);

}  // namespace rainbow
