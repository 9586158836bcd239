#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rainbow/family.hpp"
#include "rainbow/pattern.hpp"

namespace rainbow {

enum class GeneratorKind { uniform, monochromatic, injective, proper_ish, resampled_good };

GeneratorKind parse_generator_kind(const std::string& name);
std::string to_string(GeneratorKind kind);

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::uniform;
    std::size_t n = 2;
    Color k = 1;
    std::uint64_t seed = 0;
    std::optional<PatternGraph> pattern;  // required for resampled_good
    std::uint64_t budget = 1'000'000;     // resamples, resampled_good only
};

class BudgetExhausted : public Error {
public:
    BudgetExhausted(const std::string& what, std::uint64_t bad_copies) : Error(what), bad_copies(bad_copies) {}
    std::uint64_t bad_copies;
};

/// uniform: SplitMix64 stream; monochromatic: all 1; injective: edge index + 1
/// (needs k >= n(n-1)/2); proper_ish: f_v({a,b}) = 1 + (a+b+v) mod k;
/// resampled_good: construct_good_family, BudgetExhausted on failure.
ColoringFamily generate(const GeneratorSpec& spec);

struct ConstructResult {
    std::optional<ColoringFamily> family;  // verified good when present
    std::uint64_t resamples = 0;
    std::uint64_t bad_copies = 0;          // in the last state when the budget ran out
};

/// Resampling search for a good family: start from the uniform family for the
/// seed, then while some copy is bad, redraw every color its owners give to its
/// edges (first bad copy in enumeration order). Draws continue the same
/// SplitMix64 stream. The result is re-checked by family_is_good.
ConstructResult construct_good_family(std::size_t n, const PatternGraph& pattern, Color k, std::uint64_t seed = 0,
                                      std::uint64_t budget = 1'000'000, std::uint64_t max_copies = 10'000'000);

}  // namespace rainbow
