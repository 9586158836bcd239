#include "rainbow/generate.hpp"

#include <algorithm>

#include "rainbow/copies.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

GeneratorKind parse_generator_kind(const std::string& name) {
    if (name == "uniform" || name == "uniform-random") return GeneratorKind::uniform;
    if (name == "monochromatic" || name == "mono") return GeneratorKind::monochromatic;
    if (name == "injective") return GeneratorKind::injective;
    if (name == "proper-ish" || name == "proper_ish") return GeneratorKind::proper_ish;
    if (name == "resampled-good" || name == "resampled_good") return GeneratorKind::resampled_good;
    throw std::invalid_argument("unknown generator kind '" + name + "'");
}

std::string to_string(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::uniform: return "uniform";
        case GeneratorKind::monochromatic: return "monochromatic";
        case GeneratorKind::injective: return "injective";
        case GeneratorKind::proper_ish: return "proper-ish";
        case GeneratorKind::resampled_good: return "resampled-good";
    }
    return "?";
}

ColoringFamily generate(const GeneratorSpec& spec) {
    switch (spec.kind) {
        case GeneratorKind::uniform: return ColoringFamily::uniform(spec.n, spec.k, spec.seed);
        case GeneratorKind::monochromatic: return ColoringFamily::monochromatic(spec.n, spec.k);
        case GeneratorKind::injective: return ColoringFamily::injective(spec.n, spec.k);
        case GeneratorKind::proper_ish: return ColoringFamily::rotated_sum(spec.n, spec.k);
        case GeneratorKind::resampled_good: {
            if (!spec.pattern) throw std::invalid_argument("resampled-good generation needs a pattern");
            auto result = construct_good_family(spec.n, *spec.pattern, spec.k, spec.seed, spec.budget);
            if (!result.family)
                throw BudgetExhausted("no good family within " + std::to_string(spec.budget) + " resamples; " +
                                          std::to_string(result.bad_copies) + " bad copies remain",
                                      result.bad_copies);
            return std::move(*result.family);
        }
    }
    throw std::logic_error("unhandled generator kind");
}

ConstructResult construct_good_family(std::size_t n, const PatternGraph& pattern, Color k, std::uint64_t seed,
                                      std::uint64_t budget, std::uint64_t max_copies) {
    const std::uint64_t E = complete_edge_count(n);
    const auto start = ColoringFamily::uniform(n, k, seed).materialize();
    std::vector<Color> cells(start.cells().begin(), start.cells().end());

    std::vector<std::vector<std::uint64_t>> copy_edges;
    std::vector<std::vector<Vertex>> copy_vertices;
    if (pattern.num_vertices() <= n) {
        const auto count = copy_count(pattern, n);
        if (count > max_copies)
            throw ScaleGuardExceeded(std::to_string(count) + " copies exceed the limit of " +
                                     std::to_string(max_copies));
        enumerate_copies(pattern, n, [&](std::span<const Vertex> image) {
            std::vector<std::uint64_t> edges;
            for (const auto& e : pattern.edges()) {
                const auto h = make_edge(image[e.a], image[e.b]);
                edges.push_back(edge_index(n, h.a, h.b));
            }
            copy_edges.push_back(std::move(edges));
            copy_vertices.emplace_back(image.begin(), image.end());
            return true;
        });
    }

    std::vector<Color> seen;
    const auto is_good = [&](std::size_t t) {
        for (Vertex v : copy_vertices[t]) {
            seen.clear();
            for (auto e : copy_edges[t]) seen.push_back(cells[v * E + e]);
            std::sort(seen.begin(), seen.end());
            if (std::adjacent_find(seen.begin(), seen.end()) == seen.end()) return true;
        }
        return false;
    };
    const auto first_bad = [&]() -> std::optional<std::size_t> {
        for (std::size_t t = 0; t < copy_edges.size(); ++t)
            if (!is_good(t)) return t;
        return std::nullopt;
    };

    // The uniform family consumed the first n*|E| draws of the stream.
    SplitMix64 rng(seed + n * E * kSplitMixGamma);
    ConstructResult out;
    while (auto bad = first_bad()) {
        if (out.resamples == budget) {
            for (std::size_t t = *bad; t < copy_edges.size(); ++t) out.bad_copies += is_good(t) ? 0 : 1;
            return out;
        }
        for (Vertex v : copy_vertices[*bad])
            for (auto e : copy_edges[*bad]) cells[v * E + e] = 1 + static_cast<Color>(rng.below(k));
        ++out.resamples;
    }
    auto family = ColoringFamily::dense(n, k, std::move(cells));
    GoodnessOptions options;
    options.max_copies = max_copies;
    if (!family_is_good(family, pattern, options).is_good)
        throw std::logic_error("resampling ended on a family that is not good");
    out.family = std::move(family);
    return out;
}

}  // namespace rainbow
