#include <cmath>

#include "finder_support.hpp"
#include "json.hpp"

namespace rainbow {

void Diagnostics::set(const std::string& key, double value) {
    for (auto& [k, v] : values)
        if (k == key) {
            v = value;
            return;
        }
    values.emplace_back(key, value);
}

std::optional<double> Diagnostics::get(const std::string& key) const {
    for (const auto& [k, v] : values)
        if (k == key) return v;
    return std::nullopt;
}

std::string Diagnostics::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : values) {
        if (std::floor(v) == v && std::abs(v) < 9e15)
            j[k] = static_cast<std::int64_t>(v);
        else
            j[k] = v;
    }
    if (!member.empty()) j["member"] = member;
    j["reconstructed"] = reconstructed;
    j["fallback"] = fallback;
    return j.dump();
}

namespace detail {

std::variant<StarStage, ThresholdNotMet> star_stage(const ColoringFamily& family, const FinderConfig& config,
                                                    Diagnostics& diag) {
    const std::size_t n = family.n();
    if (n < 3) return ThresholdNotMet{"star", static_cast<double>(n), 3};
    const std::size_t fair = (n - 1 + family.k() - 1) / family.k();
    StarOptions options;
    options.x_candidates = config.star_x_candidates;
    options.s_cap = std::max<std::size_t>(2, std::min(fair, (n - 1) / 2));
    options.count_budget = config.total_count_budget;
    const auto star = star_extract(family, options);
    diag.set("star_x", star.x);
    diag.set("star_S", static_cast<double>(star.S.size()));
    diag.set("star_P", static_cast<double>(star.P.size()));
    if (star.triple_count) diag.set("star_triples", static_cast<double>(*star.triple_count));
    if (star.S.size() < 2) return ThresholdNotMet{"star", static_cast<double>(star.S.size()), 2};

    const std::size_t width = std::min(config.pair_window, star.S.size());
    PairBallot ballot(width);
    std::vector<std::uint64_t> keys(width);
    for (Vertex p : star.P) {
        for (std::size_t i = 0; i < width; ++i) keys[i] = family.color(p, star.x, star.S[i]);
        ballot.vote(keys);
    }
    const auto best = ballot.best();
    StarStage out{star.x, star.S[best.first], star.S[best.second], {}};
    for (Vertex p : star.P)
        if (family.color(p, out.x, out.s) == family.color(p, out.x, out.s2)) out.A.push_back(p);
    diag.set("pair_window", static_cast<double>(width));
    diag.set("A", static_cast<double>(out.A.size()));
    return out;
}

std::variant<MatchingStage, ThresholdNotMet> matching_stage(const ColoringFamily& family, const FinderConfig& config,
                                                            Diagnostics& diag) {
    SplitOptions options;
    options.count_budget = config.total_count_budget;
    const auto split = matching_extract(family, options);
    diag.set("M", static_cast<double>(split.M.size()));
    diag.set("Y", static_cast<double>(split.Y.size()));
    if (split.triple_count) diag.set("matching_triples", static_cast<double>(*split.triple_count));
    if (split.M.size() < 2) return ThresholdNotMet{"matching", static_cast<double>(split.M.size()), 2};

    const std::size_t width = std::min(config.pair_window, split.M.size());
    PairBallot ballot(width);
    std::vector<std::uint64_t> keys(width);
    for (Vertex p : split.Y) {
        for (std::size_t i = 0; i < width; ++i) keys[i] = family.color(p, split.M[i]);
        ballot.vote(keys);
    }
    const auto best = ballot.best();
    MatchingStage out{split.M[best.first], split.M[best.second], {}};
    for (Vertex p : split.Y)
        if (family.color(p, out.e1) == family.color(p, out.e2)) out.A.push_back(p);
    diag.set("pair_window", static_cast<double>(width));
    diag.set("A", static_cast<double>(out.A.size()));
    return out;
}

std::variant<BipartiteStage, ThresholdNotMet> bipartite_stage(const ColoringFamily& family,
                                                              const FinderConfig& config, Diagnostics& diag) {
    SplitOptions options;
    options.count_budget = config.total_count_budget;
    const auto split = bipartition_extract(family, options);
    if (split.triple_count) diag.set("bipartition_triples", static_cast<double>(*split.triple_count));
    if (split.B.size() < 2) return ThresholdNotMet{"bipartition", static_cast<double>(split.B.size()), 2};

    const std::size_t width = std::min(config.pair_window, split.B.size());
    PairBallot ballot(width);
    std::vector<std::uint64_t> keys(width);
    for (Vertex a : split.A) {
        for (std::size_t i = 0; i < width; ++i) keys[i] = family.color(a, a, split.B[i]);
        ballot.vote(keys);
    }
    const auto best = ballot.best();
    BipartiteStage out{split.B[best.first], split.B[best.second], {}};
    for (Vertex a : split.A)
        if (family.color(a, a, out.b1) == family.color(a, a, out.b2)) out.A.push_back(a);
    diag.set("pair_window", static_cast<double>(width));
    diag.set("A", static_cast<double>(out.A.size()));
    return out;
}

std::variant<PeelSystem, ThresholdNotMet> peel_stage(const std::vector<std::uint64_t>& keys, std::size_t tuple_size,
                                                     double coverage, const std::string& stage, Diagnostics& diag) {
    auto system = peel(keys, tuple_size);
    diag.set(stage + "_coverage", system.coverage());
    diag.set(stage + "_tuples", static_cast<double>(system.tuples.size()));
    if (system.tuples.empty() || system.coverage() < coverage)
        return ThresholdNotMet{stage, system.coverage(), coverage};
    return system;
}

}  // namespace detail
}  // namespace rainbow
