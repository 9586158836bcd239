#include "rainbow/exact.hpp"

#include <fstream>
#include <sstream>

#include "rainbow/copies.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

namespace {

struct CopyTable {
    std::vector<std::vector<std::uint32_t>> edges;     // per copy: host edge indices
    std::vector<std::vector<Vertex>> vertices;         // per copy: host vertices
};

CopyTable list_copies(std::size_t n, const PatternGraph& pattern, std::uint64_t max_copies) {
    CopyTable table;
    if (pattern.num_vertices() > n) return table;
    const auto count = copy_count(pattern, n);
    if (count > max_copies)
        throw ScaleGuardExceeded(std::to_string(count) + " copies exceed the limit of " + std::to_string(max_copies));
    enumerate_copies(pattern, n, [&](std::span<const Vertex> image) {
        std::vector<std::uint32_t> edges;
        for (const auto& e : pattern.edges()) {
            const auto h = make_edge(image[e.a], image[e.b]);
            edges.push_back(static_cast<std::uint32_t>(edge_index(n, h.a, h.b)));
        }
        table.edges.push_back(std::move(edges));
        table.vertices.emplace_back(image.begin(), image.end());
        return true;
    });
    return table;
}

class Search {
public:
    Search(std::size_t n, const CopyTable& copies, Color k, const DecideOptions& options)
        : n_(n), edges_(complete_edge_count(n)), k_(k), options_(options), copies_(copies),
          cells_(n * edges_, 0), dead_(copies.edges.size() * 64, false), dead_count_(copies.edges.size(), 0),
          watch_(n * edges_) {
        // watch_[cell] lists copies in which that owner/edge cell participates.
        for (std::uint32_t t = 0; t < copies.edges.size(); ++t)
            for (Vertex v : copies.vertices[t])
                for (auto e : copies.edges[t]) watch_[v * edges_ + e].push_back(t);
    }

    bool run() { return assign(0, 0); }
    std::vector<Color> colors() const { return cells_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    std::size_t slot(std::uint32_t t, Vertex v) const {
        const auto& vs = copies_.vertices[t];
        return t * 64 + static_cast<std::size_t>(std::find(vs.begin(), vs.end(), v) - vs.begin());
    }

    bool assign(std::size_t cell, Color owner_max) {
        if (cell == cells_.size()) return true;
        const auto owner = static_cast<Vertex>(cell / edges_);
        const auto edge = static_cast<std::uint32_t>(cell % edges_);
        if (edge == 0) owner_max = 0;
        const Color limit = std::min<Color>(k_, owner_max + 1);
        for (Color c = 1; c <= limit; ++c) {
            if (++nodes_ > options_.max_nodes)
                throw ScaleGuardExceeded("search exceeded " + std::to_string(options_.max_nodes) + " nodes");
            cells_[cell] = c;
            const std::size_t mark = trail_.size();
            bool ok = true;
            for (auto t : watch_[cell]) {
                const auto s = slot(t, owner);
                if (dead_[s]) continue;
                bool collides = false;
                for (auto other : copies_.edges[t])
                    if (other < edge && cells_[owner * edges_ + other] == c) collides = true;
                if (!collides) continue;
                dead_[s] = true;
                trail_.push_back(s);
                if (++dead_count_[t] == copies_.vertices[t].size()) ok = false;
            }
            if (ok && assign(cell + 1, std::max(owner_max, c))) return true;
            while (trail_.size() > mark) {
                const auto s = trail_.back();
                trail_.pop_back();
                dead_[s] = false;
                --dead_count_[s / 64];
            }
        }
        cells_[cell] = 0;
        return false;
    }

    std::size_t n_;
    std::uint64_t edges_;
    Color k_;
    DecideOptions options_;
    const CopyTable& copies_;
    std::vector<Color> cells_;
    std::vector<bool> dead_;
    std::vector<std::uint32_t> dead_count_;
    std::vector<std::vector<std::uint32_t>> watch_;
    std::vector<std::size_t> trail_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

Decision decide_good_exists(std::size_t n, const PatternGraph& pattern, Color k, const DecideOptions& options) {
    if (n < 2) throw std::invalid_argument("host needs at least 2 vertices");
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (pattern.num_vertices() > 64) throw std::invalid_argument("pattern too large for exact search");
    const auto copies = list_copies(n, pattern, options.max_copies);
    Search search(n, copies, k, options);
    Decision decision;
    decision.good_exists = search.run();
    decision.nodes = search.nodes();
    if (decision.good_exists) {
        auto family = ColoringFamily::dense(n, k, search.colors());
        GoodnessOptions check;
        check.max_copies = options.max_copies;
        if (!family_is_good(family, pattern, check).is_good)
            throw std::logic_error("exact search produced a family that is not good");
        decision.witness = std::move(family);
    }
    return decision;
}

ExactResult compute_c(std::size_t n, const PatternGraph& pattern, Color k_max, const DecideOptions& options) {
    ExactResult result;
    result.n = n;
    result.pattern = pattern;
    result.method = "backtracking";
    bool refuted_so_far = true;
    for (Color k = 1; k <= k_max; ++k) {
        try {
            auto decision = decide_good_exists(n, pattern, k, options);
            if (decision.good_exists) {
                result.upper = k;
                result.witness_family = std::move(decision.witness);
                if (refuted_so_far) result.value = k;
                break;
            }
            if (refuted_so_far) result.lower = k + 1;
        } catch (const ScaleGuardExceeded&) {
            refuted_so_far = false;
        }
    }
    return result;
}

CnfStats write_cnf(std::ostream& out, std::size_t n, const PatternGraph& pattern, Color k, std::uint64_t max_copies) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    const auto copies = list_copies(n, pattern, max_copies);
    const std::uint64_t E = complete_edge_count(n);
    CnfStats stats;
    stats.copies = copies.edges.size();
    stats.color_variables = n * E * k;
    for (const auto& vs : copies.vertices) stats.auxiliary_variables += vs.size();

    std::ostringstream body;
    const auto x = [&](std::uint64_t v, std::uint64_t e, std::uint64_t c) { return (v * E + e) * k + c + 1; };
    for (std::uint64_t v = 0; v < n; ++v)
        for (std::uint64_t e = 0; e < E; ++e) {
            for (Color c = 0; c < k; ++c) body << x(v, e, c) << ' ';
            body << "0\n";
            ++stats.clauses;
            for (Color c = 0; c < k; ++c)
                for (Color d = c + 1; d < k; ++d) {
                    body << '-' << x(v, e, c) << " -" << x(v, e, d) << " 0\n";
                    ++stats.clauses;
                }
        }
    std::uint64_t aux = stats.color_variables;
    for (std::size_t t = 0; t < copies.edges.size(); ++t) {
        const auto& es = copies.edges[t];
        std::ostringstream any;
        for (Vertex v : copies.vertices[t]) {
            const std::uint64_t r = ++aux;
            any << r << ' ';
            for (std::size_t i = 0; i < es.size(); ++i)
                for (std::size_t j = i + 1; j < es.size(); ++j)
                    for (Color c = 0; c < k; ++c) {
                        body << '-' << r << " -" << x(v, es[i], c) << " -" << x(v, es[j], c) << " 0\n";
                        ++stats.clauses;
                    }
        }
        body << any.str() << "0\n";
        ++stats.clauses;
    }

    out << "c rainbow goodness: n=" << n << " k=" << k << " pattern=" << pattern.name() << '\n'
        << "c variable (v*" << E << "+e)*" << k << "+c+1 means f_v(edge e) = c+1, edges in lexicographic order\n"
        << "c variables " << stats.color_variables + 1 << ".." << stats.color_variables + stats.auxiliary_variables
        << " mean: owner is rainbow on copy, one per (copy, copy vertex)\n"
        << "c copies " << stats.copies << '\n'
        << "p cnf " << stats.color_variables + stats.auxiliary_variables << ' ' << stats.clauses << '\n'
        << body.str();
    return stats;
}

CnfStats export_cnf(std::size_t n, const PatternGraph& pattern, Color k, const std::filesystem::path& path,
                    std::uint64_t max_copies) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    auto stats = write_cnf(out, n, pattern, k, max_copies);
    if (!out) throw Error("write failed for " + path.string());
    return stats;
}

std::vector<int> parse_model(std::istream& in) {
    std::vector<int> literals;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream words(line);
        std::string word;
        while (words >> word) {
            if (word == "c" || word == "s") break;
            if (word == "v") continue;
            const int lit = std::stoi(word);
            if (lit == 0) return literals;
            literals.push_back(lit);
        }
    }
    return literals;
}

ColoringFamily decode_model(std::size_t n, Color k, std::span<const int> literals) {
    const std::uint64_t E = complete_edge_count(n);
    const std::uint64_t limit = n * E * k;
    std::vector<Color> cells(n * E, 0);
    for (int lit : literals) {
        if (lit <= 0 || static_cast<std::uint64_t>(lit) > limit) continue;
        const std::uint64_t index = static_cast<std::uint64_t>(lit) - 1;
        auto& cell = cells[index / k];
        if (cell == 0) cell = static_cast<Color>(index % k) + 1;
    }
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i] == 0) throw Error("model leaves cell " + std::to_string(i) + " without a color");
    return ColoringFamily::dense(n, k, std::move(cells));
}

}  // namespace rainbow
