#include "rainbow/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace rainbow {

std::string to_string(const Edge& e) {
    return std::to_string(e.a) + "-" + std::to_string(e.b);
}

PatternGraph::PatternGraph(std::size_t num_vertices, std::vector<Edge> edges, std::string name)
    : num_vertices_(num_vertices), edges_(std::move(edges)), adjacency_(num_vertices),
      name_(std::move(name)) {
    std::set<Edge> seen;
    for (auto& e : edges_) {
        e = make_edge(e.a, e.b);
        if (e.b >= num_vertices_)
            throw std::invalid_argument("pattern edge " + to_string(e) + " out of range");
        if (!seen.insert(e).second)
            throw std::invalid_argument("duplicate pattern edge " + to_string(e));
        adjacency_[e.a].push_back(e.b);
        adjacency_[e.b].push_back(e.a);
    }
}

bool PatternGraph::has_edge(Vertex u, Vertex v) const {
    const auto& adj = adjacency_[u];
    return std::find(adj.begin(), adj.end(), v) != adj.end();
}

std::size_t PatternGraph::max_degree() const {
    std::size_t best = 0;
    for (const auto& adj : adjacency_) best = std::max(best, adj.size());
    return best;
}

std::size_t PatternGraph::isolated_count() const {
    return static_cast<std::size_t>(
        std::count_if(adjacency_.begin(), adjacency_.end(), [](const auto& a) { return a.empty(); }));
}

PatternGraph PatternGraph::renamed(std::string name) const {
    return PatternGraph(num_vertices_, edges_, std::move(name));
}

namespace {

void require_positive(std::size_t value, const char* what) {
    if (value == 0) throw std::invalid_argument(std::string(what) + " must be positive");
}

std::string term_name(char letter, std::size_t size) {
    return std::string(1, letter) + std::to_string(size);
}

}  // namespace

PatternGraph path(std::size_t length) {
    require_positive(length, "path length");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < length; ++i) edges.push_back({i, i + 1});
    return PatternGraph(length + 1, std::move(edges), term_name('P', length));
}

PatternGraph star(std::size_t leaves) {
    require_positive(leaves, "star size");
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return PatternGraph(leaves + 1, std::move(edges), term_name('S', leaves));
}

PatternGraph matching(std::size_t size) {
    require_positive(size, "matching size");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < size; ++i) edges.push_back({2 * i, 2 * i + 1});
    return PatternGraph(2 * size, std::move(edges), term_name('I', size));
}

PatternGraph cycle(std::size_t length) {
    if (length < 3) throw std::invalid_argument("cycle length must be at least 3");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < length; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, static_cast<Vertex>(length - 1)});
    return PatternGraph(length, std::move(edges), term_name('C', length));
}

PatternGraph clique(std::size_t order) {
    require_positive(order, "clique order");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < order; ++i)
        for (Vertex j = i + 1; j < order; ++j) edges.push_back({i, j});
    return PatternGraph(order, std::move(edges), term_name('K', order));
}

PatternGraph complete_bipartite(std::size_t s, std::size_t t) {
    require_positive(s, "bipartite side");
    require_positive(t, "bipartite side");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < s; ++i)
        for (Vertex j = 0; j < t; ++j) edges.push_back({i, static_cast<Vertex>(s + j)});
    return PatternGraph(s + t, std::move(edges),
                        "K" + std::to_string(s) + "," + std::to_string(t));
}

PatternGraph isolated_vertices(std::size_t count) {
    require_positive(count, "isolated vertex count");
    return PatternGraph(count, {}, count == 1 ? "K1" : std::to_string(count) + "K1");
}

PatternGraph disjoint_union(const PatternGraph& first, const PatternGraph& second) {
    auto edges = first.edges();
    const auto shift = static_cast<Vertex>(first.num_vertices());
    for (const auto& e : second.edges()) edges.push_back({e.a + shift, e.b + shift});
    std::string name;
    if (!first.name().empty() && !second.name().empty())
        name = first.name() + "+" + second.name();
    return PatternGraph(first.num_vertices() + second.num_vertices(), std::move(edges),
                        std::move(name));
}

namespace {

std::size_t parse_number(std::string_view text, std::size_t& pos) {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("expected a number in pattern tag '" + std::string(text) + "'");
    std::size_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > 100000) throw std::invalid_argument("pattern size too large");
        ++pos;
    }
    return value;
}

PatternGraph parse_term(std::string_view term) {
    std::size_t pos = 0;
    std::size_t multiplicity = 1;
    if (!term.empty() && std::isdigit(static_cast<unsigned char>(term[0])))
        multiplicity = parse_number(term, pos);
    require_positive(multiplicity, "multiplicity");
    if (pos >= term.size()) throw std::invalid_argument("empty pattern term");
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(term[pos++])));
    const std::size_t size = parse_number(term, pos);
    std::optional<std::size_t> second;
    if (pos < term.size() && term[pos] == ',') {
        ++pos;
        second = parse_number(term, pos);
    }
    if (pos != term.size())
        throw std::invalid_argument("trailing characters in pattern term '" + std::string(term) + "'");

    PatternGraph one;
    switch (letter) {
        case 'P': one = path(size); break;
        case 'S': one = star(size); break;
        case 'I': one = matching(size); break;
        case 'C': one = cycle(size); break;
        case 'K':
            if (second) {
                one = complete_bipartite(size, *second);
            } else if (size == 1) {
                return isolated_vertices(multiplicity);
            } else {
                one = clique(size);
            }
            break;
        default:
            throw std::invalid_argument("unknown pattern letter '" + std::string(1, letter) + "'");
    }
    PatternGraph result = one;
    for (std::size_t i = 1; i < multiplicity; ++i) result = disjoint_union(result, one);
    if (multiplicity > 1) result = result.renamed(std::string(term));
    return result;
}

}  // namespace

PatternGraph parse_pattern(std::string_view tag) {
    std::string cleaned;
    for (char c : tag)
        if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
    if (cleaned.empty()) throw std::invalid_argument("empty pattern tag");

    std::optional<PatternGraph> result;
    std::size_t start = 0;
    while (start <= cleaned.size()) {
        const auto end = cleaned.find('+', start);
        const auto term =
            std::string_view(cleaned).substr(start, end == std::string::npos ? end : end - start);
        auto piece = parse_term(term);
        result = result ? disjoint_union(*result, piece) : piece;
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return result->renamed(cleaned);
}

namespace {

// Backtracking embedding search; needle vertices are placed in an order that
// keeps each new vertex adjacent to already-placed ones where possible.
class EmbeddingSearch {
public:
    EmbeddingSearch(const PatternGraph& haystack, const PatternGraph& needle)
        : hay_(haystack), needle_(needle), map_(needle.num_vertices(), kUnset),
          used_(haystack.num_vertices(), false) {
        order_ = placement_order();
    }

    // Visits each injective edge-preserving map; the visitor returns false to stop.
    template <class Visitor>
    void run(Visitor&& visit) {
        if (needle_.num_vertices() > hay_.num_vertices()) return;
        if (needle_.num_edges() > hay_.num_edges()) return;
        stop_ = false;
        extend(0, visit);
    }

    const std::vector<Vertex>& map() const { return map_; }

private:
    static constexpr Vertex kUnset = ~Vertex{0};

    std::vector<Vertex> placement_order() const {
        const std::size_t v = needle_.num_vertices();
        std::vector<Vertex> order;
        std::vector<bool> placed(v, false);
        while (order.size() < v) {
            // Next: the unplaced vertex with the most placed neighbours, then highest degree.
            Vertex best = kUnset;
            std::size_t best_links = 0, best_degree = 0;
            for (Vertex u = 0; u < v; ++u) {
                if (placed[u]) continue;
                std::size_t links = 0;
                for (Vertex w : needle_.neighbors(u)) links += placed[w] ? 1 : 0;
                const std::size_t deg = needle_.degree(u);
                if (best == kUnset || links > best_links ||
                    (links == best_links && deg > best_degree)) {
                    best = u;
                    best_links = links;
                    best_degree = deg;
                }
            }
            placed[best] = true;
            order.push_back(best);
        }
        return order;
    }

    template <class Visitor>
    void extend(std::size_t depth, Visitor& visit) {
        if (stop_) return;
        if (depth == order_.size()) {
            if (!visit(map_)) stop_ = true;
            return;
        }
        const Vertex u = order_[depth];
        for (Vertex h = 0; h < hay_.num_vertices() && !stop_; ++h) {
            if (used_[h] || hay_.degree(h) < needle_.degree(u)) continue;
            bool ok = true;
            for (Vertex w : needle_.neighbors(u)) {
                if (map_[w] != kUnset && !hay_.has_edge(h, map_[w])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map_[u] = h;
            used_[h] = true;
            extend(depth + 1, visit);
            used_[h] = false;
            map_[u] = kUnset;
        }
    }

    const PatternGraph& hay_;
    const PatternGraph& needle_;
    std::vector<Vertex> map_;
    std::vector<bool> used_;
    std::vector<Vertex> order_;
    bool stop_ = false;
};

std::vector<std::size_t> degree_sequence(const PatternGraph& g) {
    std::vector<std::size_t> degrees;
    for (Vertex v = 0; v < g.num_vertices(); ++v) degrees.push_back(g.degree(v));
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

}  // namespace

std::optional<std::vector<Vertex>> subgraph_contains(const PatternGraph& haystack,
                                                     const PatternGraph& needle) {
    std::optional<std::vector<Vertex>> found;
    EmbeddingSearch search(haystack, needle);
    search.run([&](const std::vector<Vertex>& map) {
        found = map;
        return false;
    });
    return found;
}

bool isomorphic(const PatternGraph& x, const PatternGraph& y) {
    if (x.num_vertices() != y.num_vertices() || x.num_edges() != y.num_edges()) return false;
    if (degree_sequence(x) != degree_sequence(y)) return false;
    return subgraph_contains(x, y).has_value();
}

bool tag_matches_structure(const PatternGraph& pattern) {
    if (pattern.name().empty()) return true;
    try {
        return isomorphic(parse_pattern(pattern.name()), pattern);
    } catch (const std::invalid_argument&) {
        return false;
    }
}

std::uint64_t automorphism_count(const PatternGraph& pattern) {
    // Isolated vertices permute freely; search only over the rest.
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < pattern.num_vertices(); ++v)
        if (pattern.degree(v) > 0) keep.push_back(v);
    std::vector<Vertex> relabel(pattern.num_vertices(), 0);
    for (Vertex i = 0; i < keep.size(); ++i) relabel[keep[i]] = i;
    std::vector<Edge> edges;
    for (const auto& e : pattern.edges()) edges.push_back({relabel[e.a], relabel[e.b]});
    const PatternGraph core(keep.size(), std::move(edges));

    std::uint64_t count = 0;
    EmbeddingSearch search(core, core);
    search.run([&](const std::vector<Vertex>&) {
        ++count;
        return true;
    });
    for (std::uint64_t i = 2; i <= pattern.isolated_count(); ++i) count *= i;
    return count;
}

}  // namespace rainbow
