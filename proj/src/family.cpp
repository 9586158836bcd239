#include "rainbow/family.hpp"

#include <string>

namespace rainbow {

ColoringFamily::ColoringFamily(Kind kind, std::size_t n, Color k, std::uint64_t seed)
    : kind_(kind), n_(n), k_(k), seed_(seed), edges_(complete_edge_count(n)) {
    if (n < 2) throw std::invalid_argument("a coloring family needs at least 2 vertices");
    if (k < 1) throw std::invalid_argument("a coloring family needs at least 1 color");
}

ColoringFamily ColoringFamily::dense(std::size_t n, Color k, std::vector<Color> colors) {
    ColoringFamily family(Kind::dense, n, k, 0);
    if (colors.size() != n * family.edges_)
        throw std::invalid_argument("dense family expects " + std::to_string(n * family.edges_) +
                                    " cells, got " + std::to_string(colors.size()));
    for (Color c : colors)
        if (c < 1 || c > k)
            throw std::out_of_range("color " + std::to_string(c) + " outside [1, " +
                                    std::to_string(k) + "]");
    family.cells_ = std::move(colors);
    return family;
}

ColoringFamily ColoringFamily::uniform(std::size_t n, Color k, std::uint64_t seed) {
    return ColoringFamily(Kind::uniform, n, k, seed);
}

ColoringFamily ColoringFamily::monochromatic(std::size_t n, Color k) {
    return ColoringFamily(Kind::monochromatic, n, k, 0);
}

ColoringFamily ColoringFamily::injective(std::size_t n, Color k) {
    ColoringFamily family(Kind::injective, n, k, 0);
    if (k < family.edges_)
        throw std::invalid_argument("injective family on " + std::to_string(n) +
                                    " vertices needs at least " + std::to_string(family.edges_) +
                                    " colors");
    return family;
}

ColoringFamily ColoringFamily::rotated_sum(std::size_t n, Color k) {
    return ColoringFamily(Kind::rotated_sum, n, k, 0);
}

ColoringFamily ColoringFamily::materialize() const {
    if (kind_ == Kind::dense) return *this;
    std::vector<Color> colors;
    colors.reserve(n_ * edges_);
    for (Vertex v = 0; v < n_; ++v)
        for (Vertex a = 0; a < n_; ++a)
            for (Vertex b = a + 1; b < n_; ++b) colors.push_back(color(v, a, b));
    return dense(n_, k_, std::move(colors));
}

ColoringFamily ColoringFamily::with_palette(Color k) const {
    if (k < k_) throw std::invalid_argument("palette can only grow");
    // Procedural kinds whose colors depend on k are frozen first.
    ColoringFamily copy =
        (kind_ == Kind::uniform || kind_ == Kind::rotated_sum) ? materialize() : *this;
    copy.k_ = k;
    return copy;
}

bool operator==(const ColoringFamily& x, const ColoringFamily& y) {
    if (x.n_ != y.n_ || x.k_ != y.k_) return false;
    for (Vertex v = 0; v < x.n_; ++v)
        for (Vertex a = 0; a < x.n_; ++a)
            for (Vertex b = a + 1; b < x.n_; ++b)
                if (x.color(v, a, b) != y.color(v, a, b)) return false;
    return true;
}

}  // namespace rainbow
