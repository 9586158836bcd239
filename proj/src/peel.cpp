#include "rainbow/peel.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace rainbow {

namespace {

// Index order sorted by (key, index).
std::vector<std::uint32_t> sorted_by_key(std::span<const std::uint64_t> keys, std::size_t count) {
    std::vector<std::uint32_t> order(count);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return keys[x] < keys[y]; });
    return order;
}

}  // namespace

PeelSystem peel(std::span<const std::uint64_t> keys, std::size_t tuple_size) {
    if (tuple_size < 2) throw std::invalid_argument("peeling needs tuples of at least 2 items");
    PeelSystem out;
    out.tuple_size = tuple_size;
    out.ground = keys.size() - keys.size() % tuple_size;
    out.tuple_of.assign(keys.size(), -1);

    const auto order = sorted_by_key(keys, out.ground);
    struct Class {
        std::size_t begin, end;  // remaining items order[begin, end)
    };
    std::vector<Class> classes;
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && keys[order[j]] == keys[order[i]]) ++j;
        classes.push_back({i, j});
        i = j;
    }
    // Largest remaining first; classes are already in key order, so the lower index wins ties.
    auto lower = [&](std::size_t x, std::size_t y) {
        const auto sx = classes[x].end - classes[x].begin, sy = classes[y].end - classes[y].begin;
        return sx != sy ? sx < sy : x > y;
    };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(lower)> heap(lower);
    for (std::size_t c = 0; c < classes.size(); ++c) heap.push(c);
    while (!heap.empty()) {
        const auto c = heap.top();
        heap.pop();
        auto& cls = classes[c];
        if (cls.end - cls.begin < tuple_size) break;
        std::vector<std::uint32_t> tuple(order.begin() + static_cast<std::ptrdiff_t>(cls.begin),
                                         order.begin() + static_cast<std::ptrdiff_t>(cls.begin + tuple_size));
        cls.begin += tuple_size;
        for (auto item : tuple) out.tuple_of[item] = static_cast<std::int32_t>(out.tuples.size());
        out.tuples.push_back(std::move(tuple));
        out.covered += tuple_size;
        heap.push(c);
    }
    return out;
}

std::vector<std::uint32_t> largest_class(std::span<const std::uint64_t> keys) {
    const auto order = sorted_by_key(keys, keys.size());
    std::size_t best_begin = 0, best_size = 0;
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && keys[order[j]] == keys[order[i]]) ++j;
        if (j - i > best_size) best_begin = i, best_size = j - i;
        i = j;
    }
    return {order.begin() + static_cast<std::ptrdiff_t>(best_begin),
            order.begin() + static_cast<std::ptrdiff_t>(best_begin + best_size)};
}

PairBallot::PairBallot(std::size_t candidates) : width_(candidates), tally_(candidates * candidates, 0) {}

void PairBallot::vote(std::span<const std::uint64_t> keys) {
    order_ = sorted_by_key(keys, width_);
    for (std::size_t i = 0; i < width_;) {
        std::size_t j = i;
        while (j < width_ && keys[order_[j]] == keys[order_[i]]) ++j;
        for (std::size_t x = i; x < j; ++x)
            for (std::size_t y = x + 1; y < j; ++y) {
                const auto lo = std::min(order_[x], order_[y]), hi = std::max(order_[x], order_[y]);
                ++tally_[lo * width_ + hi];
                ++total_;
            }
        i = j;
    }
}

PairVote PairBallot::best() const {
    PairVote best;
    for (std::uint32_t i = 0; i < width_; ++i)
        for (std::uint32_t j = i + 1; j < width_; ++j)
            if (tally_[i * width_ + j] > best.votes) best = {i, j, tally_[i * width_ + j]};
    if (best.votes == 0 && width_ >= 2) best = {0, 1, 0};
    return best;
}

TripleBallot::TripleBallot(std::size_t candidates)
    : width_(candidates), tally_(candidates * candidates * candidates, 0) {}

void TripleBallot::vote(std::span<const std::uint64_t> keys) {
    order_ = sorted_by_key(keys, width_);
    for (std::size_t i = 0; i < width_;) {
        std::size_t j = i;
        while (j < width_ && keys[order_[j]] == keys[order_[i]]) ++j;
        // order_ is index-sorted inside a class (stable sort), so x<y<z gives increasing indices.
        for (std::size_t x = i; x < j; ++x)
            for (std::size_t y = x + 1; y < j; ++y)
                for (std::size_t z = y + 1; z < j; ++z) {
                    ++tally_[(order_[x] * width_ + order_[y]) * width_ + order_[z]];
                    ++total_;
                }
        i = j;
    }
}

TripleVote TripleBallot::best() const {
    TripleVote best;
    for (std::uint32_t i = 0; i < width_; ++i)
        for (std::uint32_t j = i + 1; j < width_; ++j)
            for (std::uint32_t l = j + 1; l < width_; ++l) {
                const auto v = tally_[(i * width_ + j) * width_ + l];
                if (v > best.votes) best = {i, j, l, v};
            }
    if (best.votes == 0 && width_ >= 3) best = {0, 1, 2, 0};
    return best;
}

}  // namespace rainbow
