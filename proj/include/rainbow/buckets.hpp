#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "rainbow/core.hpp"

namespace rainbow {

// Counts equal-color pairs/triples in a batch of colors. Small palettes use a
// counting array; large ones (injective families) fall back to sorting.
class BucketCounter {
public:
    explicit BucketCounter(Color k) : dense_(k <= kDenseLimit) {
        if (dense_) counts_.assign(static_cast<std::size_t>(k) + 1, 0);
    }

    std::uint64_t pairs(std::span<const Color> colors) { return tally(colors, 2); }
    std::uint64_t triples(std::span<const Color> colors) { return tally(colors, 3); }

private:
    static constexpr Color kDenseLimit = 1u << 20;

    static std::uint64_t choose(std::uint64_t m, int r) {
        return r == 2 ? m * (m - 1) / 2 : m * (m - 1) * (m - 2) / 6;
    }

    std::uint64_t tally(std::span<const Color> colors, int r) {
        std::uint64_t total = 0;
        if (dense_) {
            for (Color c : colors) ++counts_[c];
            for (Color c : colors) {
                if (counts_[c] != 0) total += choose(counts_[c], r);
                counts_[c] = 0;
            }
            return total;
        }
        scratch_.assign(colors.begin(), colors.end());
        std::sort(scratch_.begin(), scratch_.end());
        for (std::size_t i = 0; i < scratch_.size();) {
            std::size_t j = i;
            while (j < scratch_.size() && scratch_[j] == scratch_[i]) ++j;
            total += choose(j - i, r);
            i = j;
        }
        return total;
    }

    bool dense_;
    std::vector<std::uint32_t> counts_;
    std::vector<Color> scratch_;
};

}  // namespace rainbow
