#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace rainbow {

/// Disjoint same-key tuples extracted greedily from a ground set of items.
struct PeelSystem {
    std::size_t tuple_size = 0;
    std::size_t ground = 0;   // items considered (truncated to a multiple of tuple_size)
    std::size_t covered = 0;  // items inside some tuple
    std::vector<std::vector<std::uint32_t>> tuples;
    std::vector<std::int32_t> tuple_of;  // per item: index into tuples, or -1

    double coverage() const { return ground == 0 ? 0.0 : static_cast<double>(covered) / ground; }
};

/// Repeatedly takes tuple_size items from the largest remaining key class
/// (smaller key on ties, items in index order) until no class has enough left.
/// The ground set is cut to its first floor(|items|/tuple_size)*tuple_size items.
PeelSystem peel(std::span<const std::uint64_t> keys, std::size_t tuple_size);

/// Indices of the largest key class; ties go to the smaller key. Items keep index order.
std::vector<std::uint32_t> largest_class(std::span<const std::uint64_t> keys);

struct PairVote {
    std::uint32_t first = 0, second = 0;  // candidate indices, first < second
    std::uint64_t votes = 0;
};

struct TripleVote {
    std::uint32_t first = 0, second = 0, third = 0;
    std::uint64_t votes = 0;
};

/// Tallies, over voters, every candidate pair (triple) sharing a key, and
/// returns the most voted one, lexicographically first on ties. Keys for
/// voter v are keys[v*candidates + i].
class PairBallot {
public:
    explicit PairBallot(std::size_t candidates);
    void vote(std::span<const std::uint64_t> keys);
    PairVote best() const;
    std::uint64_t total() const { return total_; }

private:
    std::size_t width_;
    std::vector<std::uint64_t> tally_;
    std::vector<std::uint32_t> order_;
    std::uint64_t total_ = 0;
};

class TripleBallot {
public:
    explicit TripleBallot(std::size_t candidates);
    void vote(std::span<const std::uint64_t> keys);
    TripleVote best() const;
    std::uint64_t total() const { return total_; }

private:
    std::size_t width_;
    std::vector<std::uint32_t> tally_;
    std::vector<std::uint32_t> order_;
    std::uint64_t total_ = 0;
};

}  // namespace rainbow
