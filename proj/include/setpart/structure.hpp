#pragma once

#include <algorithm>
#include <cassert>
#include <vector>

#include "setpart/partition.hpp"

namespace setpart {

// R(p) together with the 1-based index r of its first block. r is the
// largest j such that the union of blocks j..k is a suffix of the ordered
// ground set x_1 < ... < x_n; j = 1 always qualifies, so r exists. prefix
// holds blocks 1..r-1 and is the empty sentinel when r = 1.
struct SuffixDecomposition {
    int r_index;
    SetPartition suffix;  // R(p)
    SetPartition prefix;  // blocks before R(p), possibly empty
};

// A cut position m: p equals the split product of p restricted to [1, m]
// and the rest shifted down to [1, n-m].
struct SplitWitness {
    int cut;

    friend bool operator==(const SplitWitness&, const SplitWitness&) = default;
};

inline SuffixDecomposition suffix_decomposition(const SetPartition& p) {
    detail::require_nonempty(p);
    const auto& blocks = p.blocks();
    const auto& ground = p.ground();
    const int k = p.block_count();
    // Block minima increase with the index, so the union of blocks j..k is
    // a suffix of the ground set exactly when min(B_j) >= the element that
    // starts a suffix of that size.
    std::size_t suffix_size = 0;
    for (int j = k; j >= 1; --j) {
        suffix_size += blocks[static_cast<std::size_t>(j - 1)].size();
        if (blocks[static_cast<std::size_t>(j - 1)].front() >=
            ground[ground.size() - suffix_size]) {
            SuffixDecomposition out;
            out.r_index = j;
            out.suffix = SetPartition::from_canonical(
                {blocks.begin() + (j - 1), blocks.end()});
            if (j > 1)
                out.prefix = SetPartition::from_canonical({blocks.begin(), blocks.begin() + (j - 1)});
            return out;
        }
    }
    fail(errc::empty_partition, "unreachable: r = 1 always qualifies");
}

// p is atomic iff it is not a slash product of two nonempty partitions,
// which happens exactly when p = R(p).
inline bool is_atomic(const SetPartition& p) {
    detail::require_initial(p);
    return suffix_decomposition(p).r_index == 1;
}

// Independent route for the same predicate, straight from the definition:
// p is a slash product iff some prefix [1, m] is a union of blocks.
inline bool atomic_oracle(const SetPartition& p) {
    detail::require_initial(p);
    const int n = p.element_count();
    for (int m = 1; m < n; ++m) {
        bool cut = true;
        for (const Block& b : p.blocks())
            if (b.front() <= m && b.back() > m) { cut = false; break; }
        if (cut) return false;
    }
    return true;
}

namespace detail {

inline bool splits_at(const SetPartition& p, int m) {
    const int n = p.element_count();
    SetPartition head = restrict(p, Interval{1, m});
    SetPartition tail = shift(restrict(p, Interval{m + 1, n}), -m);
    return split_product(head, tail) == p;
}

}  // namespace detail

// All cuts m with p = p_[1,m] ∘ (p_[m+1,n] - m), in increasing order. Any
// such cut satisfies m+1 ∈ B_1, because the first block of a split product
// contains m+1; candidates are therefore drawn from B_1 directly.
inline std::vector<SplitWitness> split_witnesses(const SetPartition& p) {
    detail::require_initial(p);
    std::vector<SplitWitness> cuts;
    const Block& first = p.blocks().front();
    for (std::size_t t = 1; t < first.size(); ++t) {
        const int m = first[t] - 1;
        if (detail::splits_at(p, m)) cuts.push_back(SplitWitness{m});
    }
    return cuts;
}

// Oracle route: scan every m in [1, n-1] rather than only the candidates
// drawn from B_1. Kept for cross-checking split_witnesses.
inline std::vector<SplitWitness> split_witnesses_all_cuts(const SetPartition& p) {
    detail::require_initial(p);
    std::vector<SplitWitness> cuts;
    for (int m = 1; m < p.element_count(); ++m)
        if (detail::splits_at(p, m)) cuts.push_back(SplitWitness{m});
    return cuts;
}

inline bool is_unsplitable(const SetPartition& p) {
    return split_witnesses(p).empty();
}

// The unique sequence of atomic partitions whose left-to-right slash fold
// equals p. Cut points are forced: each is the minimal prefix [1, m] that
// is a union of blocks.
inline std::vector<SetPartition> atomic_factorization(const SetPartition& p) {
    detail::require_initial(p);
    std::vector<SetPartition> factors;
    SetPartition rest = p;
    while (true) {
        const int n = rest.element_count();
        // Walk blocks in canonical order, tracking how far a prefix union
        // reaches; a factor ends where the union is exactly [1, m], m < n.
        int covered = 0;
        int reach = 0;
        int cut = 0;
        for (const Block& b : rest.blocks()) {
            covered += static_cast<int>(b.size());
            reach = std::max(reach, b.back());
            if (covered == reach && reach < n) { cut = reach; break; }
        }
        if (cut == 0) {
            factors.push_back(std::move(rest));
            return factors;
        }
        factors.push_back(restrict(rest, Interval{1, cut}));
        rest = shift(restrict(rest, Interval{cut + 1, n}), -cut);
    }
}

}  // namespace setpart
