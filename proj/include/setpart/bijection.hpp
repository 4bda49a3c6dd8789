#pragma once

#include <cassert>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "setpart/partition.hpp"
#include "setpart/structure.hpp"

namespace setpart {

enum class PartitionClass {
    both,              // atomic and unsplitable
    atomic_only,       // atomic, splitable  (domain of phi)
    unsplitable_only,  // unsplitable, not atomic  (domain of psi)
    neither,
};

inline const char* to_label(PartitionClass c) {
    switch (c) {
        case PartitionClass::both:             return "BOTH";
        case PartitionClass::atomic_only:      return "ATOMIC_ONLY";
        case PartitionClass::unsplitable_only: return "UNSPLITABLE_ONLY";
        case PartitionClass::neither:          return "NEITHER";
    }
    return "?";
}

struct Classification {
    bool atomic;
    bool unsplitable;

    PartitionClass label() const {
        if (atomic) return unsplitable ? PartitionClass::both : PartitionClass::atomic_only;
        return unsplitable ? PartitionClass::unsplitable_only : PartitionClass::neither;
    }
};

inline Classification classify(const SetPartition& p) {
    detail::require_initial(p);
    return Classification{is_atomic(p), is_unsplitable(p)};
}

// Indices chosen while applying phi or psi, kept for traceability. phi
// records (i, j); psi records (j, r) plus (i, q) when its second case fires.
struct BijectionWitness {
    enum class Map { phi, psi };

    Map direction;
    std::optional<int> i;
    int j = 0;
    std::optional<int> r;
    std::optional<int> q;
    std::optional<int> case_taken;

    // Key=value rendering used by the CLI's verbose mode, e.g. "i=5 j=7".
    std::string to_text() const {
        std::string out;
        auto put = [&out](const char* key, int value) {
            if (!out.empty()) out += ' ';
            out += key;
            out += '=';
            out += std::to_string(value);
        };
        if (direction == Map::phi) {
            put("i", *i);
            put("j", j);
        } else {
            put("j", j);
            put("r", *r);
            if (i) put("i", *i);
            if (q) put("q", *q);
            put("case", *case_taken);
        }
        return out;
    }
};

struct BijectionResult {
    SetPartition image;
    BijectionWitness witness;
};

namespace detail {

// Smallest i in B_1 \ {min} with p_[1,c] = p_[1,i-1] ∘ (p_[i,c] - i + 1),
// where [1, c] is the ground set of p. Callers guarantee such an i exists.
inline int smallest_split_element(const SetPartition& p) {
    const Block& first = p.blocks().front();
    for (std::size_t t = 1; t < first.size(); ++t)
        if (splits_at(p, first[t] - 1)) return first[t];
    throw std::logic_error("smallest_split_element: no split point in a splitable partition");
}

}  // namespace detail

// The map phi : A_n\US_n -> US_n\A_n.
//   Step 1  i = smallest element of B_1 splitting p at the cut i-1.
//   Step 2  j = smallest element of the underlying set of R(p_[i,n]).
//   Step 3  phi(p) = p_[j-1] | (p_[j,n] - j + 1).
inline BijectionResult phi(const SetPartition& p) {
    const Classification cls = classify(p);
    if (cls.label() != PartitionClass::atomic_only)
        fail(errc::domain_error,
             std::string("phi needs an ATOMIC_ONLY partition, got ") + to_label(cls.label()));

    const int n = p.element_count();
    const int i = detail::smallest_split_element(p);
    const SetPartition tail = restrict(p, Interval{i, n});
    const SetPartition suffix = suffix_decomposition(tail).suffix;
    const int j = suffix.ground().front();
    assert(2 <= i && i <= j && j <= n);
    assert(suffix == restrict(p, Interval{j, n}));

    BijectionResult out;
    out.image = slash_product(restrict(p, Interval{1, j - 1}),
                              shift(restrict(p, Interval{j, n}), -(j - 1)));
    out.witness = BijectionWitness{BijectionWitness::Map::phi, i, j, {}, {}, {}};
    return out;
}

// The inverse map psi : US_n\A_n -> A_n\US_n.
//   Step 1  j = smallest element of the underlying set of R(s).
//   Step 2  with B_r the first block of R(s):
//     Case 1  s_[j-1] unsplitable: psi(s) = s_[j-1] ∘ (s_[j,n] - j + 1).
//     Case 2  otherwise i = smallest element of B_1 splitting s_[j-1] at
//             the cut i-1, q = min{l : B_l ⊆ [i-1]}, and blocks B_{q+t},
//             B_{r+t} merge pairwise until one side runs out.
inline BijectionResult psi(const SetPartition& s) {
    const Classification cls = classify(s);
    if (cls.label() != PartitionClass::unsplitable_only)
        fail(errc::domain_error,
             std::string("psi needs an UNSPLITABLE_ONLY partition, got ") + to_label(cls.label()));

    const int n = s.element_count();
    const int k = s.block_count();
    const SuffixDecomposition sd = suffix_decomposition(s);
    const int r = sd.r_index;  // >= 2: s is not atomic
    const int j = sd.suffix.ground().front();
    assert(j >= 2);
    const SetPartition& head = sd.prefix;  // = s_[j-1] = {B_1, ..., B_{r-1}}
    assert(head == restrict(s, Interval{1, j - 1}));

    BijectionResult out;
    if (is_unsplitable(head)) {
        out.image = split_product(head, shift(restrict(s, Interval{j, n}), -(j - 1)));
        out.witness = BijectionWitness{BijectionWitness::Map::psi, {}, j, r, {}, 1};
        return out;
    }

    const int i = detail::smallest_split_element(head);
    int q = 0;
    for (int l = 1; l <= k; ++l)
        if (s.blocks()[static_cast<std::size_t>(l - 1)].back() <= i - 1) { q = l; break; }
    if (q == 0)
        throw std::logic_error("psi: no block inside [i-1]; input cannot have been unsplitable");
    assert(q < r);

    const auto& blocks = s.blocks();
    auto block = [&blocks](int idx1) -> const Block& {
        return blocks[static_cast<std::size_t>(idx1 - 1)];
    };
    std::vector<Block> merged;
    for (int l = 1; l < q; ++l) merged.push_back(block(l));
    const int pairs = std::min(r - q, k - r + 1);
    for (int t = 0; t < pairs; ++t) {
        Block b = block(q + t);
        const Block& partner = block(r + t);
        b.insert(b.end(), partner.begin(), partner.end());
        std::sort(b.begin(), b.end());
        merged.push_back(std::move(b));
    }
    if (2 * r - q - 1 <= k) {
        for (int l = 2 * r - q; l <= k; ++l) merged.push_back(block(l));
    } else {
        for (int l = q + k - r + 1; l <= r - 1; ++l) merged.push_back(block(l));
    }
    out.image = SetPartition::from_canonical(std::move(merged));
    out.witness = BijectionWitness{BijectionWitness::Map::psi, i, j, r, q, 2};
    return out;
}

}  // namespace setpart
