#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "setpart/bijection.hpp"
#include "setpart/partition.hpp"
#include "setpart/structure.hpp"

namespace setpart {

// Guard against runaway enumeration; Bell(12) = 4213597 keeps a full sweep
// at desk scale. The CLI lets PARTITION_MAX_N override it.
inline constexpr int kDefaultMaxN = 12;

namespace detail {

inline void check_cap(int n, int cap) {
    if (n < 1) fail(errc::non_positive, "n must be >= 1");
    if (n > cap)
        fail(errc::cap_exceeded, "n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

// Restricted growth words a_1..a_n: a_1 = 0 and a_{t+1} <= 1 + max so far.
// Element t+1 goes into block a_t, numbering blocks by first appearance,
// which is exactly the canonical order by block minima.
inline SetPartition partition_from_rgs(const std::vector<int>& word) {
    std::vector<Block> blocks(1 + *std::max_element(word.begin(), word.end()));
    for (std::size_t t = 0; t < word.size(); ++t)
        blocks[static_cast<std::size_t>(word[t])].push_back(static_cast<int>(t) + 1);
    return SetPartition::from_canonical(std::move(blocks));
}

// Calls fn(word) for every valid completion of word[0..pos-1], in
// lexicographic order. running_max is the maximum over the fixed prefix.
template <class Fn>
void extend_rgs(std::vector<int>& word, std::size_t pos, int running_max, Fn&& fn) {
    if (pos == word.size()) {
        fn(word);
        return;
    }
    for (int a = 0; a <= running_max + 1; ++a) {
        word[pos] = a;
        extend_rgs(word, pos + 1, std::max(running_max, a), fn);
    }
}

}  // namespace detail

// Bell numbers via the triangle recurrence; bell(0) = 1.
inline std::uint64_t bell(int n, int cap = kDefaultMaxN) {
    if (n < 0) fail(errc::non_positive, "bell is defined for n >= 0");
    if (n > cap)
        fail(errc::cap_exceeded, "n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    std::vector<std::uint64_t> row{1};
    for (int i = 0; i < n; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (std::uint64_t value : row) next.push_back(next.back() + value);
        row = std::move(next);
    }
    return row.front();
}

// Streams every partition of [1, n] exactly once, in lexicographic order of
// restricted growth words. Nothing is materialized beyond the current word.
class partition_stream {
public:
    explicit partition_stream(int n, int cap = kDefaultMaxN) {
        detail::check_cap(n, cap);
        word_.assign(static_cast<std::size_t>(n), 0);
        prefix_max_.assign(static_cast<std::size_t>(n), 0);
    }

    std::optional<SetPartition> next() {
        if (done_) return std::nullopt;
        SetPartition out = detail::partition_from_rgs(word_);
        advance();
        return out;
    }

private:
    void advance() {
        // Rightmost position that can still grow: a_t < 1 + max(prefix).
        for (std::size_t t = word_.size(); t-- > 1;) {
            if (word_[t] <= prefix_max_[t - 1]) {
                ++word_[t];
                prefix_max_[t] = std::max(prefix_max_[t - 1], word_[t]);
                for (std::size_t u = t + 1; u < word_.size(); ++u) {
                    word_[u] = 0;
                    prefix_max_[u] = prefix_max_[u - 1];
                }
                return;
            }
        }
        done_ = true;
    }

    std::vector<int> word_;
    std::vector<int> prefix_max_;
    bool done_ = false;
};

struct CensusRow {
    int n = 0;
    std::uint64_t total = 0;  // Bell(n)
    std::uint64_t count_both = 0;
    std::uint64_t count_atomic_only = 0;
    std::uint64_t count_unsplitable_only = 0;
    std::uint64_t count_neither = 0;
    bool bijection_ok = false;

    friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

struct CensusOptions {
    int threads = 0;      // 0: hardware concurrency
    int split_depth = 0;  // 0: automatic; RGS prefix length defining shards
};

// Exhaustive verification of the bijection over all of Pi_n: phi maps
// ATOMIC_ONLY into UNSPLITABLE_ONLY, injectively and onto, psi inverts it
// both ways, and the class counts balance. The first failure is recorded
// verbatim.
struct VerifyReport {
    int n = 0;
    std::uint64_t total = 0;
    std::uint64_t count_both = 0;
    std::uint64_t count_atomic_only = 0;
    std::uint64_t count_unsplitable_only = 0;
    std::uint64_t count_neither = 0;
    bool phi_maps_into_complement = true;  // phi lands in US_n \ A_n
    bool psi_maps_into_complement = true;  // psi lands in A_n \ US_n
    bool phi_injective = true;
    bool phi_surjective = true;
    bool psi_phi_is_identity = true;
    bool phi_psi_is_identity = true;
    bool counts_match = true;
    std::string counterexample;  // empty when every check passed

    bool ok() const {
        return phi_maps_into_complement && psi_maps_into_complement && phi_injective &&
               phi_surjective && psi_phi_is_identity && phi_psi_is_identity && counts_match;
    }
};

inline VerifyReport verify_bijection(int n, int cap = kDefaultMaxN) {
    detail::check_cap(n, cap);
    VerifyReport report;
    report.n = n;

    std::unordered_set<std::string> images;
    std::unordered_set<std::string> unsplitable_only;
    auto note = [&report](bool& flag, const std::string& text) {
        flag = false;
        if (report.counterexample.empty()) report.counterexample = text;
    };

    partition_stream stream(n, cap);
    while (auto p = stream.next()) {
        ++report.total;
        switch (classify(*p).label()) {
            case PartitionClass::both:
                ++report.count_both;
                break;
            case PartitionClass::neither:
                ++report.count_neither;
                break;
            case PartitionClass::atomic_only: {
                ++report.count_atomic_only;
                const BijectionResult fwd = phi(*p);
                if (classify(fwd.image).label() != PartitionClass::unsplitable_only)
                    note(report.phi_maps_into_complement,
                         "phi(" + p->to_text() + ") = " + fwd.image.to_text() +
                             " is not UNSPLITABLE_ONLY");
                else if (psi(fwd.image).image != *p)
                    note(report.psi_phi_is_identity,
                         "psi(phi(" + p->to_text() + ")) = " +
                             psi(fwd.image).image.to_text() + " != input");
                if (!images.insert(fwd.image.to_text()).second)
                    note(report.phi_injective,
                         "phi image " + fwd.image.to_text() + " repeats");
                break;
            }
            case PartitionClass::unsplitable_only: {
                ++report.count_unsplitable_only;
                unsplitable_only.insert(p->to_text());
                const BijectionResult back = psi(*p);
                if (classify(back.image).label() != PartitionClass::atomic_only)
                    note(report.psi_maps_into_complement,
                         "psi(" + p->to_text() + ") = " + back.image.to_text() +
                             " is not ATOMIC_ONLY");
                else if (phi(back.image).image != *p)
                    note(report.phi_psi_is_identity,
                         "phi(psi(" + p->to_text() + ")) = " +
                             phi(back.image).image.to_text() + " != input");
                break;
            }
        }
    }

    if (images.size() != report.count_atomic_only)
        note(report.phi_injective, "phi image count " + std::to_string(images.size()) +
                                       " != |A_n \\ US_n| = " +
                                       std::to_string(report.count_atomic_only));
    for (const std::string& s : unsplitable_only) {
        if (!images.count(s)) {
            note(report.phi_surjective, s + " has no phi preimage");
            break;
        }
    }
    if (images.size() != unsplitable_only.size())
        note(report.phi_surjective, "phi image set and US_n \\ A_n differ in size");
    if (report.count_both + report.count_atomic_only !=
        report.count_both + report.count_unsplitable_only)
        note(report.counts_match, "|A_n| != |US_n| at n = " + std::to_string(n));
    return report;
}

namespace detail {

struct ClassCounts {
    std::uint64_t both = 0;
    std::uint64_t atomic_only = 0;
    std::uint64_t unsplitable_only = 0;
    std::uint64_t neither = 0;
};

inline void tally(const SetPartition& p, ClassCounts& counts) {
    switch (classify(p).label()) {
        case PartitionClass::both:             ++counts.both; break;
        case PartitionClass::atomic_only:      ++counts.atomic_only; break;
        case PartitionClass::unsplitable_only: ++counts.unsplitable_only; break;
        case PartitionClass::neither:          ++counts.neither; break;
    }
}

// Valid RGS prefixes of the given length paired with their running maxima;
// each prefix is one contiguous lexicographic range of Pi_n.
inline std::vector<std::pair<std::vector<int>, int>> rgs_prefixes(int n, int depth) {
    std::vector<std::pair<std::vector<int>, int>> shards;
    std::vector<int> word(static_cast<std::size_t>(std::min(n, depth)), 0);
    if (word.empty()) return shards;
    struct Rec {
        std::vector<std::pair<std::vector<int>, int>>& out;
        std::vector<int>& word;
        void walk(std::size_t pos, int running_max) {
            if (pos == word.size()) {
                out.emplace_back(word, running_max);
                return;
            }
            for (int a = 0; a <= running_max + 1; ++a) {
                word[pos] = a;
                walk(pos + 1, std::max(running_max, a));
            }
        }
    };
    Rec{shards, word}.walk(1, 0);  // a_1 is fixed at 0
    return shards;
}

}  // namespace detail

// Classifies every partition of [n]. The RGS space is cut into contiguous
// shards processed by a small thread pool; per-shard counts are combined by
// addition, so the row is identical for any thread count or split depth.
inline CensusRow census(int n, CensusOptions options = {}, int cap = kDefaultMaxN) {
    detail::check_cap(n, cap);
    int threads = options.threads > 0
                      ? options.threads
                      : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    int depth = options.split_depth > 0 ? options.split_depth : (threads == 1 ? 1 : 4);
    depth = std::min(depth, n);

    const auto shards = detail::rgs_prefixes(n, depth);
    std::vector<detail::ClassCounts> partial(shards.size());
    auto run_shard = [n, &shards, &partial](std::size_t index) {
        const auto& [prefix, running_max] = shards[index];
        std::vector<int> word(static_cast<std::size_t>(n), 0);
        std::copy(prefix.begin(), prefix.end(), word.begin());
        detail::extend_rgs(word, prefix.size(), running_max, [&](const std::vector<int>& w) {
            detail::tally(detail::partition_from_rgs(w), partial[index]);
        });
    };

    if (threads <= 1 || shards.size() <= 1) {
        for (std::size_t s = 0; s < shards.size(); ++s) run_shard(s);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> cursor{0};
        for (int t = 0; t < std::min<int>(threads, static_cast<int>(shards.size())); ++t)
            pool.emplace_back([&] {
                for (std::size_t s = cursor.fetch_add(1); s < shards.size();
                     s = cursor.fetch_add(1))
                    run_shard(s);
            });
        for (std::thread& worker : pool) worker.join();
    }

    CensusRow row;
    row.n = n;
    for (const detail::ClassCounts& counts : partial) {
        row.count_both += counts.both;
        row.count_atomic_only += counts.atomic_only;
        row.count_unsplitable_only += counts.unsplitable_only;
        row.count_neither += counts.neither;
    }
    row.total = row.count_both + row.count_atomic_only + row.count_unsplitable_only +
                row.count_neither;
    row.bijection_ok = verify_bijection(n, cap).ok();
    return row;
}

}  // namespace setpart
