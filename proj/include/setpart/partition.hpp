#pragma once

#include <algorithm>
#include <cassert>
#include <charconv>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "setpart/error.hpp"

namespace setpart {

// A block is a nonempty, strictly increasing sequence of positive integers.
using Block = std::vector<int>;

// Contiguous integer range [lo, hi].
struct Interval {
    int lo;
    int hi;

    bool contains(int x) const { return lo <= x && x <= hi; }
};

// A set partition in canonical form: blocks ordered by increasing minimum
// element, elements within a block increasing. The ground set is the union
// of the blocks and may be any finite set of positive integers; restrictions
// produce gapped ground sets and nothing here relabels.
//
// Values are immutable after construction. A default-constructed partition
// is the empty sentinel used by enumeration edge cases; every public
// operation rejects it.
class SetPartition {
public:
    SetPartition() = default;

    // Canonicalizes and validates an arbitrary family of blocks.
    static SetPartition make(std::vector<Block> blocks) {
        if (blocks.empty()) fail(errc::empty_partition, "a partition needs at least one block");
        for (Block& b : blocks) {
            if (b.empty()) fail(errc::empty_block, "blocks must be nonempty");
            std::sort(b.begin(), b.end());
            if (b.front() < 1) fail(errc::non_positive, "elements must be >= 1");
            if (std::adjacent_find(b.begin(), b.end()) != b.end())
                fail(errc::duplicate_element, "element repeated within a block");
        }
        std::sort(blocks.begin(), blocks.end(),
                  [](const Block& a, const Block& b) { return a.front() < b.front(); });
        SetPartition p;
        p.blocks_ = std::move(blocks);
        p.ground_ = union_of(p.blocks_);
        for (std::size_t t = 1; t < p.ground_.size(); ++t)
            if (p.ground_[t] == p.ground_[t - 1])
                fail(errc::duplicate_element, "blocks overlap");
        return p;
    }

    // Text format: blocks separated by '|', elements by single spaces,
    // e.g. "1 3 5 6|2 7 9|4 8 10". Parsing accepts non-canonical input.
    static SetPartition from_text(std::string_view text) {
        if (text.find_first_not_of(' ') == std::string_view::npos)
            fail(errc::empty_partition, "no partition text");
        std::vector<Block> blocks;
        std::size_t pos = 0;
        while (true) {
            std::size_t bar = text.find('|', pos);
            std::string_view field =
                text.substr(pos, bar == std::string_view::npos ? bar : bar - pos);
            blocks.push_back(parse_block(field));
            if (bar == std::string_view::npos) break;
            pos = bar + 1;
        }
        return make(std::move(blocks));
    }

    // Emits the canonical text form, byte-exact.
    std::string to_text() const {
        std::string out;
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            if (b) out += '|';
            for (std::size_t t = 0; t < blocks_[b].size(); ++t) {
                if (t) out += ' ';
                out += std::to_string(blocks_[b][t]);
            }
        }
        return out;
    }

    const std::vector<Block>& blocks() const { return blocks_; }
    const std::vector<int>& ground() const { return ground_; }

    int block_count() const { return static_cast<int>(blocks_.size()); }
    int element_count() const { return static_cast<int>(ground_.size()); }
    bool empty() const { return blocks_.empty(); }

    // True when the ground set is the initial interval [1, element_count()].
    bool ground_is_initial() const {
        return !ground_.empty() && ground_.front() == 1 &&
               ground_.back() == element_count();
    }

    friend bool operator==(const SetPartition&, const SetPartition&) = default;

    // Trusted constructor for operations whose output is canonical by
    // construction (asserted, never silently re-sorted).
    static SetPartition from_canonical(std::vector<Block> blocks) {
        SetPartition p;
        p.blocks_ = std::move(blocks);
        p.ground_ = union_of(p.blocks_);
        assert(p.check_canonical());
        return p;
    }

private:
    static std::vector<int> union_of(const std::vector<Block>& blocks) {
        std::vector<int> all;
        for (const Block& b : blocks) all.insert(all.end(), b.begin(), b.end());
        std::sort(all.begin(), all.end());
        return all;
    }

    static Block parse_block(std::string_view field) {
        Block b;
        const char* it = field.data();
        const char* end = it + field.size();
        while (it != end) {
            if (*it == ' ') { ++it; continue; }
            int value = 0;
            auto [next, ec] = std::from_chars(it, end, value);
            if (ec != std::errc{} || (next != end && *next != ' '))
                fail(errc::bad_text, "expected an integer near '" + std::string(it, end) + "'");
            b.push_back(value);
            it = next;
        }
        if (b.empty()) fail(errc::empty_block, "empty block in partition text");
        return b;
    }

    bool check_canonical() const {
        for (const Block& b : blocks_) {
            if (b.empty() || b.front() < 1) return false;
            if (std::adjacent_find(b.begin(), b.end(), std::greater_equal<int>()) != b.end())
                return false;
        }
        for (std::size_t t = 1; t < blocks_.size(); ++t)
            if (blocks_[t - 1].front() >= blocks_[t].front()) return false;
        for (std::size_t t = 1; t < ground_.size(); ++t)
            if (ground_[t] == ground_[t - 1]) return false;
        return true;
    }

    std::vector<Block> blocks_;
    std::vector<int> ground_;  // sorted union of the blocks
};

namespace detail {

inline void require_nonempty(const SetPartition& p) {
    if (p.empty()) fail(errc::empty_partition, "operation rejects the empty partition");
}

inline void require_initial(const SetPartition& p) {
    require_nonempty(p);
    if (!p.ground_is_initial())
        fail(errc::not_based_at_one, "expected a partition of [1, n], got ground set starting at " +
                                         std::to_string(p.ground().front()));
}

template <class Keep>
SetPartition restrict_by(const SetPartition& p, Keep&& keep) {
    std::vector<Block> traces;
    for (const Block& b : p.blocks()) {
        Block t;
        for (int x : b)
            if (keep(x)) t.push_back(x);
        if (!t.empty()) traces.push_back(std::move(t));
    }
    if (traces.empty()) fail(errc::empty_result, "restriction misses the ground set entirely");
    // Traces keep each block's internal order but block minima may reorder.
    std::sort(traces.begin(), traces.end(),
              [](const Block& a, const Block& b) { return a.front() < b.front(); });
    return SetPartition::from_canonical(std::move(traces));
}

}  // namespace detail

// Restriction p_S: drop every element outside s; empty blocks disappear.
inline SetPartition restrict(const SetPartition& p, const Interval& s) {
    detail::require_nonempty(p);
    return detail::restrict_by(p, [&](int x) { return s.contains(x); });
}

inline SetPartition restrict(const SetPartition& p, const std::vector<int>& s) {
    detail::require_nonempty(p);
    std::vector<int> sorted(s);
    std::sort(sorted.begin(), sorted.end());
    return detail::restrict_by(p, [&](int x) {
        return std::binary_search(sorted.begin(), sorted.end(), x);
    });
}

// Adds c to every element; block structure and order are unchanged.
inline SetPartition shift(const SetPartition& p, int c) {
    detail::require_nonempty(p);
    if (p.ground().front() + c < 1)
        fail(errc::non_positive, "shift by " + std::to_string(c) + " drops below 1");
    std::vector<Block> blocks = p.blocks();
    for (Block& b : blocks)
        for (int& x : b) x += c;
    return SetPartition::from_canonical(std::move(blocks));
}

// Slash product p|q: blocks of p followed by blocks of q shifted up by
// |ground(p)|. Blocks never merge, so the result has k + l blocks.
inline SetPartition slash_product(const SetPartition& p, const SetPartition& q) {
    detail::require_initial(p);
    detail::require_initial(q);
    const int m = p.element_count();
    std::vector<Block> blocks = p.blocks();
    for (const Block& c : q.blocks()) {
        Block moved(c);
        for (int& x : moved) x += m;
        blocks.push_back(std::move(moved));
    }
    return SetPartition::from_canonical(std::move(blocks));
}

// Split product p∘q: shift q up by m = |ground(p)| and merge its t-th block
// into the t-th block of p; whichever side has more blocks passes its tail
// through unchanged. The resulting block order is canonical as written,
// which from_canonical asserts.
inline SetPartition split_product(const SetPartition& p, const SetPartition& q) {
    detail::require_initial(p);
    detail::require_initial(q);
    const int m = p.element_count();
    const int k = p.block_count();
    const int l = q.block_count();
    std::vector<Block> blocks;
    blocks.reserve(static_cast<std::size_t>(std::max(k, l)));
    for (int t = 0; t < std::min(k, l); ++t) {
        Block merged = p.blocks()[t];
        for (int x : q.blocks()[t]) merged.push_back(x + m);
        blocks.push_back(std::move(merged));
    }
    for (int t = k; t < l; ++t) {
        Block moved = q.blocks()[t];
        for (int& x : moved) x += m;
        blocks.push_back(std::move(moved));
    }
    for (int t = l; t < k; ++t) blocks.push_back(p.blocks()[t]);
    return SetPartition::from_canonical(std::move(blocks));
}

}  // namespace setpart
