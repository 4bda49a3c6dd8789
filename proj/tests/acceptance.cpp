// Acceptance suite: one pass/fail line per criterion, exact integer
// comparisons throughout. Exits nonzero if any criterion fails.

#include <algorithm>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include <setpart/setpart.hpp>

using namespace setpart;

namespace {

int failures = 0;

void report(int number, const std::string& label, bool ok) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", number, label.c_str());
    if (!ok) ++failures;
}

SetPartition part(const std::string& text) { return SetPartition::from_text(text); }

bool worked_example() {
    const SetPartition pi = part("1 3 5 6|2 7 9|4 8 10");
    const BijectionResult fwd = phi(pi);
    bool ok = fwd.image.to_text() == "1 3 5 6|2|4|7 9|8 10";
    ok = ok && fwd.witness.i == 5 && fwd.witness.j == 7;

    const BijectionResult back = psi(fwd.image);
    ok = ok && back.image == pi;
    ok = ok && back.witness.case_taken == 2 && back.witness.q == 2 && back.witness.r == 4;
    return ok;
}

bool inventory_n3() {
    std::set<std::string> atomic, unsplitable;
    partition_stream stream(3);
    while (auto p = stream.next()) {
        const Classification cls = classify(*p);
        if (cls.atomic) atomic.insert(p->to_text());
        if (cls.unsplitable) unsplitable.insert(p->to_text());
    }
    return atomic == std::set<std::string>{"1 3|2", "1 2 3"} &&
           unsplitable == std::set<std::string>{"1|2 3", "1|2|3"};
}

bool restriction_examples() {
    const SetPartition pi = part("1 3 5 6|2 7 9|4 8 10");
    const SetPartition restricted = restrict(pi, Interval{5, 10});
    if (restricted.to_text() != "5 6|7 9|8 10") return false;
    const SuffixDecomposition sd = suffix_decomposition(restricted);
    return sd.suffix.to_text() == "7 9|8 10" && sd.r_index == 2;
}

bool coexistence_example() {
    return classify(part("1 3 7|2 6|4 5 8")).label() == PartitionClass::both;
}

bool theorem_at_desk_scale() {
    bool ok = true;
    for (int n = 1; n <= 10; ++n) {
        const VerifyReport report = verify_bijection(n);
        if (!report.ok()) {
            std::printf("        n=%d counterexample: %s\n", n, report.counterexample.c_str());
            ok = false;
            continue;
        }
        std::printf("        n=%-2d |A_n\\US_n| = |US_n\\A_n| = %llu\n", n,
                    static_cast<unsigned long long>(report.count_atomic_only));
    }
    return ok;
}

bool oracle_equivalence() {
    for (int n = 1; n <= 9; ++n) {
        partition_stream stream(n);
        while (auto p = stream.next()) {
            if (is_atomic(*p) != atomic_oracle(*p)) return false;
            if (split_witnesses(*p) != split_witnesses_all_cuts(*p)) return false;
        }
    }
    return true;
}

bool atomic_count_sequence() {
    const std::vector<std::uint64_t> expected{1, 1, 2, 6, 22, 92, 426, 2146};
    for (int n = 1; n <= 8; ++n) {
        const CensusRow row = census(n);
        if (row.count_both + row.count_atomic_only != expected[static_cast<std::size_t>(n - 1)])
            return false;
    }
    return true;
}

bool structural_properties() {
    for (int n = 1; n <= 12; ++n) {
        std::uint64_t count = 0;
        partition_stream stream(n);
        while (stream.next()) ++count;
        if (count != bell(n)) return false;
    }

    for (int n = 1; n <= 8; ++n) {
        partition_stream stream(n);
        while (auto p = stream.next()) {
            const auto factors = atomic_factorization(*p);
            SetPartition refolded = factors.front();
            for (std::size_t t = 1; t < factors.size(); ++t)
                refolded = slash_product(refolded, factors[t]);
            if (refolded != *p) return false;
            if (!std::all_of(factors.begin(), factors.end(),
                             [](const SetPartition& f) { return is_atomic(f); }))
                return false;
        }
    }

    const CensusRow reference = census(7, CensusOptions{1, 1});
    for (const CensusOptions& options :
         {CensusOptions{2, 2}, CensusOptions{4, 4}, CensusOptions{8, 3}, CensusOptions{3, 6}}) {
        if (census(7, options) != reference) return false;
    }
    return true;
}

}  // namespace

int main() {
    report(1, "paper worked example: phi witness (i=5, j=7), psi case 2 (q=2, r=4)",
           worked_example());
    report(2, "n=3 inventory of atomic and unsplitable partitions", inventory_n3());
    report(3, "paper restriction and R() examples", restriction_examples());
    report(4, "coexistence example classifies as BOTH", coexistence_example());
    report(5, "bijection verified exhaustively for n <= 10", theorem_at_desk_scale());
    report(6, "predicates agree with their oracles for n <= 9", oracle_equivalence());
    report(7, "atomic counts for n = 1..8 equal 1,1,2,6,22,92,426,2146",
           atomic_count_sequence());
    report(8, "stream length, factorization round-trip, shard invariance",
           structural_properties());

    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all 8 criteria passed\n");
    return 0;
}
