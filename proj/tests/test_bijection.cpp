#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace setpart;
using testsupport::code_of;
using testsupport::insertion_partitions;
using testsupport::part;

TEST_CASE("classification") {
    CHECK(classify(part("1 3 7|2 6|4 5 8")).label() == PartitionClass::both);
    CHECK(classify(part("1")).label() == PartitionClass::both);
    CHECK(classify(part("1 2|3")).label() == PartitionClass::neither);
    CHECK(classify(part("1 2 3")).label() == PartitionClass::atomic_only);
    CHECK(classify(part("1|2 3")).label() == PartitionClass::unsplitable_only);
    CHECK(code_of([] { classify(part("2|3")); }) == errc::not_based_at_one);

    CHECK(std::string(to_label(PartitionClass::both)) == "BOTH");
    CHECK(std::string(to_label(PartitionClass::atomic_only)) == "ATOMIC_ONLY");
    CHECK(std::string(to_label(PartitionClass::unsplitable_only)) == "UNSPLITABLE_ONLY");
    CHECK(std::string(to_label(PartitionClass::neither)) == "NEITHER");
}

TEST_CASE("phi on the paper's worked example") {
    const BijectionResult result = phi(part("1 3 5 6|2 7 9|4 8 10"));
    CHECK(result.image.to_text() == "1 3 5 6|2|4|7 9|8 10");
    CHECK(result.witness.i == 5);
    CHECK(result.witness.j == 7);
    CHECK(result.witness.to_text() == "i=5 j=7");
}

TEST_CASE("phi hand-traced small cases") {
    const BijectionResult two = phi(part("1 2"));
    CHECK(two.image == part("1|2"));
    CHECK(two.witness.i == 2);
    CHECK(two.witness.j == 2);

    const BijectionResult three = phi(part("1 3|2"));
    CHECK(three.image == part("1|2|3"));
    CHECK(three.witness.i == 3);
    CHECK(three.witness.j == 3);
}

TEST_CASE("phi rejects inputs outside A_n \\ US_n") {
    CHECK(code_of([] { phi(part("1|2 3")); }) == errc::domain_error);       // UNSPLITABLE_ONLY
    CHECK(code_of([] { phi(part("1")); }) == errc::domain_error);           // BOTH
    CHECK(code_of([] { phi(part("1 2|3")); }) == errc::domain_error);       // NEITHER
    CHECK(code_of([] { phi(part("2|3")); }) == errc::not_based_at_one);
}

TEST_CASE("psi on the paper's worked example") {
    const BijectionResult result = psi(part("1 3 5 6|2|4|7 9|8 10"));
    CHECK(result.image.to_text() == "1 3 5 6|2 7 9|4 8 10");
    CHECK(result.witness.j == 7);
    CHECK(result.witness.r == 4);
    CHECK(result.witness.i == 5);
    CHECK(result.witness.q == 2);
    CHECK(result.witness.case_taken == 2);
    CHECK(result.witness.to_text() == "j=7 r=4 i=5 q=2 case=2");
}

TEST_CASE("psi hand-traced small cases take case 1") {
    const BijectionResult merge = psi(part("1|2 3"));
    CHECK(merge.image == part("1 2 3"));
    CHECK(merge.witness.j == 2);
    CHECK(merge.witness.case_taken == 1);
    CHECK_FALSE(merge.witness.i.has_value());
    CHECK(merge.witness.to_text() == "j=2 r=2 case=1");

    const BijectionResult singletons = psi(part("1|2|3"));
    CHECK(singletons.image == part("1 3|2"));
    CHECK(singletons.witness.j == 3);
    CHECK(singletons.witness.case_taken == 1);
}

TEST_CASE("psi rejects inputs outside US_n \\ A_n") {
    CHECK(code_of([] { psi(part("1 2 3")); }) == errc::domain_error);   // ATOMIC_ONLY
    CHECK(code_of([] { psi(part("1")); }) == errc::domain_error);       // BOTH
    CHECK(code_of([] { psi(part("1 2|3")); }) == errc::domain_error);   // NEITHER
}

TEST_CASE("phi and psi are mutually inverse bijections at small n") {
    for (int n = 1; n <= 7; ++n) {
        std::vector<std::string> images;
        std::vector<std::string> unsplitable_only;
        for (const SetPartition& p : insertion_partitions(n)) {
            switch (classify(p).label()) {
                case PartitionClass::atomic_only: {
                    const BijectionResult fwd = phi(p);
                    CHECK(classify(fwd.image).label() == PartitionClass::unsplitable_only);
                    CHECK(psi(fwd.image).image == p);

                    // the paper's bounds on the chosen indices
                    const int i = fwd.witness.i.value();
                    const int j = fwd.witness.j;
                    CHECK(2 <= i);
                    CHECK(i <= j);
                    CHECK(j <= n);
                    images.push_back(fwd.image.to_text());
                    break;
                }
                case PartitionClass::unsplitable_only: {
                    const BijectionResult back = psi(p);
                    CHECK(classify(back.image).label() == PartitionClass::atomic_only);
                    CHECK(phi(back.image).image == p);

                    const BijectionWitness& w = back.witness;
                    REQUIRE(w.r.has_value());
                    if (w.case_taken == 2) {
                        REQUIRE(w.q.has_value());
                        CHECK(*w.q < *w.r);
                        const Block& first = p.blocks().front();
                        CHECK(std::find(first.begin(), first.end(), w.i.value()) != first.end());
                    }
                    unsplitable_only.push_back(p.to_text());
                    break;
                }
                default:
                    break;
            }
        }
        std::sort(images.begin(), images.end());
        std::sort(unsplitable_only.begin(), unsplitable_only.end());
        CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());  // injective
        CHECK(images == unsplitable_only);                                        // onto
    }
}
