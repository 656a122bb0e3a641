#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "twistchar/errors.hpp"
#include "twistchar/partition.hpp"
#include "twistchar/tensor_oracle.hpp"

using namespace twistchar;
using symgroup::Partition;

namespace {

// Independent count of partitions: Euler's pentagonal-number recurrence.
std::vector<Int> partition_counts_pentagonal(unsigned long max_m) {
    std::vector<Int> p(max_m + 1, 0);
    p[0] = 1;
    for (unsigned long m = 1; m <= max_m; ++m) {
        Int total = 0;
        for (long k = 1;; ++k) {
            const long g1 = k * (3 * k - 1) / 2;
            const long g2 = k * (3 * k + 1) / 2;
            if (g1 > static_cast<long>(m) && g2 > static_cast<long>(m)) break;
            const int sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= static_cast<long>(m)) total += sign * p[m - g1];
            if (g2 <= static_cast<long>(m)) total += sign * p[m - g2];
        }
        p[m] = total;
    }
    return p;
}

// Independent enumeration for small m: count non-increasing positive
// sequences summing to m, largest part at most `limit`.
long count_partitions_brute(long m, long limit) {
    if (m == 0) return 1;
    long count = 0;
    for (long part = std::min(m, limit); part >= 1; --part)
        count += count_partitions_brute(m - part, part);
    return count;
}

// Brute-force centralizer order: elements of the full symmetric group
// commuting with the canonical representative.
Int centralizer_brute(const Partition& lambda) {
    const auto rep = oracle::canonical_representative(lambda);
    Int count = 0;
    for (const auto& pi : oracle::all_permutations(lambda.total()))
        if (oracle::compose(pi, rep) == oracle::compose(rep, pi)) ++count;
    return count;
}

}  // namespace

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({2, 3}), type_error);
    CHECK_THROWS_AS(Partition({3, 0}), type_error);
    CHECK(Partition(std::vector<unsigned long>{}).total() == 0);
    CHECK(Partition({3, 2}).total() == 5);
}

TEST_CASE("partitions of 0 is the empty partition") {
    const auto all = symgroup::partitions(0);
    REQUIRE(all.size() == 1);
    CHECK(all[0].empty());
}

TEST_CASE("partition enumeration matches brute-force counts") {
    CHECK(symgroup::partitions(5).size() == count_partitions_brute(5, 5));
    CHECK(symgroup::partitions(10).size() == count_partitions_brute(10, 10));
    CHECK(symgroup::partitions(5).size() == 7);
    CHECK(symgroup::partitions(10).size() == 42);
}

TEST_CASE("partition counts match the pentagonal recurrence up to 30") {
    const auto expected = partition_counts_pentagonal(30);
    for (unsigned long m = 0; m <= 30; ++m)
        CHECK(Int(symgroup::partitions(m).size()) == expected[m]);
}

TEST_CASE("partitions are reverse-lexicographic and distinct") {
    for (unsigned long m = 0; m <= 8; ++m) {
        const auto all = symgroup::partitions(m);
        std::set<std::vector<unsigned long>> seen;
        for (const auto& p : all) {
            CHECK(p.total() == m);
            CHECK(seen.insert(p.parts()).second);
        }
        for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
    }
    const auto of3 = symgroup::partitions(3);
    REQUIRE(of3.size() == 3);
    CHECK(of3[0].parts() == std::vector<unsigned long>{3});
    CHECK(of3[1].parts() == std::vector<unsigned long>{2, 1});
    CHECK(of3[2].parts() == std::vector<unsigned long>{1, 1, 1});
}

TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS(symgroup::partitions(31), enumeration_limit_error);
    CHECK_THROWS_AS(symgroup::partitions(100), enumeration_limit_error);
    CHECK(symgroup::partitions(31, 40).size() == 6842);
}

TEST_CASE("cycle counts and num_cycles") {
    using Counts = std::map<unsigned long, unsigned long>;
    CHECK(symgroup::cycle_counts(Partition({3, 2})) == Counts{{3, 1}, {2, 1}});
    CHECK(symgroup::cycle_counts(Partition({1, 1, 1})) == Counts{{1, 3}});
    CHECK(symgroup::cycle_counts(Partition({2, 2, 1})) == Counts{{2, 2}, {1, 1}});
    CHECK(symgroup::num_cycles(Partition({3, 2})) == 2);
    CHECK(symgroup::num_cycles(Partition({1, 1, 1, 1})) == 4);
    CHECK(symgroup::num_cycles(Partition({7})) == 1);
    CHECK(symgroup::num_cycles(Partition(std::vector<unsigned long>{})) == 0);
}

TEST_CASE("centralizer orders: formula vs brute force") {
    CHECK(symgroup::centralizer_order(Partition({3, 2})) == 6);
    CHECK(symgroup::centralizer_order(Partition({1, 1})) == 2);
    CHECK(symgroup::centralizer_order(Partition({2, 2})) == 8);
    CHECK(centralizer_brute(Partition({3, 2})) == 6);
    CHECK(centralizer_brute(Partition({2, 2})) == 8);
    for (unsigned long m = 0; m <= 6; ++m)
        for (const auto& lambda : symgroup::partitions(m))
            CHECK(symgroup::centralizer_order(lambda) == centralizer_brute(lambda));
}

TEST_CASE("class sizes") {
    CHECK(symgroup::class_size(Partition({3})) == 2);
    CHECK(symgroup::class_size(Partition({1, 1, 1})) == 1);
    CHECK(symgroup::class_size(Partition({2, 1})) == 3);
}

TEST_CASE("class sizes sum to the group order") {
    for (unsigned long m = 0; m <= 8; ++m) {
        Int total = 0;
        for (const auto& lambda : symgroup::partitions(m))
            total += symgroup::class_size(lambda);
        CHECK(total == factorial(m));
    }
}
