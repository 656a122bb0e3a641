#include <random>

#include "doctest.h"
#include "twistchar/abelian.hpp"
#include "twistchar/graded_dim.hpp"
#include "twistchar/twist.hpp"

using namespace twistchar;
using graded::FiniteAbelianGroup;
using graded::GradedDim;
using graded::IntGradedDim;
using ring::SignedUnit;

namespace {

IntGradedDim random_graded(std::mt19937& rng) {
    std::uniform_int_distribution<long> degree(-4, 4);
    std::uniform_int_distribution<long> value(-3, 3);
    std::uniform_int_distribution<int> size(0, 4);
    std::map<long, Int> entries;
    const int n = size(rng);
    for (int i = 0; i < n; ++i) entries[degree(rng)] = value(rng);
    return IntGradedDim(entries);
}

}  // namespace

TEST_CASE("day convolution basics") {
    const IntGradedDim unit = IntGradedDim::unit();
    const IntGradedDim y(std::map<long, Int>{{0, 1}, {1, 2}});
    CHECK(day_convolve(unit, y) == y);

    const IntGradedDim z(std::map<long, Int>{{1, 3}});
    CHECK(day_convolve(y, z) == IntGradedDim(std::map<long, Int>{{1, 3}, {2, 6}}));

    // shifted units compose additively in the degree
    CHECK(day_convolve(z, z).at(2) == 9);
    const IntGradedDim line1 = IntGradedDim::line(1, 1);
    CHECK(day_convolve(line1, line1) == IntGradedDim::line(2, 1));
}

TEST_CASE("day convolution drops cancelled entries") {
    const IntGradedDim a(std::map<long, Int>{{0, 1}, {1, -1}});
    const IntGradedDim b(std::map<long, Int>{{0, 1}, {1, 1}});
    CHECK(day_convolve(a, b) == IntGradedDim(std::map<long, Int>{{0, 1}, {2, -1}}));
}

TEST_CASE("day convolution is commutative, associative, unital") {
    std::mt19937 rng(11);
    const IntGradedDim unit = IntGradedDim::unit();
    for (int trial = 0; trial < 100; ++trial) {
        const auto x = random_graded(rng), y = random_graded(rng), z = random_graded(rng);
        CHECK(day_convolve(x, y) == day_convolve(y, x));
        CHECK(day_convolve(day_convolve(x, y), z) == day_convolve(x, day_convolve(y, z)));
        CHECK(day_convolve(x, unit) == x);
    }
}

TEST_CASE("invertibility: singleton unit support only") {
    CHECK(is_invertible(IntGradedDim::line(3, 1)) == 3);
    CHECK(is_invertible(IntGradedDim::line(-2, -1)) == -2);
    CHECK(!is_invertible(IntGradedDim(std::map<long, Int>{{0, 1}, {1, 1}})));
    CHECK(!is_invertible(IntGradedDim::line(0, 2)));
    CHECK(!is_invertible(IntGradedDim{}));

    const GradedDim<SignedUnit> parity_line(
        std::map<long, SignedUnit>{{2, SignedUnit::generator()}});
    CHECK(is_invertible(parity_line) == 2);
}

TEST_CASE("product of invertibles is invertible with degrees adding") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<long> degree(-5, 5);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
        const long d1 = degree(rng), d2 = degree(rng);
        const auto x = IntGradedDim::line(d1, sign(rng) ? 1 : -1);
        const auto y = IntGradedDim::line(d2, sign(rng) ? 1 : -1);
        const auto product = day_convolve(x, y);
        REQUIRE(is_invertible(product).has_value());
        CHECK(*is_invertible(product) == d1 + d2);
    }
}

TEST_CASE("twist descriptors") {
    const auto trivial = graded::IntTwist::trivial();
    const auto koszul = graded::IntTwist::koszul();
    CHECK(dim_shift(trivial, Int(5)) == 5);
    CHECK(dim_shift(koszul, Int(2)) == -2);
    CHECK_THROWS_AS(graded::IntTwist::unit(2), type_error);

    const auto parity = graded::Twist<SignedUnit>::unit(SignedUnit::generator());
    CHECK(dim_shift(parity, SignedUnit(1)) == SignedUnit::generator());

    // shifting twice is the identity
    for (const auto& tw : {trivial, koszul, graded::IntTwist::unit(-1)})
        CHECK(dim_shift(tw, dim_shift(tw, Int(7))) == 7);
}

TEST_CASE("count of twisted graded structures") {
    CHECK(count_twists(FiniteAbelianGroup({2})) == 2);
    CHECK(count_twists(FiniteAbelianGroup({3})) == 1);
    CHECK(count_twists(FiniteAbelianGroup({9, 5})) == 1);
    CHECK(count_twists(FiniteAbelianGroup({4, 3})) == 2);
    CHECK(count_twists(FiniteAbelianGroup(std::vector<Int>{})) == 1);
}

TEST_CASE("count_twists counts 2-torsion and is multiplicative") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> order(1, 12);
    std::uniform_int_distribution<int> size(0, 3);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Int> o1, o2;
        for (int i = size(rng); i > 0; --i) o1.push_back(order(rng));
        for (int i = size(rng); i > 0; --i) o2.push_back(order(rng));
        const FiniteAbelianGroup g1(o1), g2(o2);

        std::vector<Int> both = o1;
        both.insert(both.end(), o2.begin(), o2.end());
        CHECK(count_twists(FiniteAbelianGroup(both)) == count_twists(g1) * count_twists(g2));

        // enumerate elements x with 2x = 0 directly
        Int torsion = 1;
        for (const auto& d : o1) {
            long count = 0;
            for (long x = 0; x < d.get_si(); ++x)
                if ((2 * x) % d.get_si() == 0) ++count;
            torsion *= count;
        }
        CHECK(torsion == count_twists(g1));
    }
}
