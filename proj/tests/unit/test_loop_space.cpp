#include <vector>

#include "doctest.h"
#include "twistchar/errors.hpp"
#include "twistchar/loop_space.hpp"

using namespace twistchar;
using symgroup::LoopComponentCyclic;

namespace {

using Coords = std::vector<unsigned long>;

unsigned long find_valuation(const std::vector<LoopComponentCyclic>& comps, const Coords& c) {
    for (const auto& comp : comps)
        if (comp.coords == c) return comp.valuation;
    FAIL("component not found");
    return 0;
}

}  // namespace

TEST_CASE("two components of Z/2") {
    const auto comps = symgroup::cyclic_loop_components(2, 1, 1);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].coords == Coords{0});
    CHECK(comps[0].valuation == 1);
    CHECK(comps[1].coords == Coords{1});
    CHECK(comps[1].valuation == 0);
}

TEST_CASE("components of Z/4") {
    const auto comps = symgroup::cyclic_loop_components(2, 2, 1);
    REQUIRE(comps.size() == 4);
    CHECK(find_valuation(comps, {0}) == 2);
    CHECK(find_valuation(comps, {1}) == 0);
    CHECK(find_valuation(comps, {2}) == 1);
    CHECK(find_valuation(comps, {3}) == 0);
}

TEST_CASE("components of (Z/2)^2") {
    const auto comps = symgroup::cyclic_loop_components(2, 1, 2);
    REQUIRE(comps.size() == 4);
    for (const auto& comp : comps) {
        const bool zero = comp.coords == Coords{0, 0};
        CHECK(comp.valuation == (zero ? 1 : 0));
    }
}

TEST_CASE("depth-0 group (k = 0) has a single component") {
    const auto comps = symgroup::cyclic_loop_components(2, 0, 3);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].coords == Coords{0, 0, 0});
    CHECK(comps[0].valuation == 0);
}

TEST_CASE("coords factor as p^valuation times a primitive or zero vector") {
    for (unsigned long p : {2ul, 3ul}) {
        for (unsigned long k : {0ul, 1ul, 2ul, 3ul}) {
            for (unsigned long j : {1ul, 2ul}) {
                for (const auto& comp : symgroup::cyclic_loop_components(p, k, j)) {
                    unsigned long pv = 1;
                    for (unsigned long i = 0; i < comp.valuation; ++i) pv *= p;
                    bool all_zero = true, primitive_quotient = false;
                    for (unsigned long c : comp.coords) {
                        if (c != 0) all_zero = false;
                        CHECK(c % pv == 0);
                        if (c % pv == 0 && (c / pv) % p != 0 && c != 0)
                            primitive_quotient = true;
                    }
                    if (all_zero)
                        CHECK(comp.valuation == k);
                    else
                        CHECK(primitive_quotient);
                }
            }
        }
    }
}

TEST_CASE("component cap") {
    CHECK_THROWS_AS(symgroup::cyclic_loop_components(2, 21, 1), enumeration_limit_error);
    CHECK_THROWS_AS(symgroup::cyclic_loop_components(2, 3, 7, 1000), enumeration_limit_error);
    CHECK_THROWS_AS(symgroup::cyclic_loop_components(4, 1, 1), type_error);
}
