#pragma once

#include <vector>

#include "twistchar/errors.hpp"
#include "twistchar/numeric.hpp"

namespace twistchar::graded {

// Finite abelian group presented by a list of cyclic orders. The orders
// need not form a divisibility chain.
struct FiniteAbelianGroup {
    std::vector<Int> orders;

    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(std::vector<Int> orders_) : orders(std::move(orders_)) {
        for (const auto& d : orders)
            if (d < 1) throw type_error("cyclic orders must be at least 1");
    }

    Int order() const {
        Int total = 1;
        for (const auto& d : orders) total *= d;
        return total;
    }
};

// Number of twisted graded structures on a base whose unit group of the
// coefficient field has this group of units: the count of 2-torsion
// elements, i.e. the product of gcd(2, d) over the cyclic orders.
inline Int count_twists(const FiniteAbelianGroup& units) {
    Int count = 1;
    for (const auto& d : units.orders)
        if (d % 2 == 0) count *= 2;
    return count;
}

}  // namespace twistchar::graded
