#pragma once

#include <vector>

#include "twistchar/numeric.hpp"

namespace twistchar::symgroup {

// One connected component of the j-fold free loop space of the
// classifying space of Z/p^k: a coordinate vector in (Z/p^k)^j.
// The valuation is the largest v with coords = p^v * (primitive vector),
// capped at k; it is k exactly when the vector is zero.
struct LoopComponentCyclic {
    unsigned long p = 2;
    unsigned long k = 0;
    std::vector<unsigned long> coords;
    unsigned long valuation = 0;

    unsigned long depth() const { return coords.size(); }
    bool operator==(const LoopComponentCyclic&) const = default;
};

inline constexpr unsigned long kDefaultComponentCap = 1ul << 20;

// All p^(k*j) components of (Z/p^k)^j in lexicographic coordinate order
// (last coordinate varies fastest). Throws enumeration_limit_error when
// the component count exceeds the cap.
std::vector<LoopComponentCyclic> cyclic_loop_components(
    unsigned long p, unsigned long k, unsigned long j,
    unsigned long cap = kDefaultComponentCap);

}  // namespace twistchar::symgroup
