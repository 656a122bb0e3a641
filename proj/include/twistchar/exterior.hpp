#pragma once

#include <span>
#include <utility>
#include <vector>

#include "twistchar/partition.hpp"
#include "twistchar/series.hpp"
#include "twistchar/signed_unit.hpp"
#include "twistchar/twist.hpp"

namespace twistchar::extalg {

inline constexpr unsigned long kDefaultExtCap = 64;

// Dimension of the n-th twisted exterior power of an object of integer
// dimension `dim`, in the categorical normalization: the class-wise group
// average
//   (1/n!) * sum over lambda of class_size(lambda) * (eps*dim)^cycles(lambda).
// For the trivial twist this is C(dim+n-1, n); for the Koszul twist it is
// (-1)^n * C(dim, n). Throws non_integral_error if the average fails to
// cancel (which a correct build never hits).
Int ext_dim(const graded::Twist<Int>& twist, const Int& dim, unsigned long n,
            unsigned long cap = kDefaultExtCap);

// Signed-unit dimensions reduce to the integer case through evaluation at
// u -> -1 (the super dimension); the average is taken in Z[u]/(u^2-1) and
// evaluated afterwards.
Int ext_dim(const graded::Twist<ring::SignedUnit>& twist, const ring::SignedUnit& dim,
            unsigned long n, unsigned long cap = kDefaultExtCap);

// Generating function of all twisted exterior power dimensions up to the
// truncation order, in both normalizations. The underlying coefficient at
// t^n is eps^n times the categorical one; the two agree for the trivial
// twist and differ by alternating signs for the Koszul twist.
struct ExtSeries {
    graded::Twist<Int> twist = graded::Twist<Int>::trivial();
    Int dim = 0;
    unsigned long order = 0;
    ring::IntSeries categorical = ring::IntSeries(0ul);
    ring::IntSeries underlying = ring::IntSeries(0ul);
};

ExtSeries ext_series(const graded::Twist<Int>& twist, const Int& dim, unsigned long order,
                     unsigned long cap = kDefaultExtCap);

// Checks the symmetric/exterior generating function identity
//   (sum dim(Sym^n V) t^n) * (sum dim(ext^n V) (-t)^n) = 1  mod t^(order+1)
// for a dimension-`dim` object, with the exterior factor in the underlying
// normalization. Returns the verdict and the product as witness.
std::pair<bool, ring::IntSeries> verify_sym_ext_identity(const Int& dim, unsigned long order,
                                                         unsigned long cap = kDefaultExtCap);

// Product of the categorical series; the braiding sends coproducts to
// tensor products, so this is the series of the direct sum.
ring::IntSeries ext_series_product(std::span<const ExtSeries> factors);

}  // namespace twistchar::extalg
