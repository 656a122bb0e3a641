#pragma once

#include <cstddef>
#include <vector>

#include "twistchar/numeric.hpp"
#include "twistchar/partition.hpp"
#include "twistchar/twist.hpp"

namespace twistchar::oracle {

// Permutation of {0..m-1} as an image table: sigma[i] is where i goes.
using Perm = std::vector<std::size_t>;

Perm identity_perm(std::size_t m);
Perm compose(const Perm& sigma, const Perm& tau);  // (sigma*tau)(i) = sigma(tau(i))
Perm inverse(const Perm& sigma);

// Canonical representative of the conjugacy class of cycle type lambda:
// consecutive cycles (0..k1-1)(k1..k1+k2-1)...
Perm canonical_representative(const symgroup::Partition& lambda);
symgroup::Partition cycle_type(const Perm& sigma);

// All m! permutations; m is capped to keep full-group sums desk-scale.
std::vector<Perm> all_permutations(std::size_t m, std::size_t cap = 8);

// Sign picked up when sigma reorders homogeneous elements of the given
// degrees: the product over inversions (i < j, sigma(i) > sigma(j)) of
// (-1)^(deg_i * deg_j). Independent of the decomposition into
// transpositions.
int koszul_sign(const Perm& sigma, const std::vector<long>& degrees);

// Degrees after applying sigma: entry at sigma(i) comes from entry i.
std::vector<long> permute_degrees(const Perm& sigma, const std::vector<long>& degrees);

// Explicit graded vector space over the exact rationals: basis vector i
// has the given integer degree.
struct GradedVectorSpace {
    std::vector<long> degrees;

    static GradedVectorSpace standard(std::size_t dim, long degree) {
        return {std::vector<long>(dim, degree)};
    }
    std::size_t dim() const { return degrees.size(); }
};

// Signed permutation matrix acting on the basis of V^(tensor m): exactly
// one entry per column, valued +1 or -1. Each basis index also records the
// total degree of its basis tensor.
struct SignedPermMatrix {
    std::size_t dim = 0;
    std::vector<std::size_t> row;      // row[col]
    std::vector<int> sign;             // sign[col]
    std::vector<long> total_degree;    // per basis index

    SignedPermMatrix multiply(const SignedPermMatrix& other) const;
};

inline constexpr std::size_t kDefaultMatrixCap = 4096;

// The action of sigma on V^(tensor m): basis tensor e_{i_1} x...x e_{i_m}
// goes to the tensor with the slot-a factor moved to slot sigma(a), times
// the Koszul sign of sigma on the degree tuple when the twist unit is -1
// (plain permutation matrices when it is +1).
SignedPermMatrix perm_action(const Perm& sigma, const GradedVectorSpace& space,
                             unsigned long m, const graded::Twist<Int>& twist,
                             std::size_t cap = kDefaultMatrixCap);

Int naive_trace(const SignedPermMatrix& matrix);

// Monoidal trace in the twisted graded category: the twist unit raised to
// the total degree, times the plain matrix trace. This is the super-trace
// convention; it is the one convention everything else in this library is
// checked against.
Int categorical_trace(const SignedPermMatrix& matrix, long total_degree,
                      const graded::Twist<Int>& twist);

// Same, with the degree sign applied per basis tensor. Agrees with the
// uniform-degree version whenever the space is concentrated in one degree.
Int categorical_trace(const SignedPermMatrix& matrix, const graded::Twist<Int>& twist);

// Dimension of the image of the averaging idempotent on V^(tensor m):
// (1/m!) * sum over sigma of the categorical trace of its action. Always
// an integer; the rational is exposed so callers can check.
Rat projector_dim(const GradedVectorSpace& space, unsigned long m,
                  const graded::Twist<Int>& twist, std::size_t cap = kDefaultMatrixCap);

}  // namespace twistchar::oracle
