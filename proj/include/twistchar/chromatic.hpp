#pragma once

#include <set>
#include <string>
#include <vector>

#include "twistchar/braiding_character.hpp"
#include "twistchar/loop_space.hpp"
#include "twistchar/numeric.hpp"

namespace twistchar::chromatic {

// Presentation of the p-local dual stable stem indexing the twists at a
// given height: a product of cyclic groups of p-power order.
struct StemGroup {
    unsigned long p = 2;
    std::vector<Int> orders;

    StemGroup() = default;
    StemGroup(unsigned long p_, std::vector<Int> orders_);

    static StemGroup trivial(unsigned long p) { return StemGroup(p, {}); }
};

// Element given by one residue per cyclic factor.
using StemElement = std::vector<Int>;

// Is alpha = 2*beta solvable? In a cyclic 2-group this needs an even
// residue; at odd primes doubling is invertible.
bool two_divisible(const StemGroup& group, const StemElement& alpha);

// The square-one units reachable through the orientation map at height n:
// {+1, -1} exactly when p = 2 and n <= 3, and {+1} otherwise.
std::set<int> truncated_units(unsigned long p, int n);

// Which permutation-representation character the braiding character of
// the alpha-twisted graded category agrees with: the untwisted one
// (omega = +1, label "E_n") or the once-suspended one (omega = -1, label
// "ΣE_n"). The second branch occurs exactly for p = 2, n <= 2 and alpha
// not 2-divisible.
struct ChromaticDecision {
    int omega = 1;
    std::string label = "E_n";
};

ChromaticDecision chromatic_decision(unsigned long p, int n, const StemGroup& group,
                                     const StemElement& alpha);

// The full character table at tensor power m: the braiding character of a
// dimension-1 object with twist unit omega, every row value omega^cycles
// with the trivial action flag.
braidchar::CharacterTable<Int> chromatic_character(
    unsigned long p, int n, const StemGroup& group, const StemElement& alpha,
    unsigned long m, unsigned long cap = symgroup::kDefaultPartitionCap);

// Cardinality of the classifying space of Z/2 in height-n modules at the
// prime 2: 2^(n-1). Defined for n >= 1.
Int bz2_cardinality(int n);

// Semiadditive integral of omega^2 over that classifying space:
// -2^(n-1)+1 for omega = -1, and the cardinality for omega = +1.
Int integral_bz2_sq(int n, int omega);

// The arithmetic engine of the no-nontrivial-truncated-unit argument:
// true iff -2^(n-1)+1 differs from 2^(n-1), which holds for every n >= 1.
bool no_truncated_unit_check(int n);

// Integral of (-1)^2 minus the cardinality: -2^n + 1.
Int loop_bz2_integral(int n);

enum class ComponentAction { Trivial, Induced };

// One component of the looped classifying space with its character value.
// Non-divisible components carry omega_t with the trivial action; divisible
// components carry the square of the level-(k-1) value, computed as an
// induction.
struct TranschromaticRow {
    symgroup::LoopComponentCyclic component;
    int value = 1;
    ComponentAction action = ComponentAction::Trivial;
};

std::vector<TranschromaticRow> transchromatic_table(
    unsigned long k, unsigned long j, int omega_t,
    unsigned long cap = symgroup::kDefaultComponentCap);

// Stable homotopy groups of spheres in the range shipped with the library
// (textbook values, stems 1..7): Z/2, Z/2, Z/24, 0, 0, Z/2, Z/240.
// Returned as the list of cyclic orders (empty for the zero group).
std::vector<Int> stable_stem(int stem);

// The p-local dual stem at height n: the p-primary part of the stem n+1.
// Heights above the shipped range need a user-supplied presentation.
StemGroup dual_stem_group(unsigned long p, int n);

}  // namespace twistchar::chromatic
