#pragma once

#include <utility>
#include <vector>

#include "twistchar/partition.hpp"
#include "twistchar/series.hpp"
#include "twistchar/twist.hpp"

namespace twistchar::braidchar {

using symgroup::Partition;

// Each class-function value carries an action of the centralizer of the
// class, a product of wreath products: the cyclic group generated by a
// k-cycle rotates the dimension factor of that cycle, and the symmetric
// group on the N_k cycles of equal length permutes those factors. In
// every coefficient ring implemented here the restricted action is
// trivial; the enum records that and leaves room for the general case.
enum class ActionFlag { Trivial };

template <typename R>
struct CharacterRow {
    Partition cycle_type;
    R value;
    ActionFlag action = ActionFlag::Trivial;
};

// The braiding character of a dualizable object of dimension `dim` in a
// twisted graded category, restricted to the m-th tensor power: one value
// per conjugacy class, each carrying the degree marker t^m.
template <typename R>
struct CharacterTable {
    unsigned long m = 0;
    graded::Twist<R> twist = graded::Twist<R>::trivial();
    R dim = ring::ring_traits<R>::zero();
    std::vector<CharacterRow<R>> rows;

    long degree() const { return static_cast<long>(m); }
};

// The value on a class of cycle type lambda is (epsilon * dim)^(number of
// cycles): one dimension factor per cycle, each shifted by the twist unit.
// Rows are listed in reverse-lexicographic partition order.
template <typename R>
CharacterTable<R> braiding_character(const graded::Twist<R>& twist, const R& dim,
                                     unsigned long m,
                                     unsigned long cap = symgroup::kDefaultPartitionCap) {
    CharacterTable<R> table{m, twist, dim, {}};
    const R shifted = twist.shift_dim(dim);
    for (const auto& lambda : symgroup::partitions(m, cap))
        table.rows.push_back({lambda, ring::ring_pow(shifted, lambda.num_cycles()),
                              ActionFlag::Trivial});
    return table;
}

// Multiplication by an integer multiplicity, for the rings characters
// take values in.
template <typename R>
R scale(const R& x, const Int& n);

template <>
inline Int scale(const Int& x, const Int& n) { return x * n; }

template <>
inline ring::SignedUnit scale(const ring::SignedUnit& x, const Int& n) {
    return {x.a * n, x.b * n};
}

// Character of the braiding of a two-object coproduct, evaluated on the
// class of cycle type lambda. Splitting the cycles of lambda between the
// two summands and inducing up from the product of Young subgroups gives
//   sum over splittings (mu, nu) of lambda of
//     z_lambda / (z_mu * z_nu) * (eps1*dim1)^cycles(mu) * (eps2*dim2)^cycles(nu),
// and the multiplicity z_lambda/(z_mu z_nu) is the product of binomial
// coefficients C(N_k, a_k) choosing which k-cycles land in mu.
template <typename R>
R induced_character_value(const Partition& lambda, const R& dim1, const R& dim2,
                          const graded::Twist<R>& twist1, const graded::Twist<R>& twist2) {
    const R d1 = twist1.shift_dim(dim1);
    const R d2 = twist2.shift_dim(dim2);

    std::vector<std::pair<unsigned long, unsigned long>> counts;  // (part size k, N_k)
    for (const auto& [k, n] : symgroup::cycle_counts(lambda)) counts.emplace_back(k, n);

    R total = ring::ring_traits<R>::zero();
    // One choice vector a: a[i] of the counts[i].second cycles go to mu.
    std::vector<unsigned long> choice(counts.size(), 0);
    while (true) {
        Int multiplicity = 1;
        unsigned long cycles_mu = 0, cycles_nu = 0;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            multiplicity *= binomial(Int(counts[i].second), choice[i]);
            cycles_mu += choice[i];
            cycles_nu += counts[i].second - choice[i];
        }
        R term = ring::ring_pow(d1, cycles_mu) * ring::ring_pow(d2, cycles_nu);
        total = total + scale(term, multiplicity);

        std::size_t pos = counts.size();
        while (pos > 0) {
            --pos;
            if (++choice[pos] <= counts[pos].second) break;
            choice[pos] = 0;
            if (pos == 0) return total;
        }
        if (counts.empty()) return total;  // empty partition: single term
    }
}

// Pair each table value with its Laurent degree marker t^m, in row order.
template <typename R>
std::vector<std::pair<Partition, ring::LaurentMonomial<R>>> character_to_series_row(
    const CharacterTable<R>& table) {
    std::vector<std::pair<Partition, ring::LaurentMonomial<R>>> out;
    out.reserve(table.rows.size());
    for (const auto& row : table.rows)
        out.emplace_back(row.cycle_type, ring::LaurentMonomial<R>{row.value, table.degree()});
    return out;
}

using IntCharacterTable = CharacterTable<Int>;

}  // namespace twistchar::braidchar
