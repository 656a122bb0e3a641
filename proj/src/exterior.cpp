#include "twistchar/exterior.hpp"

#include <string>

#include "twistchar/braiding_character.hpp"
#include "twistchar/errors.hpp"

namespace twistchar::extalg {

namespace {

// Class-wise average of (shifted_dim)^cycles over the symmetric group on n
// letters; p(n) terms instead of n!.
template <typename R>
R averaged_power_sum(const R& shifted_dim, unsigned long n, unsigned long cap) {
    R sum = ring::ring_traits<R>::zero();
    for (const auto& lambda : symgroup::partitions(n, cap)) {
        R term = ring::ring_pow(shifted_dim, lambda.num_cycles());
        sum = sum + braidchar::scale(term, symgroup::class_size(lambda));
    }
    return sum;
}

Int exact_quotient(const Int& numerator, const Int& denominator, unsigned long n) {
    auto q = divide_exactly(numerator, denominator);
    if (!q)
        throw non_integral_error("exterior power average at n = " + std::to_string(n) +
                                 " did not cancel to an integer");
    return *q;
}

}  // namespace

Int ext_dim(const graded::Twist<Int>& twist, const Int& dim, unsigned long n,
            unsigned long cap) {
    const Int sum = averaged_power_sum(twist.shift_dim(dim), n, cap);
    return exact_quotient(sum, factorial(n), n);
}

Int ext_dim(const graded::Twist<ring::SignedUnit>& twist, const ring::SignedUnit& dim,
            unsigned long n, unsigned long cap) {
    // Evaluation at u -> -1 is a ring map, so averaging after evaluating
    // gives the super dimension; only the evaluated average is integral.
    const Int super_dim = twist.shift_dim(dim).eval(-1);
    const Int sum = averaged_power_sum(super_dim, n, cap);
    return exact_quotient(sum, factorial(n), n);
}

ExtSeries ext_series(const graded::Twist<Int>& twist, const Int& dim, unsigned long order,
                     unsigned long cap) {
    if (order > cap)
        throw enumeration_limit_error("ext_series order " + std::to_string(order) +
                                      " exceeds cap " + std::to_string(cap));
    ExtSeries s{twist, dim, order, ring::IntSeries(order), ring::IntSeries(order)};
    const bool alternating = twist.epsilon() == -1;
    for (unsigned long n = 0; n <= order; ++n) {
        Int categorical = ext_dim(twist, dim, n, cap);
        Int underlying = (alternating && n % 2 == 1) ? Int(-categorical) : categorical;
        s.categorical.set_coeff(n, std::move(categorical));
        s.underlying.set_coeff(n, std::move(underlying));
    }
    return s;
}

std::pair<bool, ring::IntSeries> verify_sym_ext_identity(const Int& dim, unsigned long order,
                                                         unsigned long cap) {
    const ExtSeries sym = ext_series(graded::Twist<Int>::trivial(), dim, order, cap);
    const ExtSeries ext = ext_series(graded::Twist<Int>::koszul(), dim, order, cap);
    const ring::IntSeries product = series_mul(sym.underlying, ext.underlying.alternate());
    return {product.is_one(), product};
}

ring::IntSeries ext_series_product(std::span<const ExtSeries> factors) {
    if (factors.empty()) throw type_error("ext_series_product: empty factor list");
    ring::IntSeries product = factors.front().categorical;
    for (std::size_t i = 1; i < factors.size(); ++i)
        product = series_mul(product, factors[i].categorical);
    return product;
}

}  // namespace twistchar::extalg
