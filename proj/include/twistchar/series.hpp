#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "twistchar/errors.hpp"
#include "twistchar/ring_traits.hpp"

namespace twistchar::ring {

// Power series in t truncated at a fixed order: coefficients of t^0..t^N.
// Multiplication drops everything beyond t^N; inversion needs a unit
// constant term.
template <typename R>
class TruncatedSeries {
public:
    explicit TruncatedSeries(unsigned long order)
        : coeffs_(order + 1, ring_traits<R>::zero()) {}

    explicit TruncatedSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw type_error("series needs at least the constant term");
    }

    static TruncatedSeries constant(R value, unsigned long order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = std::move(value);
        return s;
    }

    static TruncatedSeries one(unsigned long order) {
        return constant(ring_traits<R>::one(), order);
    }

    unsigned long order() const { return coeffs_.size() - 1; }
    const R& coeff(std::size_t n) const { return coeffs_.at(n); }
    void set_coeff(std::size_t n, R value) { coeffs_.at(n) = std::move(value); }
    const std::vector<R>& coeffs() const { return coeffs_; }

    bool operator==(const TruncatedSeries&) const = default;

    bool is_one() const {
        if (!(coeffs_[0] == ring_traits<R>::one())) return false;
        for (std::size_t n = 1; n < coeffs_.size(); ++n)
            if (!ring_traits<R>::is_zero(coeffs_[n])) return false;
        return true;
    }

    TruncatedSeries operator+(const TruncatedSeries& o) const {
        check_same_order(o, "add");
        TruncatedSeries r(order());
        for (std::size_t n = 0; n < coeffs_.size(); ++n) r.coeffs_[n] = coeffs_[n] + o.coeffs_[n];
        return r;
    }

    TruncatedSeries operator-(const TruncatedSeries& o) const {
        check_same_order(o, "subtract");
        TruncatedSeries r(order());
        for (std::size_t n = 0; n < coeffs_.size(); ++n) r.coeffs_[n] = coeffs_[n] - o.coeffs_[n];
        return r;
    }

    // t -> -t
    TruncatedSeries alternate() const {
        TruncatedSeries r = *this;
        for (std::size_t n = 1; n < r.coeffs_.size(); n += 2) r.coeffs_[n] = -r.coeffs_[n];
        return r;
    }

private:
    void check_same_order(const TruncatedSeries& o, const char* op) const {
        if (order() != o.order())
            throw type_error(std::string("cannot ") + op + " series of orders " +
                             std::to_string(order()) + " and " + std::to_string(o.order()));
    }

    std::vector<R> coeffs_;
};

// Cauchy product truncated at the common order.
template <typename R>
TruncatedSeries<R> series_mul(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
    if (f.order() != g.order())
        throw type_error("cannot multiply series of orders " + std::to_string(f.order()) +
                         " and " + std::to_string(g.order()));
    TruncatedSeries<R> r(f.order());
    for (std::size_t n = 0; n <= f.order(); ++n) {
        R acc = ring_traits<R>::zero();
        for (std::size_t i = 0; i <= n; ++i) acc = acc + f.coeff(i) * g.coeff(n - i);
        r.set_coeff(n, std::move(acc));
    }
    return r;
}

// Two-sided inverse up to the truncation order. Requires a unit constant
// term; solves the triangular system b_n = -a_0^{-1} * sum a_i b_{n-i}.
template <typename R>
TruncatedSeries<R> series_invert(const TruncatedSeries<R>& f) {
    auto c0_inv = ring_traits<R>::inverse(f.coeff(0));
    if (!c0_inv)
        throw inversion_error("series_invert: constant term " +
                              ring_traits<R>::str(f.coeff(0)) + " is not a unit in " +
                              ring_traits<R>::name());
    TruncatedSeries<R> r(f.order());
    r.set_coeff(0, *c0_inv);
    for (std::size_t n = 1; n <= f.order(); ++n) {
        R acc = ring_traits<R>::zero();
        for (std::size_t i = 1; i <= n; ++i) acc = acc + f.coeff(i) * r.coeff(n - i);
        r.set_coeff(n, -(*c0_inv * acc));
    }
    return r;
}

// A single Laurent term value * t^degree. Braiding characters pair each
// class-function value with the degree marker of its tensor power; only
// non-negative degrees occur here.
template <typename R>
struct LaurentMonomial {
    R value = ring_traits<R>::zero();
    long degree = 0;

    bool operator==(const LaurentMonomial&) const = default;
};

using IntSeries = TruncatedSeries<Int>;
using RatSeries = TruncatedSeries<Rat>;

}  // namespace twistchar::ring
