#pragma once

#include <map>
#include <optional>
#include <utility>

#include "twistchar/ring_traits.hpp"

namespace twistchar::graded {

// Decategorified Z-graded object: a finite-support map from integer
// degrees to nonzero coefficients. Zero values are never stored.
template <typename R>
class GradedDim {
public:
    GradedDim() = default;

    explicit GradedDim(std::map<long, R> entries) {
        for (auto& [degree, value] : entries)
            if (!ring::ring_traits<R>::is_zero(value)) entries_.emplace(degree, std::move(value));
    }

    static GradedDim unit() {
        GradedDim d;
        d.entries_.emplace(0, ring::ring_traits<R>::one());
        return d;
    }

    static GradedDim line(long degree, R value) {
        GradedDim d;
        if (!ring::ring_traits<R>::is_zero(value)) d.entries_.emplace(degree, std::move(value));
        return d;
    }

    const std::map<long, R>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    R at(long degree) const {
        auto it = entries_.find(degree);
        return it == entries_.end() ? ring::ring_traits<R>::zero() : it->second;
    }

    bool operator==(const GradedDim&) const = default;

private:
    std::map<long, R> entries_;
};

// Day convolution at the dimension level: the degree-m entry of X (x) Y is
// the sum of X_a * Y_b over a + b = m. Zero results are dropped.
template <typename R>
GradedDim<R> day_convolve(const GradedDim<R>& x, const GradedDim<R>& y) {
    std::map<long, R> out;
    for (const auto& [a, xa] : x.entries()) {
        for (const auto& [b, yb] : y.entries()) {
            auto [it, inserted] = out.emplace(a + b, xa * yb);
            if (!inserted) it->second = it->second + xa * yb;
        }
    }
    return GradedDim<R>(std::move(out));
}

// Invertible graded dimensions are exactly the ring units concentrated in
// a single degree; returns that degree when invertible.
template <typename R>
std::optional<long> is_invertible(const GradedDim<R>& x) {
    if (x.entries().size() != 1) return std::nullopt;
    const auto& [degree, value] = *x.entries().begin();
    if (!ring::ring_traits<R>::is_unit(value)) return std::nullopt;
    return degree;
}

using IntGradedDim = GradedDim<Int>;

}  // namespace twistchar::graded
