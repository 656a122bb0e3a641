#pragma once

#include <string>

#include "twistchar/errors.hpp"
#include "twistchar/ring_traits.hpp"

namespace twistchar::graded {

enum class TwistKind { Trivial, Koszul, Unit };

// The decategorified content of a twisted graded structure: the single
// square-one unit epsilon recording the dimension of the degree-one unit
// object. Trivial carries +1, Koszul carries -1, Unit carries a supplied
// unit with epsilon^2 = 1.
template <typename R>
class Twist {
public:
    static Twist trivial() { return Twist(TwistKind::Trivial, ring::ring_traits<R>::one()); }
    static Twist koszul() { return Twist(TwistKind::Koszul, -ring::ring_traits<R>::one()); }
    static Twist unit(R epsilon) {
        if (!(epsilon * epsilon == ring::ring_traits<R>::one()))
            throw type_error("twist unit must square to 1");
        return Twist(TwistKind::Unit, std::move(epsilon));
    }

    TwistKind kind() const { return kind_; }
    const R& epsilon() const { return epsilon_; }

    // dim(V<1>) = epsilon * dim(V): shifting one degree multiplies the
    // dimension by the twist unit.
    R shift_dim(const R& dim) const { return epsilon_ * dim; }

    bool operator==(const Twist&) const = default;

    std::string kind_name() const {
        switch (kind_) {
            case TwistKind::Trivial: return "trivial";
            case TwistKind::Koszul: return "koszul";
            case TwistKind::Unit: return "unit";
        }
        return "";
    }

private:
    Twist(TwistKind kind, R epsilon) : kind_(kind), epsilon_(std::move(epsilon)) {}

    TwistKind kind_;
    R epsilon_;
};

template <typename R>
R dim_shift(const Twist<R>& twist, const R& dim) {
    return twist.shift_dim(dim);
}

using IntTwist = Twist<Int>;

}  // namespace twistchar::graded
