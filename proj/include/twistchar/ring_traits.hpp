#pragma once

#include <optional>
#include <string>

#include "twistchar/numeric.hpp"
#include "twistchar/signed_unit.hpp"

namespace twistchar::ring {

// Minimal ring interface used by series, graded objects and characters.
template <typename R>
struct ring_traits;

template <>
struct ring_traits<Int> {
    static Int zero() { return 0; }
    static Int one() { return 1; }
    static bool is_zero(const Int& x) { return x == 0; }
    static bool is_unit(const Int& x) { return x == 1 || x == -1; }
    static std::optional<Int> inverse(const Int& x) {
        if (!is_unit(x)) return std::nullopt;
        return x;
    }
    static std::string str(const Int& x) { return x.get_str(); }
    static constexpr const char* name() { return "Z"; }
};

template <>
struct ring_traits<Rat> {
    static Rat zero() { return 0; }
    static Rat one() { return 1; }
    static bool is_zero(const Rat& x) { return x == 0; }
    static bool is_unit(const Rat& x) { return x != 0; }
    static std::optional<Rat> inverse(const Rat& x) {
        if (x == 0) return std::nullopt;
        return Rat(1) / x;
    }
    static std::string str(const Rat& x) { return x.get_str(); }
    static constexpr const char* name() { return "Q"; }
};

template <>
struct ring_traits<SignedUnit> {
    static SignedUnit zero() { return {}; }
    static SignedUnit one() { return {1, 0}; }
    static bool is_zero(const SignedUnit& x) { return x.a == 0 && x.b == 0; }
    // Units are exactly +1, -1, u, -u; each is its own inverse.
    static bool is_unit(const SignedUnit& x) {
        return (ring_traits<Int>::is_unit(x.a) && x.b == 0) ||
               (x.a == 0 && ring_traits<Int>::is_unit(x.b));
    }
    static std::optional<SignedUnit> inverse(const SignedUnit& x) {
        if (!is_unit(x)) return std::nullopt;
        return x;
    }
    static std::string str(const SignedUnit& x) { return x.str(); }
    static constexpr const char* name() { return "Z[u]/(u^2-1)"; }
};

template <typename R>
R ring_pow(R base, unsigned long exp) {
    R result = ring_traits<R>::one();
    while (exp > 0) {
        if (exp & 1ul) result = result * base;
        base = base * base;
        exp >>= 1ul;
    }
    return result;
}

}  // namespace twistchar::ring
