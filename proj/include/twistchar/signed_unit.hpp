#pragma once

#include <string>

#include "twistchar/numeric.hpp"

namespace twistchar::ring {

// An element a + b*u of Z[u]/(u^2 - 1). The generator u squares to 1, so
// this ring carries every square-one unit that appears as a twisted
// dimension: +1, -1, u (the parity unit), -u.
struct SignedUnit {
    Int a = 0;
    Int b = 0;

    SignedUnit() = default;
    SignedUnit(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}
    SignedUnit(long x) : a(x) {}  // NOLINT: integers embed as constants
    explicit SignedUnit(const Int& x) : a(x) {}

    static SignedUnit generator() { return {0, 1}; }

    bool operator==(const SignedUnit&) const = default;

    SignedUnit operator+(const SignedUnit& o) const { return {a + o.a, b + o.b}; }
    SignedUnit operator-(const SignedUnit& o) const { return {a - o.a, b - o.b}; }
    SignedUnit operator-() const { return {-a, -b}; }
    SignedUnit operator*(const SignedUnit& o) const {
        return {a * o.a + b * o.b, a * o.b + b * o.a};
    }
    SignedUnit& operator+=(const SignedUnit& o) { return *this = *this + o; }
    SignedUnit& operator*=(const SignedUnit& o) { return *this = *this * o; }

    // Evaluation at u -> sign; sign = -1 gives the super dimension.
    Int eval(int sign) const { return sign >= 0 ? Int(a + b) : Int(a - b); }

    std::string str() const;
};

// The ring map Z[u]/(u^2-1) -> Z sending u to the given sign.
inline Int signed_unit_eval(const SignedUnit& x, int sign) { return x.eval(sign); }

inline std::string SignedUnit::str() const {
    if (b == 0) return a.get_str();
    std::string ub = b == 1 ? "u" : (b == -1 ? "-u" : b.get_str() + "u");
    if (a == 0) return ub;
    return a.get_str() + (b > 0 ? "+" : "") + ub;
}

}  // namespace twistchar::ring
