#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace twistchar {

// All integer arithmetic is arbitrary precision: centralizer orders and
// factorials overflow fixed-width integers long before the enumeration
// caps are reached.
using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(const Int& n, unsigned long k) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Int pow2(unsigned long exp) { return pow_int(2, exp); }

// True division check: returns n/d when d | n.
inline std::optional<Int> divide_exactly(const Int& n, const Int& d) {
    if (d == 0 || !mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    Int q;
    mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

inline std::string to_string(const Int& x) { return x.get_str(); }

}  // namespace twistchar
