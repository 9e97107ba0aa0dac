#pragma once

// Exact scalars. BigInt/BigRational are GMP's C++ classes; mpq_class already
// maintains the canonical form we need (reduced, denominator > 0). The few
// helpers below cover operations gmpxx leaves out or spells awkwardly.
//
// One gmpxx caveat observed throughout the codebase: never bind arithmetic
// results to `auto` (expression templates); assign to a named BigInt or
// BigRational instead.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qth {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(long num, long den = 1) {
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const BigRational &r) { return sgn(r) == 0; }
inline bool is_one(const BigRational &r) { return r == 1; }
inline bool is_integer(const BigRational &r) { return r.get_den() == 1; }

inline std::string to_string(const BigInt &z) { return z.get_str(); }
inline std::string to_string(const BigRational &r) { return r.get_str(); }

// Factorial as an exact integer (n! fits easily; n stays tiny here).
inline BigInt factorial(unsigned n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

} // namespace qth
