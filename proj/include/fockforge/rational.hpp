#pragma once

#include <gmpxx.h>

#include <string>

#include "fockforge/errors.hpp"

namespace fockforge {

// Exact coefficient arithmetic is delegated to GMP.  mpq_class keeps values
// canonical (lowest terms, positive denominator), which is exactly the
// invariant Rational promises.
using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Integer& z) { return mpz_sgn(z.get_mpz_t()) == 0; }
inline bool is_zero(const Rational& r) { return mpq_sgn(r.get_mpq_t()) == 0; }

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Canonical text form: "p/q" in lowest terms, "p" when q == 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

// GMP's C++ wrappers only accept long; on this LP64 target long long is the
// same width.
static_assert(sizeof(long) == sizeof(long long), "64-bit long required");

inline Integer make_integer(long long v) { return Integer(static_cast<long>(v)); }

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw UsageError("rational: zero denominator");
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

/// Parses "p", "-p", or "p/q".  Throws UsageError on malformed input.
inline Rational parse_rational(const std::string& text) {
    mpq_class r;
    if (r.set_str(text, 10) != 0)
        throw UsageError("rational: cannot parse '" + text + "'");
    if (is_zero(Integer(r.get_den())))
        throw UsageError("rational: zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

/// r^e for integer e; e < 0 requires r != 0.
inline Rational rational_pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (is_zero(r) && e < 0) throw UsageError("rational_pow: zero base, negative exponent");
    Rational base = e > 0 ? r : Rational(1) / r;
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational acc(1);
    while (k > 0) {
        if (k & 1u) acc *= base;
        base *= base;
        k >>= 1u;
    }
    return acc;
}

inline Integer integer_pow(const Integer& z, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), z.get_mpz_t(), e);
    return out;
}

/// Binomial coefficient C(n, k) for n >= 0; zero when k > n.
inline Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

} // namespace fockforge
