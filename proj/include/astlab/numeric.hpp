#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace astlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient with the generalized convention C(n,k)=0 for k<0,
/// and C(n,k) = n(n-1)...(n-k+1)/k! for any integer n.
inline Integer binomial(long n, long k) {
    if (k < 0) return 0;
    if (n >= 0) {
        if (k > n) return 0;
        Integer r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return r;
    }
    // C(n,k) = (-1)^k C(k-n-1, k)
    Integer r = binomial(k - n - 1, k);
    return (k % 2 == 0) ? r : Integer(-r);
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline long to_long(const Integer& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in long: " + z.get_str());
    return z.get_si();
}

/// Converts an integral rational to Integer; throws if not integral.
inline Integer to_integer(const Rational& q) {
    if (!is_integer(q)) throw std::domain_error("expected an integer, got " + q.get_str());
    return q.get_num();
}

inline Integer catalan(int n) { return binomial(2L * n, n) / (n + 1); }

inline Integer factorial(int n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

}  // namespace astlab
