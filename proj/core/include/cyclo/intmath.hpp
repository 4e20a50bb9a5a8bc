#ifndef CYCLO_INTMATH_HPP
#define CYCLO_INTMATH_HPP

#include <gmpxx.h>

#include <optional>

namespace cyclo {

/// Arbitrary-precision integer used throughout the library.
using Int = mpz_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Exact q-th root of a nonnegative integer, if one exists.
inline std::optional<Int> exact_root(const Int& a, unsigned long q) {
    Int r;
    bool exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), q) != 0;
    if (!exact) return std::nullopt;
    return r;
}

inline bool is_perfect_power(const Int& a) {
    return mpz_perfect_power_p(a.get_mpz_t()) != 0;
}

/// Number of bits in |a|; 0 for a = 0.
inline unsigned long bit_length(const Int& a) {
    if (a == 0) return 0;
    return mpz_sizeinbase(a.get_mpz_t(), 2);
}

} // namespace cyclo

#endif
