#ifndef CYCLO_CYCLOTOMIC_HPP
#define CYCLO_CYCLOTOMIC_HPP

#include "cyclo/intpoly.hpp"
#include "cyclo/residue.hpp"

namespace cyclo {

/// Euler totient, by trial-division factorization.
unsigned long euler_phi(unsigned long k);

/// Product of the distinct prime divisors; radical(1) = 1.
unsigned long radical(unsigned long k);

/// k-th cyclotomic polynomial, built by exact division of X^k - 1 by the
/// product of the lower-order cyclotomics. Memoized; thread-safe.
IntPoly cyclotomic(unsigned long k);

/// Checks the identity Phi_k(X) = Phi_rad(k)(X^(k/rad(k))) by direct
/// construction of both sides. Holds for every k >= 2; exists as a
/// certificate generator.
bool power_reduction_holds(unsigned long k);

/// Radix basis: a monic polynomial P together with the digit bound |P(0)|.
/// Digit set is {0, ..., digit_bound - 1}. When built from a cyclotomic
/// order via base_polynomial, k and m record the construction; ad-hoc
/// bases leave them at 0.
struct CnsBasis {
    long k = 0;
    long m = 0;
    IntPoly P;
    Int digit_bound;
    RingPtr ring;

    /// Basis from an arbitrary monic polynomial of degree >= 1.
    static CnsBasis from_polynomial(IntPoly P);
};

/// P = Phi_k(m + X) with digit bound Phi_k(m). Requires k >= 3, m >= 1;
/// throws InvalidK for k < 3, InvalidInput for m < 1.
CnsBasis base_polynomial(long k, long m);

} // namespace cyclo

#endif
