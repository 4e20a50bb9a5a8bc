#ifndef CYCLO_MULTIND_HPP
#define CYCLO_MULTIND_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/intpoly.hpp"

namespace cyclo {

/// a = base^exponent with base not itself a perfect power, exponent
/// maximal. Requires a >= 2 (throws InputTooSmall).
std::pair<Int, unsigned long> perfect_power_decompose(const Int& a);

/// Decides whether a^p = b^q has a solution in positive integers for
/// a, b >= 2. Returns the primitive exponent pair when it does.
std::optional<std::pair<unsigned long, unsigned long>>
int_mult_dependent(const Int& a, const Int& b);

/// The coefficient polynomials of (-n + zeta_q)^q in the power basis of
/// Z[zeta_q], as polynomials in n, indices 0..q-2. Supported q: 17, 19,
/// 23 (throws NotSupportedPrime otherwise).
std::vector<IntPoly> pki_polynomials(long q);

/// gcd certificates over Z[n]: (gcd(p_{q,0}, p_{q,1}), gcd(p_{q,3}, p_{q,4})).
std::pair<IntPoly, IntPoly> gcd_certificates(long q);

/// Searches for the unique j in [0, k) with
/// zeta_k^j * (-m + zeta_k)^p = (-n + zeta_k)^q in Z[X]/(Phi_k).
std::optional<long> algebraic_check(long k, long m, long n, unsigned long p,
                                    unsigned long q);

struct DependenceWitness {
    unsigned long p = 0;
    unsigned long q = 0;
    long j = 0;
    bool verified = false;
};

enum class VerdictKind {
    Dependent,
    NormIndependent, // the norms are multiplicatively independent integers
    TorsionRuledOut, // norm relation exists but the quotient is not torsion
    UnitCase,        // one side is a unit of infinite order
};

struct IndependenceVerdict {
    long k = 0;
    long m = 0;
    long n = 0;
    Int norm_m; // Phi_k(m)
    Int norm_n; // Phi_k(n)
    VerdictKind kind = VerdictKind::NormIndependent;
    std::optional<DependenceWitness> witness;                      // Dependent
    std::optional<std::pair<unsigned long, unsigned long>> primitive_pair; // TorsionRuledOut
    std::string detail;

    bool dependent() const { return kind == VerdictKind::Dependent; }
};

/// Exact decision of multiplicative independence of -m + zeta_k and
/// -n + zeta_k, valid for every m, n >= 1 with m != n. Built from the
/// norm decomposition plus the fact that the torsion units of Q(zeta_k)
/// have order dividing lcm(2, k).
IndependenceVerdict independence_verdict(long k, long m, long n);

struct NagellSolution {
    long x = 0;
    Int y;
    long k = 0;
    long q = 0;
};

/// Exhaustive scan of (x^k - 1)/(x - 1) = y^q over 2 <= x <= x_max,
/// 3 <= k <= k_max, 2 <= q <= q_max, with x, y > 1.
std::vector<NagellSolution> nagell_search(long x_max, long k_max, long q_max);

struct QuarticSolution {
    long x = 0;
    Int y;
    long q = 0;
};

/// Exhaustive scan of X^2 + 3 = 4*Y^q over odd X in [1, x_max]. The
/// trivial X = 1 family is reported as (1, 1, q) for every q <= q_max;
/// all other hits require q >= 2.
std::vector<QuarticSolution> quartic_search(long x_max, long q_max);

struct IndependenceSweepEntry {
    long m = 0;
    long n = 0;
    VerdictKind kind = VerdictKind::NormIndependent;
    std::optional<DependenceWitness> witness;
};

struct IndependenceSweep {
    long k = 0;
    long range_max = 0;
    std::vector<IndependenceSweepEntry> entries; // ordered by (m, n)
    std::uint64_t pairs = 0;
    std::uint64_t independent = 0;
    // dependent pairs outside the documented k = 6, n = 1 family
    std::vector<std::pair<long, long>> unexpected;
    bool pass = false;
};

/// Runs independence_verdict on every pair 1 <= n < m <= range_max.
/// Deterministic output order regardless of jobs. A finite sweep is
/// numerical evidence for the unbounded statements, nothing more.
IndependenceSweep theorem2_sweep(long k, long range_max, int jobs = 1);

} // namespace cyclo

#endif
