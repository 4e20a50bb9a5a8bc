#ifndef CYCLO_CNS_HPP
#define CYCLO_CNS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/intpoly.hpp"
#include "cyclo/residue.hpp"

namespace cyclo {

/// Default iteration fuse for digit expansions.
inline constexpr std::uint64_t kDefaultMaxSteps = 1'000'000;

/// Outcome of the sufficient radix-system criterion: positive
/// nondecreasing coefficient chain, constant term >= 2, and no root of
/// unity among the roots.
struct CriterionReport {
    bool monotone_ok = false;
    bool p0_ok = false;
    bool no_unit_root_ok = false;
    bool passed = false;
    std::optional<std::string> first_violation;
};

/// Evaluates the three criterion conditions on a monic P of degree >= 1.
CriterionReport petho_check(const IntPoly& P);

/// True iff some cyclotomic polynomial divides P, i.e. some root of P is
/// a root of unity. Candidate orders j are scanned up to 2*d^2 + 4,
/// which covers every j with phi(j) <= deg P.
bool has_cyclotomic_factor(const IntPoly& P);

/// Checks (m-1)^d * C(phi,d) / 2 <= p~_d <= (m+1)^d * C(phi,d) for every
/// d = 1..phi(k), where p~_d = p_{phi(k)-d} reads the coefficients of
/// base_polynomial(k, m) from the top. Requires m >= phi(k)+1.
bool coeff_bounds_check(long k, long m);

/// One backward-division step: digit = a_0 mod |p_0|, quotient residue
/// gamma' with gamma = digit + X * gamma' in the ring.
std::pair<Int, Residue> expansion_step(const CnsBasis& basis,
                                       const Residue& gamma);

enum class ExpansionStatus { Terminated, Cycle, BudgetExceeded };

struct DigitExpansion {
    std::vector<Int> digits; // least significant first
    ExpansionStatus status = ExpansionStatus::Terminated;
    std::uint64_t steps = 0;
    // set when status == Cycle
    std::uint64_t cycle_entry = 0;
    std::uint64_t cycle_length = 0;
};

/// Iterates expansion_step until zero, a repeated residue, or the step
/// fuse. Non-termination is reported in the status, not thrown.
DigitExpansion encode(const CnsBasis& basis, const Residue& gamma,
                      std::uint64_t max_steps = kDefaultMaxSteps);

/// Horner evaluation of a digit string in the ring. Digits must lie in
/// [0, digit_bound); throws DigitOutOfRange otherwise.
Residue decode(const CnsBasis& basis, const std::vector<Int>& digits);

struct VerificationReport {
    long box_radius = 0;
    std::uint64_t tested = 0;
    bool all_terminated = false;
    std::optional<Residue> counterexample;
};

/// Runs encode on every residue with coefficients in [-box_radius,
/// box_radius]. Throws BudgetExceeded when the box has more than
/// max_elements points.
VerificationReport exhaustive_verify(const CnsBasis& basis, long box_radius,
                                     std::uint64_t max_steps = kDefaultMaxSteps,
                                     std::uint64_t max_elements = 10'000'000);

struct SweepEntry {
    long k = 0;
    long m = 0;
    bool passed = false;
    std::string violation; // empty when passed
};

struct Theorem1Sweep {
    long phi_max = 0;
    long m_max = 0;
    std::vector<SweepEntry> entries; // ordered by (k, m)
    std::uint64_t pairs = 0;
    std::uint64_t passes = 0;
    bool all_passed = false;
};

/// Enumerates every pair (k, m) with k >= 3, phi(k) <= phi_max and
/// phi(k)+1 <= m <= m_max, and runs the criterion on each base
/// polynomial. Deterministic output order regardless of jobs.
Theorem1Sweep theorem1_sweep(long phi_max, long m_max, int jobs = 1);

enum class Ordering { Less, Equal, Greater };

/// Compares the coefficients p_1 and p_0 of base_polynomial(k, m).
Ordering remark_boundary(long k, long m);

} // namespace cyclo

#endif
