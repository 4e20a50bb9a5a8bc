#include "cyclo/cns.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <thread>

#include "cyclo/errors.hpp"

namespace cyclo {

CriterionReport petho_check(const IntPoly& P) {
    if (P.degree() < 1 || !P.is_monic())
        throw NotMonic("criterion requires a monic polynomial of degree >= 1: " +
                       to_string(P));

    CriterionReport report;
    const long d = P.degree();

    // 0 < p_{d-1} <= p_{d-2} <= ... <= p_0
    report.monotone_ok = true;
    if (P.coeff(static_cast<std::size_t>(d - 1)) <= 0) {
        report.monotone_ok = false;
        report.first_violation = "p_" + std::to_string(d - 1) + " <= 0";
    } else {
        for (long i = d - 1; i >= 1; --i) {
            const Int& hi = P.coeff(static_cast<std::size_t>(i));
            const Int& lo = P.coeff(static_cast<std::size_t>(i - 1));
            if (hi > lo) {
                report.monotone_ok = false;
                report.first_violation = "p_" + std::to_string(i) + " > p_" +
                                         std::to_string(i - 1);
                break;
            }
        }
    }

    report.p0_ok = P.coeff(0) >= 2;
    if (!report.p0_ok && !report.first_violation)
        report.first_violation = "p_0 < 2";

    report.no_unit_root_ok = !has_cyclotomic_factor(P);
    if (!report.no_unit_root_ok && !report.first_violation)
        report.first_violation = "a root of P is a root of unity";

    report.passed = report.monotone_ok && report.p0_ok && report.no_unit_root_ok;
    return report;
}

bool has_cyclotomic_factor(const IntPoly& P) {
    if (P.is_zero()) throw ZeroPolynomial("zero polynomial has every factor");
    const long d = P.degree();
    if (d < 1) return false;
    // phi(j) >= sqrt(j/2), so phi(j) > d for every j beyond 2*d^2.
    const unsigned long bound = 2 * static_cast<unsigned long>(d) *
                                    static_cast<unsigned long>(d) +
                                4;
    for (unsigned long j = 1; j <= bound; ++j) {
        if (euler_phi(j) > static_cast<unsigned long>(d)) continue;
        if (divides(cyclotomic(j), P)) return true;
    }
    return false;
}

bool coeff_bounds_check(long k, long m) {
    if (k < 3) throw InvalidK("coeff_bounds_check requires k >= 3");
    const auto phi = static_cast<long>(euler_phi(static_cast<unsigned long>(k)));
    if (m <= phi)
        throw PreconditionViolated("coeff_bounds_check requires m >= phi(k)+1");
    const CnsBasis basis = base_polynomial(k, m);
    for (long d = 1; d <= phi; ++d) {
        const Int& pd = basis.P.coeff(static_cast<std::size_t>(phi - d));
        const Int binom = binomial(static_cast<unsigned long>(phi),
                                   static_cast<unsigned long>(d));
        const Int lower = int_pow(Int(m - 1), static_cast<unsigned long>(d)) * binom;
        const Int upper = int_pow(Int(m + 1), static_cast<unsigned long>(d)) * binom;
        if (2 * pd < lower || pd > upper) return false;
    }
    return true;
}

std::pair<Int, Residue> expansion_step(const CnsBasis& basis,
                                       const Residue& gamma) {
    if (basis.digit_bound < 2)
        throw PreconditionViolated("expansion requires |p_0| >= 2");
    if (!(*gamma.ring() == *basis.ring)) throw RingMismatch();
    const IntPoly& P = basis.P;
    const Int& p0 = P.coeff(0);
    const auto d = static_cast<std::size_t>(P.degree());
    const std::vector<Int>& a = gamma.coeffs();

    Int digit;
    mpz_mod(digit.get_mpz_t(), a[0].get_mpz_t(), basis.digit_bound.get_mpz_t());
    Int t;
    mpz_divexact(t.get_mpz_t(), Int(a[0] - digit).get_mpz_t(), p0.get_mpz_t());

    std::vector<Int> next(d);
    for (std::size_t i = 0; i + 1 < d; ++i) {
        next[i] = a[i + 1] - t * P.coeff(i + 1);
    }
    next[d - 1] = -t;
    return {std::move(digit), Residue::from_coeffs(basis.ring, std::move(next))};
}

DigitExpansion encode(const CnsBasis& basis, const Residue& gamma,
                      std::uint64_t max_steps) {
    DigitExpansion out;
    Residue current = gamma;
    std::map<std::vector<Int>, std::uint64_t> visited;

    for (;;) {
        if (current.is_zero()) {
            out.status = ExpansionStatus::Terminated;
            return out;
        }
        auto [it, fresh] = visited.emplace(current.coeffs(), out.steps);
        if (!fresh) {
            out.status = ExpansionStatus::Cycle;
            out.cycle_entry = it->second;
            out.cycle_length = out.steps - it->second;
            return out;
        }
        if (out.steps >= max_steps) {
            out.status = ExpansionStatus::BudgetExceeded;
            return out;
        }
        auto [digit, next] = expansion_step(basis, current);
        out.digits.push_back(std::move(digit));
        current = std::move(next);
        ++out.steps;
    }
}

Residue decode(const CnsBasis& basis, const std::vector<Int>& digits) {
    for (const Int& d : digits) {
        if (d < 0 || d >= basis.digit_bound)
            throw DigitOutOfRange("digit " + d.get_str() +
                                  " outside [0, " + basis.digit_bound.get_str() +
                                  ")");
    }
    Residue acc = Residue::zero(basis.ring);
    const Residue x = Residue::from_coeffs(basis.ring, {0, 1});
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        acc = acc * x + Residue::from_coeffs(basis.ring, {*it});
    }
    return acc;
}

VerificationReport exhaustive_verify(const CnsBasis& basis, long box_radius,
                                     std::uint64_t max_steps,
                                     std::uint64_t max_elements) {
    if (box_radius < 1) throw InvalidInput("box_radius must be >= 1");
    const auto d = static_cast<std::size_t>(basis.P.degree());
    const std::uint64_t side = 2 * static_cast<std::uint64_t>(box_radius) + 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (total > max_elements / side)
            throw BudgetExceeded("box of " + std::to_string(side) + "^" +
                                 std::to_string(d) + " residues exceeds budget");
        total *= side;
    }

    VerificationReport report;
    report.box_radius = box_radius;
    report.all_terminated = true;

    std::vector<long> point(d, -box_radius);
    for (;;) {
        std::vector<Int> coeffs(d);
        for (std::size_t i = 0; i < d; ++i) coeffs[i] = point[i];
        Residue gamma = Residue::from_coeffs(basis.ring, std::move(coeffs));
        ++report.tested;
        DigitExpansion exp = encode(basis, gamma, max_steps);
        if (exp.status != ExpansionStatus::Terminated) {
            report.all_terminated = false;
            report.counterexample = std::move(gamma);
            return report;
        }
        // odometer increment
        std::size_t pos = 0;
        while (pos < d && point[pos] == box_radius) {
            point[pos] = -box_radius;
            ++pos;
        }
        if (pos == d) break;
        ++point[pos];
    }
    return report;
}

namespace {

SweepEntry check_pair(long k, long m) {
    SweepEntry entry;
    entry.k = k;
    entry.m = m;
    const CriterionReport report = petho_check(base_polynomial(k, m).P);
    entry.passed = report.passed;
    if (!report.passed && report.first_violation)
        entry.violation = *report.first_violation;
    return entry;
}

void run_indexed(std::uint64_t count, int jobs,
                 const std::function<void(std::uint64_t)>& work) {
    if (jobs <= 1 || count < 2) {
        for (std::uint64_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    const unsigned n = static_cast<unsigned>(jobs);
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::uint64_t i = next.fetch_add(1);
                if (i >= count) return;
                work(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace

Theorem1Sweep theorem1_sweep(long phi_max, long m_max, int jobs) {
    if (phi_max > 1'000'000)
        throw InvalidInput("phi_max beyond 10^6 is not supported");
    Theorem1Sweep sweep;
    sweep.phi_max = phi_max;
    sweep.m_max = m_max;

    std::vector<std::pair<long, long>> pairs;
    if (phi_max >= 1) {
        const long k_bound = 2 * phi_max * phi_max + 4;
        for (long k = 3; k <= k_bound; ++k) {
            const auto phi =
                static_cast<long>(euler_phi(static_cast<unsigned long>(k)));
            if (phi > phi_max) continue;
            // warm the memo table before any fan-out
            cyclotomic(static_cast<unsigned long>(k));
            for (long m = phi + 1; m <= m_max; ++m) pairs.emplace_back(k, m);
        }
    }

    sweep.entries.resize(pairs.size());
    run_indexed(pairs.size(), jobs, [&](std::uint64_t i) {
        sweep.entries[i] = check_pair(pairs[i].first, pairs[i].second);
    });

    sweep.pairs = sweep.entries.size();
    for (const SweepEntry& e : sweep.entries) {
        if (e.passed) ++sweep.passes;
    }
    sweep.all_passed = sweep.passes == sweep.pairs;
    return sweep;
}

Ordering remark_boundary(long k, long m) {
    const CnsBasis basis = base_polynomial(k, m);
    const Int& p1 = basis.P.coeff(1);
    const Int& p0 = basis.P.coeff(0);
    if (p1 < p0) return Ordering::Less;
    if (p1 == p0) return Ordering::Equal;
    return Ordering::Greater;
}

} // namespace cyclo
