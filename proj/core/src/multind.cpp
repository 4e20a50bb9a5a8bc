#include "cyclo/multind.hpp"

#include <atomic>
#include <functional>
#include <numeric>
#include <thread>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/residue.hpp"

namespace cyclo {

std::pair<Int, unsigned long> perfect_power_decompose(const Int& a) {
    if (a < 2) throw InputTooSmall("perfect_power_decompose requires a >= 2");
    if (!is_perfect_power(a)) return {a, 1UL};
    // the largest r admitting an exact r-th root is the maximal exponent,
    // and the corresponding base cannot itself be a perfect power
    for (unsigned long r = bit_length(a); r >= 2; --r) {
        if (auto root = exact_root(a, r)) return {*root, r};
    }
    return {a, 1UL}; // unreachable
}

std::optional<std::pair<unsigned long, unsigned long>>
int_mult_dependent(const Int& a, const Int& b) {
    auto [ca, s] = perfect_power_decompose(a);
    auto [cb, t] = perfect_power_decompose(b);
    if (ca != cb) return std::nullopt;
    const unsigned long g = std::gcd(s, t);
    return std::make_pair(t / g, s / g);
}

namespace {

void require_supported_prime(long q) {
    if (q != 17 && q != 19 && q != 23)
        throw NotSupportedPrime("supported primes are 17, 19, 23; got " +
                                std::to_string(q));
}

} // namespace

std::vector<IntPoly> pki_polynomials(long q) {
    require_supported_prime(q);
    const auto uq = static_cast<unsigned long>(q);
    std::vector<IntPoly> ps;
    ps.reserve(uq - 1);
    // (-n)^q + q*n + 1
    ps.push_back(IntPoly::monomial(-1, uq) + IntPoly{1, Int(q)});
    // (-n)^(q-i) * C(q,i) + q*n for i = 1..q-2
    for (unsigned long i = 1; i + 1 < uq; ++i) {
        Int lead = binomial(uq, i);
        if ((uq - i) % 2 == 1) lead = -lead;
        ps.push_back(IntPoly::monomial(std::move(lead), uq - i) +
                     IntPoly{0, Int(q)});
    }
    return ps;
}

std::pair<IntPoly, IntPoly> gcd_certificates(long q) {
    const std::vector<IntPoly> ps = pki_polynomials(q);
    return {gcd_z(ps[0], ps[1]), gcd_z(ps[3], ps[4])};
}

namespace {

struct BasePair {
    RingPtr ring;
    Residue alpha;
    Residue beta;
};

BasePair make_base_pair(long k, long m, long n) {
    RingPtr ring = QuotientRing::make(cyclotomic(static_cast<unsigned long>(k)));
    Residue alpha = Residue::from_coeffs(ring, {Int(-m), Int(1)});
    Residue beta = Residue::from_coeffs(ring, {Int(-n), Int(1)});
    return {std::move(ring), std::move(alpha), std::move(beta)};
}

bool verify_witness(long k, long m, long n, const DependenceWitness& w) {
    BasePair bp = make_base_pair(k, m, n);
    const Residue zeta_j =
        reduce(bp.ring, IntPoly::monomial(1, static_cast<std::size_t>(w.j)));
    return zeta_j * pow(bp.alpha, w.p) == pow(bp.beta, w.q);
}

} // namespace

std::optional<long> algebraic_check(long k, long m, long n, unsigned long p,
                                    unsigned long q) {
    if (k < 3) throw InvalidK("algebraic_check requires k >= 3");
    if (p == 0 && q == 0)
        throw InvalidInput("exponents (p, q) = (0, 0) are excluded");
    BasePair bp = make_base_pair(k, m, n);
    const Residue lhs = pow(bp.alpha, p);
    const Residue rhs = pow(bp.beta, q);
    const Residue x = Residue::from_coeffs(bp.ring, {0, 1});
    Residue zeta_j = Residue::one(bp.ring);
    for (long j = 0; j < k; ++j) {
        if (zeta_j * lhs == rhs) return j;
        zeta_j = zeta_j * x;
    }
    return std::nullopt;
}

IndependenceVerdict independence_verdict(long k, long m, long n) {
    if (k < 3) throw InvalidK("independence_verdict requires k >= 3");
    if (m < 1 || n < 1)
        throw InvalidInput("independence_verdict requires m, n >= 1");
    if (m == n) throw InvalidInput("independence_verdict requires m != n");

    IndependenceVerdict v;
    v.k = k;
    v.m = m;
    v.n = n;
    const IntPoly phi = cyclotomic(static_cast<unsigned long>(k));
    v.norm_m = eval(phi, Int(m));
    v.norm_n = eval(phi, Int(n));

    BasePair bp = make_base_pair(k, m, n);
    const Residue one = Residue::one(bp.ring);
    const unsigned long L =
        static_cast<unsigned long>(k % 2 == 0 ? k : 2 * k); // lcm(2, k)

    if (v.norm_m == 1 || v.norm_n == 1) {
        const bool unit_is_m = v.norm_m == 1;
        const Residue& u = unit_is_m ? bp.alpha : bp.beta;
        if (pow(u, L) == one) {
            unsigned long ord = L;
            for (unsigned long d = 1; d < L; ++d) {
                if (L % d == 0 && pow(u, d) == one) {
                    ord = d;
                    break;
                }
            }
            DependenceWitness w;
            w.p = unit_is_m ? ord : 0;
            w.q = unit_is_m ? 0 : ord;
            w.j = 0;
            w.verified = verify_witness(k, m, n, w);
            v.kind = VerdictKind::Dependent;
            v.witness = w;
            v.detail = std::string(unit_is_m ? "-m" : "-n") +
                       "+zeta_k is a root of unity of order " +
                       std::to_string(ord);
        } else {
            v.kind = VerdictKind::UnitCase;
            v.detail = std::string(unit_is_m ? "-m" : "-n") +
                       "+zeta_k is a unit of infinite order; any relation "
                       "forces both exponents to zero via norms";
        }
        return v;
    }

    const auto dep = int_mult_dependent(v.norm_m, v.norm_n);
    if (!dep) {
        v.kind = VerdictKind::NormIndependent;
        v.detail = "the norms are multiplicatively independent integers";
        return v;
    }

    const auto [p1, q1] = *dep; // norm_m^p1 == norm_n^q1, primitive
    v.primitive_pair = *dep;
    // alpha^(u*p1) = beta^(u*q1) solvable for some u >= 1 iff the quotient
    // is a torsion unit, i.e. iff equality holds at exponent L
    if (pow(bp.alpha, p1 * L) == pow(bp.beta, q1 * L)) {
        for (unsigned long u = 1; u <= L; ++u) {
            const auto j = algebraic_check(k, m, n, u * p1, u * q1);
            if (!j) continue;
            DependenceWitness w;
            w.p = u * p1;
            w.q = u * q1;
            w.j = *j;
            w.verified = verify_witness(k, m, n, w);
            v.kind = VerdictKind::Dependent;
            v.witness = w;
            v.detail = "torsion relation at the primitive norm pair";
            return v;
        }
    }
    v.kind = VerdictKind::TorsionRuledOut;
    v.detail = "norms collide at (" + std::to_string(p1) + ", " +
               std::to_string(q1) +
               ") but the unit quotient is not a root of unity";
    return v;
}

std::vector<NagellSolution> nagell_search(long x_max, long k_max, long q_max) {
    std::vector<NagellSolution> out;
    for (long x = 2; x <= x_max; ++x) {
        Int repunit = Int(x) + 1; // 1 + x, the k = 2 partial sum
        for (long k = 3; k <= k_max; ++k) {
            repunit = repunit * x + 1; // sum_{i<k} x^i
            if (!is_perfect_power(repunit)) continue;
            for (long q = 2; q <= q_max; ++q) {
                const auto y = exact_root(repunit, static_cast<unsigned long>(q));
                if (y && *y > 1) out.push_back({x, *y, k, q});
            }
        }
    }
    return out;
}

std::vector<QuarticSolution> quartic_search(long x_max, long q_max) {
    std::vector<QuarticSolution> out;
    for (long x = 1; x <= x_max; x += 2) {
        const Int v = (Int(x) * x + 3) / 4;
        if (v == 1) {
            for (long q = 1; q <= q_max; ++q) out.push_back({x, Int(1), q});
            continue;
        }
        if (!is_perfect_power(v)) continue;
        for (long q = 2; q <= q_max; ++q) {
            const auto y = exact_root(v, static_cast<unsigned long>(q));
            if (y) out.push_back({x, *y, q});
        }
    }
    return out;
}

namespace {

void run_indexed(std::uint64_t count, int jobs,
                 const std::function<void(std::uint64_t)>& work) {
    if (jobs <= 1 || count < 2) {
        for (std::uint64_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<unsigned>(jobs));
    for (int t = 0; t < jobs; ++t) {
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

IndependenceSweep theorem2_sweep(long k, long range_max, int jobs) {
    if (k < 3) throw InvalidK("theorem2_sweep requires k >= 3");
    IndependenceSweep sweep;
    sweep.k = k;
    sweep.range_max = range_max;

    std::vector<std::pair<long, long>> pairs;
    for (long m = 2; m <= range_max; ++m)
        for (long n = 1; n < m; ++n) pairs.emplace_back(m, n);

    cyclotomic(static_cast<unsigned long>(k)); // warm the memo table

    sweep.entries.resize(pairs.size());
    run_indexed(pairs.size(), jobs, [&](std::uint64_t i) {
        const auto [m, n] = pairs[i];
        const IndependenceVerdict verdict = independence_verdict(k, m, n);
        sweep.entries[i] = {m, n, verdict.kind, verdict.witness};
    });

    sweep.pairs = sweep.entries.size();
    for (const auto& e : sweep.entries) {
        const bool expect_dependent = (k == 6 && e.n == 1);
        const bool is_dependent = e.kind == VerdictKind::Dependent;
        if (!is_dependent) ++sweep.independent;
        const bool matches =
            expect_dependent
                ? (is_dependent && e.witness && e.witness->verified)
                : !is_dependent;
        if (!matches) sweep.unexpected.emplace_back(e.m, e.n);
    }
    sweep.pass = sweep.unexpected.empty();
    return sweep;
}

} // namespace cyclo
