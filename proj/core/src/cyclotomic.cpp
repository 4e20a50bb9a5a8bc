#include "cyclo/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "cyclo/errors.hpp"

namespace cyclo {

unsigned long euler_phi(unsigned long k) {
    if (k == 0) throw InvalidInput("euler_phi requires k >= 1");
    unsigned long phi = 1;
    unsigned long n = k;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        phi *= p - 1;
        n /= p;
        while (n % p == 0) {
            phi *= p;
            n /= p;
        }
    }
    if (n > 1) phi *= n - 1;
    return phi;
}

unsigned long radical(unsigned long k) {
    if (k == 0) throw InvalidInput("radical requires k >= 1");
    unsigned long rad = 1;
    unsigned long n = k;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        rad *= p;
        while (n % p == 0) n /= p;
    }
    if (n > 1) rad *= n;
    return rad;
}

namespace {

std::mutex g_cyclotomic_mutex;
std::map<unsigned long, IntPoly>& cyclotomic_table() {
    static std::map<unsigned long, IntPoly> table;
    return table;
}

// Caller holds g_cyclotomic_mutex.
const IntPoly& cyclotomic_locked(unsigned long k) {
    auto& table = cyclotomic_table();
    auto it = table.find(k);
    if (it != table.end()) return it->second;

    IntPoly phi;
    if (k == 1) {
        phi = IntPoly{-1, 1}; // X - 1
    } else {
        IntPoly cofactor = IntPoly{1};
        for (unsigned long d = 1; d <= k / 2; ++d) {
            if (k % d == 0) cofactor = cofactor * cyclotomic_locked(d);
        }
        IntPoly xk_minus_1 = IntPoly::monomial(1, k) - IntPoly{1};
        phi = divmod_exact(xk_minus_1, cofactor);
    }
    return table.emplace(k, std::move(phi)).first->second;
}

} // namespace

IntPoly cyclotomic(unsigned long k) {
    if (k == 0) throw InvalidInput("cyclotomic requires k >= 1");
    std::lock_guard<std::mutex> lock(g_cyclotomic_mutex);
    return cyclotomic_locked(k);
}

bool power_reduction_holds(unsigned long k) {
    if (k < 2) throw InvalidInput("power_reduction_holds requires k >= 2");
    const unsigned long q = radical(k);
    return cyclotomic(k) == substitute_power(cyclotomic(q), k / q);
}

CnsBasis CnsBasis::from_polynomial(IntPoly P) {
    if (P.degree() < 1 || !P.is_monic())
        throw NotMonic("basis polynomial must be monic of degree >= 1: " +
                       to_string(P));
    CnsBasis basis;
    basis.P = std::move(P);
    basis.digit_bound = abs(basis.P.coeff(0));
    basis.ring = QuotientRing::make(basis.P);
    return basis;
}

CnsBasis base_polynomial(long k, long m) {
    if (k < 3) throw InvalidK("base_polynomial requires k >= 3");
    if (m < 1) throw InvalidInput("base_polynomial requires m >= 1");
    CnsBasis basis =
        CnsBasis::from_polynomial(taylor_shift(cyclotomic(static_cast<unsigned long>(k)), Int(m)));
    basis.k = k;
    basis.m = m;
    return basis;
}

} // namespace cyclo
