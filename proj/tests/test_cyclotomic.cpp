#include "cyclo/cyclotomic.hpp"

#include <numeric>

#include "cyclo/errors.hpp"
#include "doctest.h"

using namespace cyclo;

namespace {

// brute-force totient
unsigned long phi_oracle(unsigned long k) {
    unsigned long count = 0;
    for (unsigned long i = 1; i <= k; ++i)
        if (std::gcd(i, k) == 1) ++count;
    return count;
}

// brute-force radical
unsigned long radical_oracle(unsigned long k) {
    unsigned long rad = 1;
    for (unsigned long p = 2; p <= k; ++p) {
        if (k % p != 0) continue;
        bool prime = true;
        for (unsigned long d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (prime) rad *= p;
    }
    return rad;
}

bool is_prime_power(unsigned long k, unsigned long& p_out) {
    for (unsigned long p = 2; p <= k; ++p) {
        if (k % p != 0) continue;
        unsigned long n = k;
        while (n % p == 0) n /= p;
        p_out = p;
        return n == 1;
    }
    return false;
}

} // namespace

TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(11) == 10);
    CHECK(euler_phi(12) == phi_oracle(12));
    for (unsigned long k = 1; k <= 200; ++k) CHECK(euler_phi(k) == phi_oracle(k));
    CHECK_THROWS_AS(euler_phi(0), InvalidInput);
}

TEST_CASE("radical") {
    CHECK(radical(8) == 2);
    CHECK(radical(12) == 6);
    CHECK(radical(13) == 13);
    for (unsigned long k = 1; k <= 200; ++k)
        CHECK(radical(k) == radical_oracle(k));
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == IntPoly{-1, 1});
    CHECK(cyclotomic(4) == IntPoly{1, 0, 1});
    CHECK(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});
}

TEST_CASE("divisor product identity up to 200") {
    for (unsigned long k = 1; k <= 200; ++k) {
        IntPoly prod = IntPoly{1};
        for (unsigned long d = 1; d <= k; ++d)
            if (k % d == 0) prod = prod * cyclotomic(d);
        CHECK(prod == IntPoly::monomial(1, k) - IntPoly{1});
        CHECK(cyclotomic(k).degree() == static_cast<long>(euler_phi(k)));
    }
}

TEST_CASE("constant terms and values at one") {
    CHECK(eval(cyclotomic(1), 0) == -1);
    for (unsigned long k = 2; k <= 200; ++k) {
        CHECK(eval(cyclotomic(k), 0) == 1);
        // Phi_k(1) = p exactly for prime powers p^l, otherwise 1
        unsigned long p = 0;
        const Int expect = is_prime_power(k, p) ? Int(p) : Int(1);
        CHECK(eval(cyclotomic(k), 1) == expect);
    }
}

TEST_CASE("power reduction identity up to 200") {
    CHECK(power_reduction_holds(2));
    CHECK(power_reduction_holds(9));
    CHECK(power_reduction_holds(12));
    for (unsigned long k = 2; k <= 200; ++k) CHECK(power_reduction_holds(k));
}

TEST_CASE("base polynomial construction") {
    CnsBasis knuth = base_polynomial(4, 1);
    CHECK(knuth.P == IntPoly{2, 2, 1});
    CHECK(knuth.digit_bound == 2);

    CnsBasis b33 = base_polynomial(3, 3);
    CHECK(b33.P == IntPoly{13, 7, 1});
    CHECK(b33.digit_bound == 13);

    CnsBasis b11 = base_polynomial(11, 10);
    CHECK(b11.digit_bound == (int_pow(10, 11) - 1) / 9);
    CHECK(b11.P.degree() == 10);

    CHECK_THROWS_AS(base_polynomial(2, 5), InvalidK);
    CHECK_THROWS_AS(base_polynomial(5, 0), InvalidInput);
}

TEST_CASE("ad-hoc bases accept any monic polynomial") {
    CnsBasis lin = CnsBasis::from_polynomial(IntPoly{2, 1}); // X + 2
    CHECK(lin.digit_bound == 2);
    CHECK(lin.k == 0);
    CnsBasis neg = CnsBasis::from_polynomial(IntPoly{-2, 1}); // X - 2
    CHECK(neg.digit_bound == 2);
    CHECK_THROWS_AS(CnsBasis::from_polynomial(IntPoly{2, 3}), NotMonic);
}

TEST_CASE("shifted coefficients are positive above the theorem bound") {
    for (long k = 3; k <= 30; ++k) {
        const auto phi = static_cast<long>(euler_phi(static_cast<unsigned long>(k)));
        for (long m = phi + 1; m <= phi + 5; ++m) {
            const CnsBasis basis = base_polynomial(k, m);
            for (const Int& c : basis.P.coeffs()) CHECK(c > 0);
        }
    }
}
