#include "cyclo/residue.hpp"

#include "cyclo/cyclotomic.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/multind.hpp"
#include "doctest.h"
#include "random_gen.hpp"

using namespace cyclo;
using cyclo::testing::Gen;

TEST_CASE("ring construction requires a monic modulus of positive degree") {
    CHECK_THROWS_AS(QuotientRing::make(IntPoly{1, 2}), NotMonic);
    CHECK_THROWS_AS(QuotientRing::make(IntPoly{7}), NotMonic);
    RingPtr ring = QuotientRing::make(IntPoly{1, 0, 1});
    CHECK(ring->degree() == 2);
}

TEST_CASE("reduction to canonical form") {
    RingPtr gauss = QuotientRing::make(IntPoly{1, 0, 1}); // X^2 + 1
    CHECK(reduce(gauss, IntPoly{0, 0, 1}) ==
          Residue::from_coeffs(gauss, {-1, 0}));

    // X^16 mod Phi_17 = -(1 + X + ... + X^15)
    RingPtr seventeen = QuotientRing::make(cyclotomic(17));
    std::vector<Int> expect(16, Int(-1));
    CHECK(reduce(seventeen, IntPoly::monomial(1, 16)) ==
          Residue::from_coeffs(seventeen, std::move(expect)));

    IntPoly low = IntPoly{5, -3};
    CHECK(reduce(gauss, low).to_poly() == low);
}

TEST_CASE("residue multiplication and powers") {
    // -1 + zeta_6 = zeta_3, so (-1 + X)^3 = 1 mod X^2 - X + 1
    RingPtr six = QuotientRing::make(IntPoly{1, -1, 1});
    Residue a = Residue::from_coeffs(six, {-1, 1});
    CHECK(pow(a, 3) == Residue::one(six));

    Residue b = Residue::from_coeffs(six, {4, -7});
    CHECK(pow(b, 1) == b);
    CHECK(pow(b, 0) == Residue::one(six));
}

TEST_CASE("powers of -n + zeta_17 match the coefficient polynomials") {
    RingPtr ring = QuotientRing::make(cyclotomic(17));
    const std::vector<IntPoly> pki = pki_polynomials(17);
    for (long n0 = 1; n0 <= 3; ++n0) {
        Residue base = Residue::from_coeffs(ring, {Int(-n0), 1});
        Residue power = pow(base, 17);
        for (std::size_t i = 0; i < 16; ++i) {
            CHECK(power.coeffs()[i] == eval(pki[i], n0));
        }
    }
}

TEST_CASE("ring mismatch is rejected") {
    RingPtr r1 = QuotientRing::make(IntPoly{1, 0, 1});
    RingPtr r2 = QuotientRing::make(IntPoly{1, 1, 1});
    Residue a = Residue::one(r1);
    Residue b = Residue::one(r2);
    CHECK_THROWS_AS((void)(a * b), RingMismatch);
    CHECK_THROWS_AS((void)(a == b), RingMismatch);
}

TEST_CASE("same modulus means same ring even across handles") {
    RingPtr r1 = QuotientRing::make(IntPoly{1, 0, 1});
    RingPtr r2 = QuotientRing::make(IntPoly{1, 0, 1});
    Residue a = Residue::from_coeffs(r1, {0, 1});
    Residue b = Residue::from_coeffs(r2, {0, 1});
    CHECK(a * b == Residue::from_coeffs(r1, {-1, 0}));
}

TEST_CASE("power additivity on random residues") {
    Gen gen(31337);
    RingPtr rings[] = {
        QuotientRing::make(IntPoly{1, 0, 1}),
        QuotientRing::make(cyclotomic(7)),
        QuotientRing::make(IntPoly{3, -2, 5, 1}),
    };
    for (int i = 0; i < 1200; ++i) {
        const RingPtr& ring = rings[gen.integer(0, 2)];
        std::vector<Int> coeffs;
        for (long j = 0; j < ring->degree(); ++j)
            coeffs.push_back(gen.coefficient(4));
        Residue a = Residue::from_coeffs(ring, std::move(coeffs));
        const auto e1 = static_cast<unsigned long>(gen.integer(0, 6));
        const auto e2 = static_cast<unsigned long>(gen.integer(0, 6));
        CHECK(pow(a, e1 + e2) == pow(a, e1) * pow(a, e2));
    }
}
