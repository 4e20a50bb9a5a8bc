#ifndef CYCLO_TESTS_RANDOM_GEN_HPP
#define CYCLO_TESTS_RANDOM_GEN_HPP

#include <random>
#include <vector>

#include "cyclo/intpoly.hpp"

namespace cyclo::testing {

// Deterministic generator for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }

    Int coefficient(long magnitude = 9) {
        return Int(integer(-magnitude, magnitude));
    }

    IntPoly poly(long max_degree = 6, long magnitude = 9) {
        const long d = integer(-1, max_degree); // -1 gives the zero polynomial
        std::vector<Int> c;
        for (long i = 0; i <= d; ++i) c.push_back(coefficient(magnitude));
        return IntPoly(std::move(c));
    }

    IntPoly nonzero_poly(long max_degree = 6, long magnitude = 9) {
        for (;;) {
            IntPoly f = poly(max_degree, magnitude);
            if (!f.is_zero()) return f;
        }
    }

    IntPoly monic_poly(long degree, long magnitude = 9) {
        std::vector<Int> c;
        for (long i = 0; i < degree; ++i) c.push_back(coefficient(magnitude));
        c.emplace_back(1);
        return IntPoly(std::move(c));
    }

private:
    std::mt19937_64 rng_;
};

} // namespace cyclo::testing

#endif
