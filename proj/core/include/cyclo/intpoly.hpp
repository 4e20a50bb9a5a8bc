#ifndef CYCLO_INTPOLY_HPP
#define CYCLO_INTPOLY_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/intmath.hpp"

namespace cyclo {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients. Coefficient of X^i sits at index i; trailing zeros are
/// trimmed, so the zero polynomial is the empty sequence. Values are
/// immutable once constructed.
class IntPoly {
public:
    IntPoly() = default;

    explicit IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    IntPoly(std::initializer_list<Int> coeffs)
        : coeffs_(coeffs) {
        trim();
    }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(Int c) { return IntPoly{std::move(c)}; }
    static IntPoly x() { return IntPoly{0, 1}; }

    /// c * X^e
    static IntPoly monomial(Int c, std::size_t e);

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    /// Coefficient of X^i (zero beyond the degree).
    const Int& coeff(std::size_t i) const {
        static const Int kZero = 0;
        return i < coeffs_.size() ? coeffs_[i] : kZero;
    }

    const std::vector<Int>& coeffs() const { return coeffs_; }

    const Int& leading() const { return coeffs_.back(); }

    bool is_monic() const { return !is_zero() && leading() == 1; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    IntPoly operator-() const;

    friend IntPoly operator+(const IntPoly& f, const IntPoly& g);
    friend IntPoly operator-(const IntPoly& f, const IntPoly& g);
    friend IntPoly operator*(const IntPoly& f, const IntPoly& g);
    friend IntPoly operator*(const Int& c, const IntPoly& f);

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

/// Exact quotient f / g over the integers. Throws NonExactDivision if the
/// division leaves a remainder, DivisionByZero for g = 0.
IntPoly divmod_exact(const IntPoly& f, const IntPoly& g);

/// Quotient f / g when the division is exact over the integers, nullopt
/// otherwise. Throws DivisionByZero for g = 0.
std::optional<IntPoly> try_exact_div(const IntPoly& f, const IntPoly& g);

/// True iff g divides f exactly over the integers.
bool divides(const IntPoly& g, const IntPoly& f);

/// Remainder of f modulo a monic divisor (always integer-exact).
IntPoly mod_monic(const IntPoly& f, const IntPoly& g);

/// Horner evaluation at an integer point.
Int eval(const IntPoly& f, const Int& x);

/// g with g(X) = f(X + a), computed by iterated synthetic division.
IntPoly taylor_shift(const IntPoly& f, const Int& a);

/// f(X^t) for t >= 1.
IntPoly substitute_power(const IntPoly& f, unsigned long t);

/// Formal derivative.
IntPoly derivative(const IntPoly& f);

/// Splits f = c * p with p primitive. The content c carries the sign of
/// the leading coefficient, so p always has positive leading coefficient.
/// Throws ZeroPolynomial for f = 0.
std::pair<Int, IntPoly> content_and_primitive(const IntPoly& f);

/// gcd over Z[X]: gcd of the contents times the primitive gcd of the
/// primitive parts, normalized to a positive leading coefficient.
/// Throws BothZero when both inputs are zero.
IntPoly gcd_z(const IntPoly& f, const IntPoly& g);

/// Human-readable rendering, e.g. "X^2 + 2*X + 2".
std::string to_string(const IntPoly& f, const char* var = "X");

std::ostream& operator<<(std::ostream& os, const IntPoly& f);

} // namespace cyclo

#endif
