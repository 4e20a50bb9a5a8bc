#ifndef CYCLO_RESIDUE_HPP
#define CYCLO_RESIDUE_HPP

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "cyclo/intpoly.hpp"

namespace cyclo {

class QuotientRing;
using RingPtr = std::shared_ptr<const QuotientRing>;

/// Z[X]/(P) for a monic modulus P of degree >= 1. Immutable; create via
/// make() and share the handle between residues.
class QuotientRing {
public:
    static RingPtr make(IntPoly modulus);

    const IntPoly& modulus() const { return modulus_; }
    long degree() const { return modulus_.degree(); }

    friend bool operator==(const QuotientRing& a, const QuotientRing& b) {
        return &a == &b || a.modulus_ == b.modulus_;
    }

private:
    explicit QuotientRing(IntPoly modulus) : modulus_(std::move(modulus)) {}
    IntPoly modulus_;
};

/// Element of a QuotientRing in canonical reduced form: exactly d
/// coefficients, d = degree of the modulus.
class Residue {
public:
    /// Reduces f modulo the ring's modulus.
    Residue(RingPtr ring, const IntPoly& f);

    /// Canonical form from at most d coefficients (padded with zeros).
    static Residue from_coeffs(RingPtr ring, std::vector<Int> coeffs);

    static Residue zero(RingPtr ring);
    static Residue one(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    IntPoly to_poly() const { return IntPoly(coeffs_); }

    friend bool operator==(const Residue& a, const Residue& b);

    friend Residue operator+(const Residue& a, const Residue& b);
    friend Residue operator-(const Residue& a, const Residue& b);
    friend Residue operator*(const Residue& a, const Residue& b);

private:
    Residue(RingPtr ring, std::vector<Int> coeffs)
        : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}

    RingPtr ring_;
    std::vector<Int> coeffs_; // size == ring degree

    friend Residue pow(const Residue& a, unsigned long e);
};

/// Binary exponentiation; a^0 = 1.
Residue pow(const Residue& a, unsigned long e);

/// Reduce an arbitrary polynomial into the ring.
Residue reduce(const RingPtr& ring, const IntPoly& f);

std::string to_string(const Residue& a);
std::ostream& operator<<(std::ostream& os, const Residue& a);

} // namespace cyclo

#endif
