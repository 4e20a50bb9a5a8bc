#include "cyclo/residue.hpp"

#include <algorithm>
#include <ostream>

#include "cyclo/errors.hpp"

namespace cyclo {

namespace {

void check_same_ring(const Residue& a, const Residue& b) {
    if (!(*a.ring() == *b.ring())) throw RingMismatch();
}

std::vector<Int> reduced_coeffs(const QuotientRing& ring, const IntPoly& f) {
    IntPoly r = mod_monic(f, ring.modulus());
    std::vector<Int> v = r.coeffs();
    v.resize(static_cast<std::size_t>(ring.degree()), Int(0));
    return v;
}

} // namespace

RingPtr QuotientRing::make(IntPoly modulus) {
    if (modulus.degree() < 1)
        throw NotMonic("modulus must have degree >= 1: " + to_string(modulus));
    if (!modulus.is_monic())
        throw NotMonic("modulus must be monic: " + to_string(modulus));
    return RingPtr(new QuotientRing(std::move(modulus)));
}

Residue::Residue(RingPtr ring, const IntPoly& f)
    : ring_(std::move(ring)), coeffs_(reduced_coeffs(*ring_, f)) {}

Residue Residue::from_coeffs(RingPtr ring, std::vector<Int> coeffs) {
    const auto d = static_cast<std::size_t>(ring->degree());
    if (coeffs.size() > d)
        return Residue(std::move(ring), IntPoly(std::move(coeffs)));
    coeffs.resize(d, Int(0));
    return Residue(std::move(ring), std::move(coeffs));
}

Residue Residue::zero(RingPtr ring) {
    std::vector<Int> v(static_cast<std::size_t>(ring->degree()), Int(0));
    return Residue(std::move(ring), std::move(v));
}

Residue Residue::one(RingPtr ring) {
    std::vector<Int> v(static_cast<std::size_t>(ring->degree()), Int(0));
    v[0] = 1;
    return Residue(std::move(ring), std::move(v));
}

bool Residue::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Int& c) { return c == 0; });
}

bool operator==(const Residue& a, const Residue& b) {
    check_same_ring(a, b);
    return a.coeffs_ == b.coeffs_;
}

Residue operator+(const Residue& a, const Residue& b) {
    check_same_ring(a, b);
    std::vector<Int> v(a.coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a.coeffs_[i] + b.coeffs_[i];
    return Residue::from_coeffs(a.ring(), std::move(v));
}

Residue operator-(const Residue& a, const Residue& b) {
    check_same_ring(a, b);
    std::vector<Int> v(a.coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a.coeffs_[i] - b.coeffs_[i];
    return Residue::from_coeffs(a.ring(), std::move(v));
}

Residue operator*(const Residue& a, const Residue& b) {
    check_same_ring(a, b);
    return Residue(a.ring(), a.to_poly() * b.to_poly());
}

Residue pow(const Residue& a, unsigned long e) {
    Residue acc = Residue::one(a.ring());
    Residue base = a;
    while (e > 0) {
        if (e & 1UL) acc = acc * base;
        e >>= 1UL;
        if (e > 0) base = base * base;
    }
    return acc;
}

Residue reduce(const RingPtr& ring, const IntPoly& f) {
    return Residue(ring, f);
}

std::string to_string(const Residue& a) { return to_string(a.to_poly()); }

std::ostream& operator<<(std::ostream& os, const Residue& a) {
    return os << to_string(a);
}

} // namespace cyclo
