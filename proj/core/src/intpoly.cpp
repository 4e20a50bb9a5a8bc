#include "cyclo/intpoly.hpp"

#include <ostream>
#include <sstream>

#include "cyclo/errors.hpp"

namespace cyclo {

IntPoly IntPoly::monomial(Int c, std::size_t e) {
    if (c == 0) return IntPoly();
    std::vector<Int> v(e + 1, Int(0));
    v[e] = std::move(c);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& f, const IntPoly& g) {
    const std::size_t n = std::max(f.coeffs_.size(), g.coeffs_.size());
    std::vector<Int> v(n, Int(0));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) v[i] = f.coeffs_[i];
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) v[i] += g.coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& f, const IntPoly& g) {
    const std::size_t n = std::max(f.coeffs_.size(), g.coeffs_.size());
    std::vector<Int> v(n, Int(0));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) v[i] = f.coeffs_[i];
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) v[i] -= g.coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return IntPoly();
    std::vector<Int> v(f.coeffs_.size() + g.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (f.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
            v[i + j] += f.coeffs_[i] * g.coeffs_[j];
        }
    }
    return IntPoly(std::move(v));
}

IntPoly operator*(const Int& c, const IntPoly& f) {
    if (c == 0 || f.is_zero()) return IntPoly();
    std::vector<Int> v(f.coeffs_.size());
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) v[i] = c * f.coeffs_[i];
    return IntPoly(std::move(v));
}

namespace {

// Long division of f by g, staying in Z. Fails (returns nullopt) as soon
// as a leading-coefficient division is not exact or the final remainder is
// nonzero; when f = q*g over Z the division succeeds with integer steps.
std::optional<IntPoly> long_divide_exact(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw DivisionByZero();
    if (f.is_zero()) return IntPoly();
    if (f.degree() < g.degree()) return std::nullopt;

    const Int& glead = g.leading();
    std::vector<Int> rem = f.coeffs();
    std::vector<Int> quot(f.degree() - g.degree() + 1, Int(0));

    for (long i = f.degree(); i >= g.degree(); --i) {
        Int& lead = rem[static_cast<std::size_t>(i)];
        if (lead == 0) continue;
        if (!mpz_divisible_p(lead.get_mpz_t(), glead.get_mpz_t()))
            return std::nullopt;
        Int q;
        mpz_divexact(q.get_mpz_t(), lead.get_mpz_t(), glead.get_mpz_t());
        const std::size_t off = static_cast<std::size_t>(i - g.degree());
        quot[off] = q;
        for (long j = 0; j <= g.degree(); ++j) {
            rem[off + static_cast<std::size_t>(j)] -=
                q * g.coeff(static_cast<std::size_t>(j));
        }
    }
    for (const Int& c : rem) {
        if (c != 0) return std::nullopt;
    }
    return IntPoly(std::move(quot));
}

} // namespace

IntPoly divmod_exact(const IntPoly& f, const IntPoly& g) {
    auto q = long_divide_exact(f, g);
    if (!q) {
        throw NonExactDivision("(" + to_string(f) + ") is not divisible by (" +
                               to_string(g) + ")");
    }
    return *std::move(q);
}

std::optional<IntPoly> try_exact_div(const IntPoly& f, const IntPoly& g) {
    return long_divide_exact(f, g);
}

bool divides(const IntPoly& g, const IntPoly& f) {
    return long_divide_exact(f, g).has_value();
}

IntPoly mod_monic(const IntPoly& f, const IntPoly& g) {
    if (!g.is_monic()) throw NotMonic("modulus must be monic: " + to_string(g));
    if (f.degree() < g.degree()) return f;

    std::vector<Int> rem = f.coeffs();
    for (long i = f.degree(); i >= g.degree(); --i) {
        Int lead = rem[static_cast<std::size_t>(i)];
        if (lead == 0) continue;
        const std::size_t off = static_cast<std::size_t>(i - g.degree());
        for (long j = 0; j <= g.degree(); ++j) {
            rem[off + static_cast<std::size_t>(j)] -=
                lead * g.coeff(static_cast<std::size_t>(j));
        }
    }
    rem.resize(static_cast<std::size_t>(g.degree()));
    return IntPoly(std::move(rem));
}

Int eval(const IntPoly& f, const Int& x) {
    Int acc = 0;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

IntPoly taylor_shift(const IntPoly& f, const Int& a) {
    if (f.is_zero() || a == 0) return f;
    std::vector<Int> c = f.coeffs();
    const long d = f.degree();
    for (long i = 0; i < d; ++i) {
        for (long j = d - 1; j >= i; --j) {
            c[static_cast<std::size_t>(j)] +=
                a * c[static_cast<std::size_t>(j + 1)];
        }
    }
    return IntPoly(std::move(c));
}

IntPoly substitute_power(const IntPoly& f, unsigned long t) {
    if (t == 0) throw InvalidInput("substitute_power requires t >= 1");
    if (t == 1 || f.is_zero()) return f;
    std::vector<Int> v(static_cast<std::size_t>(f.degree()) * t + 1, Int(0));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) v[i * t] = f.coeff(i);
    return IntPoly(std::move(v));
}

IntPoly derivative(const IntPoly& f) {
    if (f.degree() <= 0) return IntPoly();
    std::vector<Int> v(static_cast<std::size_t>(f.degree()));
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
        v[i - 1] = Int(static_cast<unsigned long>(i)) * f.coeff(i);
    }
    return IntPoly(std::move(v));
}

std::pair<Int, IntPoly> content_and_primitive(const IntPoly& f) {
    if (f.is_zero())
        throw ZeroPolynomial("content of the zero polynomial is undefined");
    Int c = 0;
    for (const Int& a : f.coeffs()) c = int_gcd(c, a);
    if (f.leading() < 0) c = -c;
    std::vector<Int> v(f.coeffs().size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        mpz_divexact(v[i].get_mpz_t(), f.coeff(i).get_mpz_t(), c.get_mpz_t());
    }
    return {c, IntPoly(std::move(v))};
}

namespace {

// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f reduced by g. Inputs
// nonzero, deg f >= deg g.
IntPoly pseudo_rem(const IntPoly& f, const IntPoly& g) {
    const Int& glead = g.leading();
    std::vector<Int> rem = f.coeffs();
    long top = f.degree();
    for (long i = f.degree(); i >= g.degree(); --i) {
        // scale the live part so the next elimination stays integral
        for (long j = 0; j < i; ++j) rem[static_cast<std::size_t>(j)] *= glead;
        Int lead = rem[static_cast<std::size_t>(i)];
        rem[static_cast<std::size_t>(i)] = 0;
        const std::size_t off = static_cast<std::size_t>(i - g.degree());
        for (long j = 0; j < g.degree(); ++j) {
            rem[off + static_cast<std::size_t>(j)] -=
                lead * g.coeff(static_cast<std::size_t>(j));
        }
        top = i - 1;
    }
    rem.resize(top < 0 ? 0 : static_cast<std::size_t>(top) + 1);
    return IntPoly(std::move(rem));
}

} // namespace

IntPoly gcd_z(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() && g.is_zero()) throw BothZero();
    if (f.is_zero()) {
        auto [c, p] = content_and_primitive(g);
        return Int(abs(c)) * p;
    }
    if (g.is_zero()) {
        auto [c, p] = content_and_primitive(f);
        return Int(abs(c)) * p;
    }

    auto [cf, pf] = content_and_primitive(f);
    auto [cg, pg] = content_and_primitive(g);
    Int c = int_gcd(cf, cg);

    // primitive polynomial remainder sequence
    IntPoly a = std::move(pf);
    IntPoly b = std::move(pg);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b);
        a = std::move(b);
        if (r.is_zero()) {
            b = IntPoly();
        } else {
            b = content_and_primitive(r).second;
        }
    }
    return c * a;
}

std::string to_string(const IntPoly& f, const char* var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = f.degree(); i >= 0; --i) {
        const Int& c = f.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& f) {
    return os << to_string(f);
}

} // namespace cyclo
