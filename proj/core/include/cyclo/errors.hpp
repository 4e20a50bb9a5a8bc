#ifndef CYCLO_ERRORS_HPP
#define CYCLO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cyclo {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by the zero polynomial") {}
};

struct NonExactDivision : Error {
    explicit NonExactDivision(const std::string& what) : Error(what) {}
};

struct ZeroPolynomial : Error {
    explicit ZeroPolynomial(const std::string& what) : Error(what) {}
};

struct BothZero : Error {
    BothZero() : Error("gcd of two zero polynomials is undefined") {}
};

struct NotMonic : Error {
    explicit NotMonic(const std::string& what) : Error(what) {}
};

struct RingMismatch : Error {
    RingMismatch() : Error("residues belong to different quotient rings") {}
};

struct DigitOutOfRange : Error {
    explicit DigitOutOfRange(const std::string& what) : Error(what) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

struct InvalidK : Error {
    explicit InvalidK(const std::string& what) : Error(what) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

struct InputTooSmall : Error {
    explicit InputTooSmall(const std::string& what) : Error(what) {}
};

struct NotSupportedPrime : Error {
    explicit NotSupportedPrime(const std::string& what) : Error(what) {}
};

struct InvalidInput : Error {
    explicit InvalidInput(const std::string& what) : Error(what) {}
};

} // namespace cyclo

#endif
