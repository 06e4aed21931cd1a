#pragma once

#include <stdexcept>
#include <string>

namespace realroots {

/// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition on mathematical input was violated (CLI exit code 3).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (CLI exit code 2).
class UsageError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public DomainError {
public:
    DivisionByZero() : DomainError("division by zero") {}
};

class DivisionByZeroPoly : public DomainError {
public:
    DivisionByZeroPoly() : DomainError("polynomial division by the zero polynomial") {}
};

class BothZero : public DomainError {
public:
    BothZero() : DomainError("gcd of two zero polynomials") {}
};

class ZeroPolynomial : public DomainError {
public:
    explicit ZeroPolynomial(const std::string& op)
        : DomainError(op + ": zero polynomial not allowed") {}
};

class ConstantPolynomial : public DomainError {
public:
    explicit ConstantPolynomial(const std::string& op)
        : DomainError(op + ": constant polynomial not allowed") {}
};

class BadInterval : public DomainError {
public:
    BadInterval() : DomainError("interval endpoints must satisfy a < b") {}
};

class DegenerateSequence : public DomainError {
public:
    DegenerateSequence() : DomainError("Sylvester sequence is degenerate: f'*g = 0") {}
};

class AllZeroGenerators : public DomainError {
public:
    AllZeroGenerators() : DomainError("ideal generators are all zero") {}
};

class NotZeroDimensional : public DomainError {
public:
    NotZeroDimensional()
        : DomainError("ideal is not zero-dimensional: some variable has no pure "
                      "power among the leading terms") {}
};

class SearchExhausted : public DomainError {
public:
    SearchExhausted()
        : DomainError("no separating linear form found in the candidate set") {}
};

/// Parse failure; `position` is a 0-based offset into the source text.
class SyntaxError : public UsageError {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : UsageError(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class UnknownVariable : public UsageError {
public:
    explicit UnknownVariable(const std::string& name)
        : UsageError("unknown variable '" + name + "'") {}
};

} // namespace realroots
