#pragma once

#include <stdexcept>
#include <string>

namespace hcolor {

// Argument outside the domain of an operation (unknown color, bad length, not a walk).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Exhaustive routine asked to run beyond its configured size bound.
class RefusedError : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace hcolor
