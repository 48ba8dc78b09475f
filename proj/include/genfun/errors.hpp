#pragma once

#include <stdexcept>
#include <string>

namespace genfun {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- series errors ---

// Division by a series whose constant term is zero.
struct DivisionByNonUnit : Error {
    using Error::Error;
};

// compose/revert need the inner series to vanish at 0.
struct NonzeroConstantTerm : Error {
    using Error::Error;
};

// revert needs a nonzero linear coefficient.
struct NotInvertible : Error {
    using Error::Error;
};

// log/pow need constant term 1; exp needs constant term 0.
struct BadConstantTerm : Error {
    using Error::Error;
};

// Asked for a coefficient past the truncation order.
struct IndexBeyondOrder : Error {
    using Error::Error;
};

// --- special-function errors ---

struct PoleAtNonpositiveInteger : Error {
    using Error::Error;
};

struct PoleAtOne : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

// --- catalog / harness errors ---

struct UnknownIdentity : Error {
    using Error::Error;
};

// Closed form asked for a point outside its real domain.
struct OutOfDomain : Error {
    using Error::Error;
};

struct QuadratureNonConvergence : Error {
    using Error::Error;
};

} // namespace genfun
