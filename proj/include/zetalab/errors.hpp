#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

// Base of every error the toolkit throws. The CLI maps subclasses onto exit
// codes: argument/geometry problems -> 2, numerical failures -> 4's sibling 3.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Bad argument or violated precondition.
class DomainError : public Error {
public:
    using Error::Error;
};

// Evaluation at (or inside the guard radius of) a pole.
class PoleError : public Error {
public:
    using Error::Error;
};

// Inside the guard radius of a zero of the prefactor 1 - 2^(1-s) other than s=1.
class PrefactorSingular : public Error {
public:
    using Error::Error;
};

// A check harness was handed data that violates the lemma's hypotheses.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Requested contour/circle geometry cannot be realized (e.g. nonpositive radii).
class InfeasibleGeometry : public Error {
public:
    using Error::Error;
};

// Term budget exhausted before the tolerance target was met.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// A magnitude left the representable range (exponent guard tripped).
class OverflowError : public Error {
public:
    using Error::Error;
};

// |f| fell below the zero tolerance at a sample on an integration path.
class ZeroOnPath : public Error {
public:
    using Error::Error;
};

// Adaptive refinement hit the depth cap without satisfying the step criterion.
class DepthExceeded : public Error {
public:
    using Error::Error;
};

// Closed-contour argument total failed to round to an integer winding.
class NonIntegerWinding : public Error {
public:
    using Error::Error;
};

}  // namespace zetalab
