#pragma once

#include <stdexcept>
#include <string>

namespace padcell {

// Base class for all domain errors raised by this library. API misuse
// (null pointers, malformed constructor arguments) throws std::invalid_argument
// instead; only conditions a correct caller can run into use these types.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

// A result whose leading digits are not determined by the inputs' known
// digits (cancellation past the precision window, or a branch test on an
// imprecise value).
struct InsufficientPrecision : Error {
    using Error::Error;
    InsufficientPrecision() : Error("insufficient precision") {}
};

// Zero passed where a nonzero value is required (ord-normalized operations,
// coset membership, angular components).
struct ZeroArgument : Error {
    using Error::Error;
    ZeroArgument() : Error("zero argument") {}
};

struct OrderNotDivisible : Error {
    using Error::Error;
    OrderNotDivisible() : Error("valuation not divisible by root index") {}
};

struct BothZero : Error {
    BothZero() : Error("both arguments are zero") {}
};

struct SyntaxError : Error {
    int line;
    int column;
    SyntaxError(const std::string& what, int line_, int column_)
        : Error(what + " at " + std::to_string(line_) + ":" + std::to_string(column_)),
          line(line_), column(column_) {}
};

struct ScopeError : Error {
    using Error::Error;
};

// Raised when a term falls outside the fragment the rewriting machinery
// handles (e.g. a guarded division whose guard cannot be expressed as
// region constraints).
struct UnsupportedTerm : Error {
    using Error::Error;
};

struct BranchNotConstant : Error {
    using Error::Error;
};

// The adaptive refinement hit its depth or work cap. Never downgraded to an
// approximate answer.
struct DepthExceeded : Error {
    using Error::Error;
};

} // namespace padcell
