#ifndef ORELIM_ERRORS_HPP
#define ORELIM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orelim {

// Base class for all library errors. Subclasses separate "bad input text /
// unknown name" (CLI exit 2) from "mathematical precondition violated"
// (CLI exit 3).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- usage / parse errors (exit 2) ---

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct CatalogError : Error {
    using Error::Error;
};

// --- mathematical precondition errors (exit 3) ---

struct MathError : Error {
    using Error::Error;
};

struct InvalidStepError : MathError {
    InvalidStepError() : MathError("discrete derivative step h must be nonzero") {}
};

struct AlgebraMismatchError : MathError {
    using MathError::MathError;
};

struct IndexError : MathError {
    using MathError::MathError;
};

struct DomainError : MathError {
    using MathError::MathError;
};

struct ShapeError : MathError {
    using MathError::MathError;
};

struct ProductUndefinedError : MathError {
    ProductUndefinedError()
        : MathError("matrix product undefined: no finiteness tag and no triangular shortcut") {}
};

struct NoLUError : MathError {
    int failing_minor;
    explicit NoLUError(int k)
        : MathError("no LU factorization: leading " + std::to_string(k) +
                     "-minor is singular"),
          failing_minor(k) {}
};

struct SingularError : MathError {
    using MathError::MathError;
};

struct DegenerateParameterError : MathError {
    using MathError::MathError;
};

}  // namespace orelim

#endif
