#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace colsym {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A variable index lies outside the m-by-n matrix (or outside y_1..y_m).
class VariableOutOfShape : public Error {
public:
    using Error::Error;
};

/// Operands belong to rings of different shapes.
class ShapeMismatch : public Error {
public:
    using Error::Error;
};

/// Row index outside 1..m.
class RowOutOfRange : public Error {
public:
    using Error::Error;
};

/// Substitution map does not cover a variable of the input.
class MissingAssignment : public Error {
public:
    using Error::Error;
};

/// n! enumeration refused because n exceeds the configured limit.
class EnumerationLimitExceeded : public Error {
public:
    using Error::Error;
};

/// Input of degree > n where an element of the degree-n quotient is required.
class DegreeExceedsN : public Error {
public:
    using Error::Error;
};

/// Input contains a term with two factors from one column.
class NotAdmissible : public Error {
public:
    using Error::Error;
};

/// Input is not invariant under the column permutations.
class NotColumnSymmetric : public Error {
public:
    using Error::Error;
};

/// The 1-form fails the closedness criterion.
class NotClosed : public Error {
public:
    using Error::Error;
};

/// Parse failure, annotated with the 0-based offset into the source text.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Matrix, row and ambient variables may not be mixed in one expression.
class MixedVariableKinds : public SyntaxError {
public:
    using SyntaxError::SyntaxError;
};

}  // namespace colsym
