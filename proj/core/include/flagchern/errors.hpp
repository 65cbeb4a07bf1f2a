#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flagchern {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---- dimension vectors and decompositions ----

struct EmptyOrShortVector : Error {
    using Error::Error;
};

struct NonPositivePart : Error {
    using Error::Error;
};

struct InvalidDecomposition : Error {
    using Error::Error;
};

struct TooManyDecompositions : Error {
    using Error::Error;
};

struct DuplicateAssignmentValue : Error {
    using Error::Error;
};

// ---- symmetric-polynomial expressions ----

/// Syntax error in an expression; `position` is a 0-based byte offset
/// into the input text.
struct ParseError : Error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& what)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Generators are indexed from 1; "e0" and "p0" are rejected.
struct ZeroGeneratorIndex : ParseError {
    using ParseError::ParseError;
};

struct PartitionWeightMismatch : Error {
    using Error::Error;
};

struct DegreeNotBelowD : Error {
    using Error::Error;
};

struct DegreeMismatch : Error {
    using Error::Error;
};

// ---- residue engine ----

/// The residue sum of a degree-d polynomial came out assignment-dependent.
/// This never happens for a correct engine; it signals an internal bug.
struct NonConstantResidue : Error {
    using Error::Error;
};

struct NonIntegerChernNumber : Error {
    using Error::Error;
};

// ---- flag geometry oracle ----

struct ShapeMismatch : Error {
    using Error::Error;
};

struct NotInChart : Error {
    using Error::Error;
};

struct IllConditioned : Error {
    using Error::Error;
};

struct ZeroScalar : Error {
    using Error::Error;
};

struct WeightExtractionFailed : Error {
    using Error::Error;
};

}  // namespace flagchern
