#pragma once

#include <stdexcept>
#include <string>

namespace quartic {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands built over different variable tables, wrong arity, malformed input.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// A differential operator was asked to act on a parameter variable.
class RoleError : public Error {
public:
    using Error::Error;
};

class DegreeError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

/// Parameters sit on an excluded locus (double conic, collapsed normal form, ...).
class DegeneracyError : public Error {
public:
    using Error::Error;
};

/// Iterative numerics failed to converge or to certify.
class NumericError : public Error {
public:
    using Error::Error;
};

class ParseError : public StructuralError {
public:
    using StructuralError::StructuralError;
};

}  // namespace quartic
