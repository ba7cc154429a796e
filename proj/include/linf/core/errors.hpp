#pragma once

#include <stdexcept>
#include <string>

namespace linf {

/// Bad argument shape: arity or length mismatch, non-homogeneous data.
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Operands that do not fit together (carrier or variant mismatch).
class StructuralError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A documented precondition of an algorithm was not met by the input.
class PreconditionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class InversionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a property that holds by theorem fails on computed data.
/// Always an implementation bug, never an input problem.
class InternalConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SemanticError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace linf
