#pragma once

#include <stdexcept>
#include <string>

namespace hermtri {

/// Text or JSON input that cannot be parsed into the expected structure.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was handed an object that violates its structural invariants
/// (e.g. a non-triangular set passed to normal_form).
class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A polynomial does not have the shifted-basis shape of a primary component
/// at the requested point.
class ShapeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Inversion requested for an element that vanishes at the local point.
class NonUnitError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A generator spec that no family can satisfy.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hermtri
