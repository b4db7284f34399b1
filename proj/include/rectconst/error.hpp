#pragma once

#include <stdexcept>

namespace rectconst {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vector length does not match the norm, or the operation needs another dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Argument outside the operation's domain: zero vector, NaN/Inf, lambda <= 0, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

// Vertex set does not describe a bounded symmetric body with 0 in its interior.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// Geometric hypothesis of a check does not hold (e.g. the points are not a sphere segment).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A computation lost the property it is supposed to deliver (e.g. empty orthogonal cone).
class NumericalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace rectconst
