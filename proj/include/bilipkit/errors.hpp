#pragma once

#include <stdexcept>
#include <string>

namespace bilipkit {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inversion (or another origin-singular operation) evaluated at 0.
class OriginError : public Error {
 public:
  using Error::Error;
};

/// Stereographic projection evaluated at (or numerically at) the north pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A sampled map violates the origin hypothesis (or another structural invariant).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

class EmptyRestriction : public Error {
 public:
  using Error::Error;
};

/// No pair of samples could be evaluated.
class DegenerateMap : public Error {
 public:
  using Error::Error;
};

class InsufficientPoints : public Error {
 public:
  using Error::Error;
};

/// Malformed CSV or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace bilipkit
