#pragma once

#include <stdexcept>
#include <string>

namespace lagsub {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different ambient spaces or have incompatible shapes.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Scalars from two different quadratic extensions were combined.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// Input text (scalar, type string, JSON payload) could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or brute-force search was asked to run above its rank cap.
class RankCapExceeded : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition of an operation does not hold.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// dim z differs from dim z', so no Lagrangian l0 exists.
class UnequalCenterDimensions : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

}  // namespace lagsub
