#pragma once

#include <stdexcept>
#include <string>

namespace vwt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings (prime, ramification degree, level, or
/// number of variables differ).
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class NonSquare : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// A product over a Galois orbit did not land in the base field.
class NonRationalDescent : public Error {
 public:
  using Error::Error;
};

class MultivariableUnsupported : public Error {
 public:
  using Error::Error;
};

class ZeroSeries : public Error {
 public:
  using Error::Error;
};

class NotTransversal : public Error {
 public:
  using Error::Error;
};

class NotSubgroup : public Error {
 public:
  using Error::Error;
};

/// A vertex weight and its declared square root disagree.
class InvalidSquareRoot : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Raised when a graph (or the derived graph at some tower level) is not
/// connected. `level` is -1 when no tower is involved.
class Disconnected : public Error {
 public:
  explicit Disconnected(const std::string& what, int level = -1)
      : Error(what), level_(level) {}
  int level() const noexcept { return level_; }

 private:
  int level_;
};

}  // namespace vwt
