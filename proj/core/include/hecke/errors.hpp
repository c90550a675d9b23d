#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- field construction / arithmetic ---

class NonPrimeError : public Error {
 public:
  explicit NonPrimeError(long p)
      : Error("not a prime: " + std::to_string(p)) {}
};

class ReducibleModulusError : public Error {
 public:
  explicit ReducibleModulusError(const std::string& msg) : Error(msg) {}
};

class DegreeMismatchError : public Error {
 public:
  explicit DegreeMismatchError(const std::string& msg) : Error(msg) {}
};

class DivisionByZeroError : public Error {
 public:
  DivisionByZeroError() : Error("inverse of zero") {}
};

class FieldMismatchError : public Error {
 public:
  FieldMismatchError() : Error("operands belong to different fields") {}
};

// --- valued units / characters ---

class NotIntegralError : public Error {
 public:
  explicit NotIntegralError(const std::string& msg = "value is not integral")
      : Error(msg) {}
};

class NotOrdinaryError : public Error {
 public:
  explicit NotOrdinaryError(const std::string& msg = "character is not ordinary")
      : Error(msg) {}
};

class NoCaseMatchedError : public Error {
 public:
  NoCaseMatchedError()
      : Error("no classification case matched any orbit member") {}
};

class InconsistentParamsError : public Error {
 public:
  explicit InconsistentParamsError(const std::string& msg) : Error(msg) {}
};

// --- representations ---

class NotInvertibleError : public Error {
 public:
  explicit NotInvertibleError(const std::string& msg = "matrix is not invertible")
      : Error(msg) {}
};

class RelationViolatedError : public Error {
 public:
  explicit RelationViolatedError(const std::string& which)
      : Error("defining relation violated: " + which), relation(which) {}
  std::string relation;
};

class NotScalarError : public Error {
 public:
  explicit NotScalarError(const std::string& which)
      : Error("central element does not act as a scalar: " + which),
        element(which) {}
  std::string element;
};

class BadParamsError : public Error {
 public:
  explicit BadParamsError(const std::string& msg) : Error(msg) {}
};

// --- decomposition engine ---

class ZeroVectorError : public Error {
 public:
  ZeroVectorError() : Error("cannot spin the zero vector") {}
};

class TooLargeError : public Error {
 public:
  explicit TooLargeError(const std::string& msg) : Error(msg) {}
};

class IdentifyFailedError : public Error {
 public:
  explicit IdentifyFailedError(const std::string& msg) : Error(msg) {}
};

class AmbiguousMatchError : public Error {
 public:
  explicit AmbiguousMatchError(const std::string& msg) : Error(msg) {}
};

}  // namespace hecke
