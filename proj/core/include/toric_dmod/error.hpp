#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace toric {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (expressions, fan or module documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

enum class FanErrorKind {
  BadConeIndex,
  ZeroRay,
  NonPrimitiveRay,
  DuplicateRay,
  NonSimplicialCone,
  NonSmoothCone,
  RaysDoNotSpan,
};

const char* to_string(FanErrorKind kind);

class InvalidFan : public Error {
 public:
  InvalidFan(FanErrorKind kind, std::optional<std::size_t> cone, const std::string& what)
      : Error(what), kind_(kind), cone_(cone) {}

  FanErrorKind kind() const { return kind_; }
  // 0-based index into Fan::maximal_cones, when the failure is tied to a cone.
  std::optional<std::size_t> cone() const { return cone_; }

 private:
  FanErrorKind kind_;
  std::optional<std::size_t> cone_;
};

class UnknownCone : public Error {
 public:
  using Error::Error;
};

class ConeNotMaximal : public Error {
 public:
  using Error::Error;
};

class ConeNotSmooth : public Error {
 public:
  using Error::Error;
};

class InhomogeneousInput : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class NotInJp : public Error {
 public:
  using Error::Error;
};

class BoxTooSmall : public Error {
 public:
  using Error::Error;
};

}  // namespace toric
