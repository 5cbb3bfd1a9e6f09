#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orthokit {

enum class ErrorCode {
  NotPrime,
  ReducibleModulus,
  BadModulus,
  DivideByZero,
  MixedFields,
  LogOfZero,
  EqualPoints,
  EmptySet,
  BadDimension,
  GeometryMismatch,
  OddDimension,
  NotCoprime,
  SizeMismatch,
  FieldMismatch,
  UnknownName,
  KPlus1NotPrime,
  AffineQ2Undefined,
  UnverifiedCertificate,
  NotPermutation,
  InvalidArgument,
  TooLarge,
  MalformedBundle,
};

/// Stable upper-snake name, e.g. "REDUCIBLE_MODULUS".
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace orthokit
