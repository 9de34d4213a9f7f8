#pragma once

#include <stdexcept>
#include <string>

namespace quadcrit {

enum class ErrorKind {
  Parse,
  AffineMapNotSupported,
  NotDegenerate,
  NotACurve,
  NotNormalizable,
  PreconditionViolated,
  RootFindingFailed,
  DegenerateSystemUnresolved,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error(ErrorKind::Parse, message) {}
};

class AffineMapNotSupported : public Error {
 public:
  AffineMapNotSupported()
      : Error(ErrorKind::AffineMapNotSupported,
              "all six quadratic coefficients are zero; affine maps are not supported") {}
};

}  // namespace quadcrit
