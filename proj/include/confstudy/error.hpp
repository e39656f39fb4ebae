#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace confstudy {

// Mathematical precondition failures. The CLI maps these to exit code 2.
enum class ErrorCode {
  NotAVector,
  ZeroVector,
  ZeroElement,
  NotEven,
  NotOnStudy,
  NotALine,
  ZeroDirection,
  DegenerateBlade,
  NormalizeAtInfinity,
  InvalidParams,
  NotRotorPolynomial,
  UnfactorableOverRationals,
  NoFactorization,
  DivisionByZero,
  CountMismatch,
};

std::string_view to_string(ErrorCode code);

class MathError : public std::runtime_error {
 public:
  MathError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

// Malformed input documents. The CLI maps these to exit code 1.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace confstudy
