#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace asw {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidPrimeError : public Error {
public:
  explicit InvalidPrimeError(const std::string& msg) : Error(msg) {}
};

/// Raised by exact integer division when a coefficient is not a multiple of
/// the divisor. Deliberately loud: in the divided-binomial constructions a
/// divisibility failure means the numerator was assembled wrong.
class NonDivisibleError : public Error {
public:
  NonDivisibleError(std::string coeff, std::string divisor)
      : Error("coefficient " + coeff + " is not divisible by " + divisor),
        coefficient(std::move(coeff)),
        divisor(std::move(divisor)) {}
  std::string coefficient;
  std::string divisor;
};

class ModulusMismatchError : public Error {
public:
  explicit ModulusMismatchError(const std::string& msg) : Error(msg) {}
};

class UnknownVariableError : public Error {
public:
  explicit UnknownVariableError(const std::string& msg) : Error(msg) {}
};

class TowerMismatchError : public Error {
public:
  explicit TowerMismatchError(const std::string& msg) : Error(msg) {}
};

class EndoCertificateError : public Error {
public:
  explicit EndoCertificateError(const std::string& msg) : Error(msg) {}
};

class OrderViolationError : public Error {
public:
  explicit OrderViolationError(const std::string& msg) : Error(msg) {}
};

class ClosureOverflowError : public Error {
public:
  explicit ClosureOverflowError(const std::string& msg) : Error(msg) {}
};

class SearchBudgetExceededError : public Error {
public:
  explicit SearchBudgetExceededError(const std::string& msg) : Error(msg) {}
};

class InvalidParamsError : public Error {
public:
  explicit InvalidParamsError(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace asw
