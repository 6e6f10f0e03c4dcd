#pragma once

#include <stdexcept>
#include <string>

namespace skewknh {

// Base class for all library errors. name() returns the error kind as used
// in CLI diagnostics.
class Error : public std::runtime_error {
 public:
  Error(const char* name, const std::string& what)
      : std::runtime_error(what), name_(name) {}
  const char* name() const noexcept { return name_; }

 private:
  const char* name_;
};

#define SKEWKNH_ERROR(Name)                                      \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

SKEWKNH_ERROR(DivisionByZero)
SKEWKNH_ERROR(ContextMismatch)
SKEWKNH_ERROR(ZeroConjugator)
SKEWKNH_ERROR(CountExceedsDegree)
SKEWKNH_ERROR(StrategyUnsupported)
SKEWKNH_ERROR(DivisionByZeroPoly)
SKEWKNH_ERROR(ZeroInput)
SKEWKNH_ERROR(ZeroPoint)
SKEWKNH_ERROR(LengthMismatch)
SKEWKNH_ERROR(ZeroVector)
SKEWKNH_ERROR(DimensionMismatch)
SKEWKNH_ERROR(ZeroModulus)
SKEWKNH_ERROR(InstanceTooLarge)
SKEWKNH_ERROR(DegreeTooHigh)
SKEWKNH_ERROR(WeightInfeasible)
SKEWKNH_ERROR(InvalidField)
SKEWKNH_ERROR(InvalidCode)
SKEWKNH_ERROR(ParseError)

#undef SKEWKNH_ERROR

}  // namespace skewknh
