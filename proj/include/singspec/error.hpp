#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace singspec {

/// Base of every error raised by the library. Callers that only need to
/// distinguish "bad input" from "internal bug" can catch this and
/// ConsistencyFailure separately.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define SINGSPEC_ERROR(Name)                                         \
  class Name : public Error {                                        \
   public:                                                           \
    using Error::Error;                                              \
    const char* kind() const noexcept override { return #Name; }     \
  }

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error("syntax error at byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }
  const char* kind() const noexcept override { return "SyntaxError"; }

 private:
  std::size_t offset_;
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(std::string name)
      : Error("unknown variable '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }
  const char* kind() const noexcept override { return "UnknownVariable"; }

 private:
  std::string name_;
};

SINGSPEC_ERROR(LengthMismatch);
SINGSPEC_ERROR(Underdetermined);
SINGSPEC_ERROR(Inconsistent);
SINGSPEC_ERROR(OutOfRange);
SINGSPEC_ERROR(NonIsolatedSingularity);
SINGSPEC_ERROR(NotWeightedHomogeneous);
SINGSPEC_ERROR(NonExactDivision);
SINGSPEC_ERROR(NegativeMultiplicity);
SINGSPEC_ERROR(NotGaloisStable);
SINGSPEC_ERROR(HorizontalComponent);
SINGSPEC_ERROR(ModelError);
SINGSPEC_ERROR(Overflow);

/// Raised when two computational routes that must agree do not. This is
/// always a bug in the library, never a user error.
SINGSPEC_ERROR(ConsistencyFailure);

/// Schema violation in a model or report document. `pointer()` is a
/// JSON-pointer-style location such as "/strata/1/cover_class/0/2".
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& what)
      : Error((pointer.empty() ? std::string("/") : pointer) + ": " + what),
        pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }
  const char* kind() const noexcept override { return "SchemaError"; }

 private:
  std::string pointer_;
};

#undef SINGSPEC_ERROR

}  // namespace singspec
