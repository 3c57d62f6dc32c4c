#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>

namespace crlevi {

// Validation failures are problems with the input (exit code 1 in the CLI);
// computation failures are mathematical preconditions that do not hold at
// the requested data (exit code 2).
enum class ErrorCategory { Validation, Computation };

class Error : public std::runtime_error {
 public:
  Error(std::string name, ErrorCategory category, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)), category_(category) {}

  const std::string& name() const noexcept { return name_; }
  ErrorCategory category() const noexcept { return category_; }

 private:
  std::string name_;
  ErrorCategory category_;
};

#define CRLEVI_DEFINE_ERROR(Type, Category)                 \
  class Type : public Error {                               \
   public:                                                  \
    explicit Type(const std::string& what)                  \
        : Error(#Type, ErrorCategory::Category, what) {}    \
  };

// exact_algebra
CRLEVI_DEFINE_ERROR(DivisionByZero, Computation)
CRLEVI_DEFINE_ERROR(NonHermitianInput, Computation)
CRLEVI_DEFINE_ERROR(DimensionMismatch, Computation)
CRLEVI_DEFINE_ERROR(SingularMatrix, Computation)

// poly_calculus
CRLEVI_DEFINE_ERROR(IndexOutOfRange, Computation)
CRLEVI_DEFINE_ERROR(NotRealValued, Computation)

// manifold_parser
CRLEVI_DEFINE_ERROR(IndexError, Validation)
CRLEVI_DEFINE_ERROR(IoError, Validation)
CRLEVI_DEFINE_ERROR(ValidationError, Validation)

// embedded_cr
CRLEVI_DEFINE_ERROR(PointNotOnManifold, Computation)
CRLEVI_DEFINE_ERROR(DegenerateDifferentials, Computation)
CRLEVI_DEFINE_ERROR(GramSingular, Computation)
CRLEVI_DEFINE_ERROR(NotAnInverse, Computation)
CRLEVI_DEFINE_ERROR(NotHolomorphic, Computation)

// almost_structures
CRLEVI_DEFINE_ERROR(InvalidFrame, Computation)

// homogeneous_cr
CRLEVI_DEFINE_ERROR(DependentBasis, Computation)
CRLEVI_DEFINE_ERROR(NotSubalgebra, Computation)
CRLEVI_DEFINE_ERROR(BadComplement, Computation)
CRLEVI_DEFINE_ERROR(MissingParameter, Validation)
CRLEVI_DEFINE_ERROR(NonRealValueForRealParam, Validation)

#undef CRLEVI_DEFINE_ERROR

/// Parse failure carrying the byte offset into the input and the set of
/// tokens that would have been accepted there.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::set<std::string> expected,
              const std::string& input)
      : Error("SyntaxError", ErrorCategory::Validation,
              describe(offset, expected, input)),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::set<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string describe(std::size_t offset,
                              const std::set<std::string>& expected,
                              const std::string& input) {
    std::string msg = "syntax error at offset " + std::to_string(offset) +
                      " in \"" + input + "\", expected one of:";
    for (const auto& e : expected) msg += " " + e;
    return msg;
  }

  std::size_t offset_;
  std::set<std::string> expected_;
};

}  // namespace crlevi
