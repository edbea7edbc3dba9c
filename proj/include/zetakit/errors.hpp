#pragma once

#include <stdexcept>
#include <string>

namespace zetakit {

/// Base of every error raised by the library. `name()` is the stable
/// identifier printed by the command-line tool.
class ZetaError : public std::runtime_error {
 public:
  explicit ZetaError(const std::string& what) : std::runtime_error(what) {}
  virtual const char* name() const noexcept { return "ZetaError"; }
};

#define ZETAKIT_DEFINE_ERROR(Type, Base)                                     \
  class Type : public Base {                                                 \
   public:                                                                   \
    explicit Type(const std::string& what) : Base(what) {}                   \
    const char* name() const noexcept override { return #Type; }             \
  };

// Argument problems: the value does not exist or the input is outside the
// operation's domain.
ZETAKIT_DEFINE_ERROR(DomainError, ZetaError)
ZETAKIT_DEFINE_ERROR(PoleError, DomainError)
ZETAKIT_DEFINE_ERROR(IndeterminateError, DomainError)
ZETAKIT_DEFINE_ERROR(NeedsLimitInterpretation, DomainError)

// Numerical failures: the value exists but could not be produced to tolerance.
ZETAKIT_DEFINE_ERROR(NumericalError, ZetaError)
ZETAKIT_DEFINE_ERROR(NoConvergence, NumericalError)
ZETAKIT_DEFINE_ERROR(ReconstructionError, NumericalError)
ZETAKIT_DEFINE_ERROR(IllConditioned, NumericalError)

#undef ZETAKIT_DEFINE_ERROR

}  // namespace zetakit
