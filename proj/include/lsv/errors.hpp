#pragma once

#include <stdexcept>
#include <string>

namespace lsv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Stable identifier used in CLI output, e.g. "RepulsiveBranch".
  virtual const char* kind() const noexcept { return "Error"; }
};

#define LSV_DEFINE_ERROR(Name)                                          \
  class Name : public Error {                                           \
   public:                                                              \
    using Error::Error;                                                 \
    const char* kind() const noexcept override { return #Name; }        \
  }

// Coulomb-like term is not attractive (delta >= 0): no bound state.
LSV_DEFINE_ERROR(RepulsiveBranch);
LSV_DEFINE_ERROR(InvalidParameter);
LSV_DEFINE_ERROR(InvalidInput);
// delta == 0: the oscillator frequency is not constrained by a_{n+1} = 0.
LSV_DEFINE_ERROR(DegenerateDelta);
LSV_DEFINE_ERROR(NoPositiveRoot);
LSV_DEFINE_ERROR(GridTooCoarse);
LSV_DEFINE_ERROR(NonUniformGrid);

#undef LSV_DEFINE_ERROR

}  // namespace lsv
