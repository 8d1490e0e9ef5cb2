#pragma once

#include <stdexcept>
#include <string>

namespace sdlcp {

// Base class for every structured failure raised by this library.
// The class name doubles as the machine-readable error name reported
// by the CLI, see Error::name().
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define SDLCP_DEFINE_ERROR(NAME)                              \
  class NAME : public Error {                                 \
   public:                                                    \
    explicit NAME(const std::string& what) : Error(#NAME, what) {} \
  }

SDLCP_DEFINE_ERROR(DimensionMismatch);
SDLCP_DEFINE_ERROR(LengthMismatch);
SDLCP_DEFINE_ERROR(NotPositiveDefinite);
SDLCP_DEFINE_ERROR(ConvergenceFailure);
SDLCP_DEFINE_ERROR(DomainError);
SDLCP_DEFINE_ERROR(BracketFailure);
SDLCP_DEFINE_ERROR(ParameterError);
SDLCP_DEFINE_ERROR(SingularSystem);
SDLCP_DEFINE_ERROR(InfeasibleStart);
SDLCP_DEFINE_ERROR(InitialProximityTooLarge);
SDLCP_DEFINE_ERROR(IterationCapExceeded);
SDLCP_DEFINE_ERROR(StepFailure);

#undef SDLCP_DEFINE_ERROR

}  // namespace sdlcp
