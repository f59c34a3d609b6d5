#pragma once

#include <stdexcept>
#include <string>

namespace thermal_ising {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define THERMAL_ISING_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  };

THERMAL_ISING_ERROR(DomainError)
THERMAL_ISING_ERROR(PoleError)
THERMAL_ISING_ERROR(NearSingularity)
THERMAL_ISING_ERROR(ConvergenceError)
THERMAL_ISING_ERROR(ValidityError)
THERMAL_ISING_ERROR(OscillationBudgetExceeded)
THERMAL_ISING_ERROR(StepSizeError)
THERMAL_ISING_ERROR(NonDecayedProfile)
THERMAL_ISING_ERROR(SingularMatrix)
THERMAL_ISING_ERROR(TruncationError)
THERMAL_ISING_ERROR(BranchAmbiguity)
THERMAL_ISING_ERROR(BranchError)
THERMAL_ISING_ERROR(TailTooLarge)

#undef THERMAL_ISING_ERROR

}  // namespace thermal_ising
