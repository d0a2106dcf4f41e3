#pragma once

#include <stdexcept>
#include <string>

namespace deszeta {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exact_core
struct DivisionByNonUnit : Error {
  using Error::Error;
};

// coeff_table
struct InternalInvariantViolation : Error {
  using Error::Error;
};

// numeric evaluators
struct PoleOfGamma : Error {
  using Error::Error;
};
struct PoleAtOne : Error {
  using Error::Error;
};
struct NotInConvergenceRegion : Error {
  using Error::Error;
};
struct SingularLocus : Error {
  using Error::Error;
};
struct UnsupportedInstance : Error {
  using Error::Error;
};
struct QuadratureNotConverged : Error {
  using Error::Error;
};
struct CancellationLoss : Error {
  using Error::Error;
};

// relations
struct MissingTableEntry : Error {
  using Error::Error;
};
struct UnknownSuite : Error {
  using Error::Error;
};

}  // namespace deszeta
