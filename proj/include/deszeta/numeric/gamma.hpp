#pragma once

#include "deszeta/numeric/complexval.hpp"

namespace deszeta {

// Gamma(z) at working precision via reflection plus shifted Stirling series.
// Throws PoleOfGamma when z is within 1e-12 of 0, -1, -2, ...
EvalResult gamma_complex(const Cplx& z, const EvalOptions& opts = {});

// log Gamma(z) for Re(z) >= 0.5 (internal building block, exposed for tests).
Cplx log_gamma_right_half(const Cplx& z, unsigned precision_bits);

}  // namespace deszeta
