#pragma once

#include "deszeta/numeric/complexval.hpp"

namespace deszeta {

// Hurwitz zeta sum_{n>=0} (a+n)^{-s}, continued to all s != 1 by
// Euler-Maclaurin: partial sum to N, integral term (a+N)^{1-s}/(s-1),
// half term, and Bernoulli corrections up to order K (adaptively raised
// until the first omitted term clears the working precision).
// Requires real a >= 1; throws PoleAtOne when |s - 1| <= 1e-6.
EvalResult hurwitz_zeta(const Cplx& s, const Real& a, const EvalOptions& opts = {});

// Riemann zeta = hurwitz_zeta(s, 1).
EvalResult riemann_zeta(const Cplx& s, const EvalOptions& opts = {});

}  // namespace deszeta
