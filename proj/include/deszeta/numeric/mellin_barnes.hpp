#pragma once

#include <vector>

#include "deszeta/numeric/complexval.hpp"

namespace deszeta {

// (1/2πi) ∫_(a) Γ(s+z)Γ(-z)/Γ(s) · λ^z dz on the vertical line Re z = a,
// trapezoid rule truncated at |Im z| <= T. Converges to (1+λ)^{-s} for
// λ > 0, Re(s) > 0, -Re(s) < a < 0.
EvalResult mellin_barnes_kernel_check(const Real& lambda, const Cplx& s, const Real& a,
                                      const EvalOptions& opts = {});

// Depth-splitting contour integral (r in {2,3}):
//   (1/2πi) ∫_(a) [Γ(s_r+z)Γ(-z)/Γ(s_r)] ·
//           ζ_{r-1}^des(s_1,…,s_{r-2}, s_{r-1}+s_r+z) · ζ_1^des(-z) dz,
// equal to ζ_r^des(s) for Re(s_j) > 1 and -Re(s_r) < a < -1 (both inner
// argument sets then lie in convergent territory).
EvalResult mellin_barnes_split(const std::vector<Cplx>& s, const Real& a,
                               const EvalOptions& opts = {});

}  // namespace deszeta
