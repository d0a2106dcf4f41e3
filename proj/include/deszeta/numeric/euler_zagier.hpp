#pragma once

#include <vector>

#include "deszeta/numeric/complexval.hpp"

namespace deszeta {

// Generalized Euler-Zagier sum
//   zeta_r(s; gamma) = sum_{m_1..m_r >= 1} prod_k (gamma_1 m_1 + ... + gamma_k m_k)^{-s_k}
// by nested summation; the innermost variable is summed in closed form as a
// scaled Hurwitz zeta, the outer ones truncated with integral-comparison
// tail estimates folded into err_estimate.
// Requires Re(s_{r-k+1}+...+s_r) > k with margin >= 0.1 for 1 <= k <= r.
EvalResult euler_zagier(const std::vector<Cplx>& s, const Weights& gamma,
                        const EvalOptions& opts = {});

// zeta_{t+1}(s_1,...,s_t, w; 1,...,1) continued in the LAST variable:
//   sum over 0 < n_1 < ... < n_t of prod n_k^{-s_k} * zeta_H(w, n_t + 1),
// with the tails beyond a fixed cut replaced by exact asymptotic expansions
// in the family { zeta_H(e, x+1) }, composed level by level. Handles any
// complex w away from 1, including non-positive integers.
// Requires Re(s_{t-j+1}+...+s_t+w) > j+1 for 1 <= j <= t; t = 0 reduces to
// the Riemann zeta at w.
EvalResult euler_zagier_trailing(const std::vector<Cplx>& s_head, const Cplx& w,
                                 const EvalOptions& opts = {});

}  // namespace deszeta
