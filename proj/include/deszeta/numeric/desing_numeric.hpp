#pragma once

#include <vector>

#include "deszeta/numeric/complexval.hpp"

namespace deszeta {

// True when the argument vector sits (within tol) on one of the singular
// loci of the classic MZF: s_r = 1; s_{r-1}+s_r in {2,1,0,-2,-4,...}; and,
// for k >= 3 trailing components, partial sum equal to any integer <= k.
// Only real loci count: a non-real partial sum is never singular.
bool on_singular_locus(const std::vector<Cplx>& s, double tol = 1e-9);

// zeta_r^des(s) as the finite combination
//   sum_{(l,m)} a^r_{l,m} prod_j (s_j)_{l_j} zeta_r(s+m)
// with each shifted-MZF summand routed to euler_zagier (inside the
// convergence region) or euler_zagier_trailing (final component a real
// integer, head convergent). Throws SingularLocus when a summand hits the
// guard list, NotInConvergenceRegion when no route applies.
EvalResult zeta_des_numeric(const std::vector<Cplx>& s, const EvalOptions& opts = {});

// zeta_r^des(s_1,...,s_{r-1},-k) for a single trailing non-positive integer;
// r - 1 = s_head.size(). When some summand's last argument lands on a pole
// or locus (cancelled in the full combination), the whole combination is
// evaluated at -k+eps_1 and -k+eps_2 and extrapolated linearly to eps -> 0,
// the extrapolation residual joining err_estimate.
EvalResult zeta_des_mixed(const std::vector<Cplx>& s_head, unsigned k_tail,
                          const EvalOptions& opts = {});

// Lemma-style limit representation: for each c computes
//   (1-c)^{-r} sum_{delta in {0,1}^r} (-c)^{|delta|} zeta_r(s; c^{delta_1},...)
// and Richardson-extrapolates the sequence to c -> 1. Requires s strictly
// inside the convergence region with margin > 0.5 and 0 < |c-1| <= 0.25.
EvalResult limit_representation(const std::vector<Cplx>& s,
                                const std::vector<Real>& c_values,
                                const EvalOptions& opts = {});

namespace detail {

struct RouteFlags {
  bool allow_noninteger_trailing = false;  // continuation at non-integer w
  bool allow_depth_one_trailing = false;   // r = 1 continued as plain zeta(w)
  bool prefer_trailing = false;            // use the trailing route even in-region
};

// The Eq.-style combination shared by the public evaluators; no locus guard.
EvalResult zeta_des_combination(const std::vector<Cplx>& s, const EvalOptions& opts,
                                const RouteFlags& flags);

}  // namespace detail

}  // namespace deszeta
