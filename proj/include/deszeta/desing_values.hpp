#pragma once

#include "deszeta/multi_index.hpp"
#include "deszeta/rational.hpp"

namespace deszeta {

// zeta_r^des(-k_1,...,-k_r) by the Bernoulli multinomial formula: enumerate
// upper-triangular matrices nu_{ij} (1 <= i <= j <= r) whose column sums are
// nu_{1i}+...+nu_{ii} = k_i, weight each by row factorials and a Bernoulli
// number at the row sum nu_{ii}+...+nu_{ir}+1. Results are cached.
Rational zeta_des_value(const MultiIndex& k);

// Same value through the generating function route: coefficient extraction
// from the product of factors ((1-T_i)e^{T_i}-1)/(e^{T_i}-1)^2 with
// T_i = t_i+...+t_r, expanded as a truncated series.
Rational zeta_des_value_gf(const MultiIndex& k);

// LHS - RHS of the integer-point shuffle product formula
//   zeta_p^des(-k) zeta_q^des(-l)
//     = sum_{i_b+j_b=l_b} prod_a (-1)^{i_a} C(l_a,i_a)
//       zeta_{p+q}^des(-k_1,..,-k_{p-1},-k_p-i_1-..-i_q,-j_1,..,-j_q).
// A passing verification returns exactly 0.
Rational verify_shuffle_integer(const MultiIndex& k, const MultiIndex& l);

}  // namespace deszeta
