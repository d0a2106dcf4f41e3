#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "deszeta/multi_index.hpp"
#include "deszeta/numeric/complexval.hpp"
#include "deszeta/rational.hpp"

namespace deszeta {

enum class Verdict { pass, fail, unsupported };

// One verified relation instance. Exact-path reports carry rationals and
// pass iff the residual is exactly 0; numeric reports compare EvalResults
// against tolerance = 10 x combined err_estimate x tolerance_scale.
struct RelationReport {
  std::string relation;
  nlohmann::json params;
  bool exact = false;
  Rational lhs_exact{0};
  Rational rhs_exact{0};
  EvalResult lhs_num;
  EvalResult rhs_num;
  Real residual{0};
  Real tolerance{0};
  Verdict verdict = Verdict::fail;
};

const char* verdict_name(Verdict v);

// JSON with fields exactly: relation, params, lhs, rhs, residual, tolerance,
// verdict. Rationals render as "p" or "p/q" strings; complex values as
// {"re","im","err"} decimal strings with the given digit count.
nlohmann::json report_to_json(const RelationReport& rep, unsigned digits);

// Rational-valued f(s - n; -j) table for the binomial-inversion lemma:
// keyed by (sample-point shift n, multi-index j), closed under the shifts
// the inversion formulae consume.
struct TabulatedBivariateMap {
  int q = 1;  // length of the multi-index slot
  std::map<std::pair<int, std::vector<unsigned>>, Rational> values;

  const Rational& at(int shift, const std::vector<unsigned>& j) const;
  void set(int shift, const std::vector<unsigned>& j, const Rational& v);
};

// g(s; -l) = sum_{i_b + j_b = l_b} prod_a C(l_a, i_a) f(s - (i_1+...+i_q); -j)
Rational binomial_inversion_forward(const TabulatedBivariateMap& f, int s,
                                    const std::vector<unsigned>& l);

// f(s; -l) = sum_{i_b + j_b = l_b} prod_a (-1)^{i_a} C(l_a, i_a) g(s - ...; -j)
Rational binomial_inversion_inverse(const TabulatedBivariateMap& g, int s,
                                    const std::vector<unsigned>& l);

// Product formula with an unsigned binomial sum on the right:
//   zeta_r^des(s_head, -k) = sum_{i_b+j_b=k_b} prod C(k_b, i_b)
//       zeta_t^des(s_1,...,s_{t-1}, s_t - |i|) zeta_{r-t}^des(-j).
// Exact path when every head coordinate is a non-positive integer (any
// tail length); numeric path needs a single trailing index (r - t = 1).
RelationReport verify_prop_thm41(const std::vector<Cplx>& s_head, const MultiIndex& k_tail,
                                 const EvalOptions& opts = {}, double tolerance_scale = 1.0);

// Shuffle-type formula with signed binomial weights:
//   zeta_p^des(s) zeta_q^des(-l) = sum_{i_b+j_b=l_b} prod (-1)^{i_a} C(l_a, i_a)
//       zeta_{p+q}^des(s_1,...,s_{p-1}, s_p - |i|, -j).
// Exact path for all-non-positive-integer s; numeric path for q = 1.
// Other shapes yield verdict "unsupported" (a documented boundary).
RelationReport verify_main_theorem(const std::vector<Cplx>& s, const MultiIndex& l,
                                   const EvalOptions& opts = {}, double tolerance_scale = 1.0);

struct SuiteConfig {
  unsigned long long seed = 42;
  double tolerance_scale = 1.0;
};

// Fixed, deterministic instance grids. Known names: shuffle-exact, prop22,
// thm41, mb-contour, limit-rep, inversion, gf-cross.
std::vector<RelationReport> run_suite(const std::string& name, const EvalOptions& opts = {},
                                      const SuiteConfig& cfg = {});

}  // namespace deszeta
