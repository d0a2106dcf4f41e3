#pragma once

#include <map>
#include <vector>

#include "deszeta/rational.hpp"

namespace deszeta {

// Multivariate formal power series over Rational, truncated at a fixed
// total degree. Sparse: absent exponent vectors mean coefficient zero.
class TruncatedSeries {
 public:
  using Exponents = std::vector<int>;

  TruncatedSeries(int num_vars, int max_total_degree);

  int num_vars() const { return num_vars_; }
  int max_total_degree() const { return max_total_degree_; }
  const std::map<Exponents, Rational>& coefficients() const { return coeffs_; }

  // Returns 0 for absent keys.
  Rational coefficient(const Exponents& e) const;
  // Drops the term when the total degree exceeds the truncation order.
  void set_coefficient(const Exponents& e, const Rational& value);

  static TruncatedSeries constant(int num_vars, int max_total_degree,
                                  const Rational& value);

 private:
  int num_vars_;
  int max_total_degree_;
  std::map<Exponents, Rational> coeffs_;
};

enum class SeriesOp { add, mul, divide_by_unit };

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
// Throws DivisionByNonUnit when b has zero constant term.
TruncatedSeries series_divide_by_unit(const TruncatedSeries& a,
                                      const TruncatedSeries& b);
TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b,
                             SeriesOp op);

// exp(sum_j coeffs[j] t_j) truncated at total degree N, by exact expansion.
TruncatedSeries series_exp_linear(const std::vector<Rational>& coeffs, int N);

}  // namespace deszeta
