#include "deszeta/numeric/complexval.hpp"

#include <cmath>

namespace deszeta {

bool is_finite(const Cplx& a) {
  using boost::multiprecision::isfinite;
  return isfinite(a.re) && isfinite(a.im);
}

Real pi_value() {
  return 4 * atan(Real(1));
}

Cplx pochhammer(const Cplx& s, unsigned k) {
  Cplx out{1.0};
  for (unsigned i = 0; i < k; ++i) out *= s + Cplx{static_cast<double>(i)};
  return out;
}

Real to_real(const Rational& q) {
  return Real(numerator(q)) / Real(denominator(q));
}

void EvalOptions::validate() const {
  if (precision_bits < 53) throw Error("precision_bits must be >= 53");
  if (series_cutoff < 1 || euler_maclaurin_order < 1 ||
      contour_truncation <= 0 || contour_step <= 0 || epsilon_perturbation <= 0)
    throw Error("EvalOptions fields must be positive");
}

unsigned digits_for_bits(unsigned precision_bits) {
  return static_cast<unsigned>(precision_bits * 0.30103) + 3;
}

PrecisionGuard::PrecisionGuard(unsigned precision_bits)
    : saved_digits10_(Real::default_precision()) {
  if (precision_bits < 53) throw Error("precision_bits must be >= 53");
  Real::default_precision(digits_for_bits(precision_bits));
}

PrecisionGuard::~PrecisionGuard() {
  Real::default_precision(saved_digits10_);
}

std::string format_real(const Real& x, unsigned digits) {
  return x.str(digits, std::ios_base::scientific);
}

}  // namespace deszeta
