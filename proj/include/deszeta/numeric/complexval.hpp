#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <string>
#include <vector>

#include "deszeta/errors.hpp"
#include "deszeta/rational.hpp"

namespace deszeta {

// Configurable-precision binary float. Precision is the thread-default
// mpfr precision; evaluators set it from EvalOptions on entry.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

struct Cplx {
  Real re{0};
  Real im{0};

  Cplx() = default;
  Cplx(Real r) : re(std::move(r)) {}  // NOLINT: implicit from Real is intended
  Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Cplx(double r) : re(r) {}
  Cplx(double r, double i) : re(r), im(i) {}

  bool is_real(const Real& tol) const { return abs(im) <= tol; }
};

inline Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
inline Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
inline Cplx operator-(const Cplx& a) { return {-a.re, -a.im}; }
inline Cplx operator*(const Cplx& a, const Cplx& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Cplx operator*(const Real& a, const Cplx& b) { return {a * b.re, a * b.im}; }
inline Real norm(const Cplx& a) { return a.re * a.re + a.im * a.im; }
inline Cplx conj(const Cplx& a) { return {a.re, -a.im}; }
inline Cplx operator/(const Cplx& a, const Cplx& b) {
  const Real n = norm(b);
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
inline Cplx& operator+=(Cplx& a, const Cplx& b) { return a = a + b; }
inline Cplx& operator-=(Cplx& a, const Cplx& b) { return a = a - b; }
inline Cplx& operator*=(Cplx& a, const Cplx& b) { return a = a * b; }

inline Real abs(const Cplx& a) {
  using std::hypot;
  return hypot(a.re, a.im);
}
inline Real arg(const Cplx& a) { return atan2(a.im, a.re); }
inline Cplx exp(const Cplx& a) {
  const Real m = exp(a.re);
  return {m * cos(a.im), m * sin(a.im)};
}
inline Cplx log(const Cplx& a) { return {log(abs(a)), arg(a)}; }
inline Cplx sin(const Cplx& a) {
  return {sin(a.re) * cosh(a.im), cos(a.re) * sinh(a.im)};
}
// x^e for real x > 0.
inline Cplx pow_real(const Real& x, const Cplx& e) {
  if (e.im == 0) return Cplx{pow(x, e.re)};
  const Real lx = log(x);
  return exp(Cplx{e.re * lx, e.im * lx});
}
inline Cplx pow(const Cplx& z, const Cplx& e) { return exp(e * log(z)); }

bool is_finite(const Cplx& a);
Real pi_value();

// Complex Pochhammer (s)_k = s(s+1)...(s+k-1).
Cplx pochhammer(const Cplx& s, unsigned k);

Real to_real(const Rational& q);

// Evaluator knobs. All positive; see the numeric modules for usage.
struct EvalOptions {
  unsigned precision_bits = 128;     // significand bits of the working floats
  int series_cutoff = 400;           // truncation N per summation variable
  int euler_maclaurin_order = 12;    // correction order K (pairs of terms)
  double contour_truncation = 40.0;  // |Im z| <= T on vertical lines
  double contour_step = 0.05;        // trapezoid step h
  double epsilon_perturbation = 1e-4;  // eps_1 of the pole-dodging path; eps_2 = eps_1/2

  void validate() const;
};

// Value plus a heuristic non-negative error estimate (truncation tails,
// quadrature self-consistency, extrapolation residuals).
struct EvalResult {
  Cplx value;
  Real err_estimate{0};
};

// Positive real weights gamma_1..gamma_r of the generalized Euler-Zagier sum.
struct Weights {
  std::vector<Real> gamma;

  void validate() const {
    for (const auto& g : gamma)
      if (!(g > 0)) throw Error("weights must be positive reals");
  }
};

// RAII: sets the thread-default mpfr precision from precision_bits.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned precision_bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_digits10_;
};

// Decimal digit count used for formatted output at a given precision.
unsigned digits_for_bits(unsigned precision_bits);

std::string format_real(const Real& x, unsigned digits);

}  // namespace deszeta
