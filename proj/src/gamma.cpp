#include "deszeta/numeric/gamma.hpp"

#include "deszeta/bernoulli.hpp"

namespace deszeta {

namespace {

bool near_nonpositive_integer(const Cplx& z, double tol) {
  if (abs(z.im) > tol) return false;
  const Real r = round(z.re);
  return r <= 0 && abs(z.re - r) <= tol;
}

}  // namespace

Cplx log_gamma_right_half(const Cplx& z, unsigned precision_bits) {
  // Shift until |w| is large enough for the Stirling series to clear the
  // target precision, then remove the shift factors.
  const Real threshold = Real(std::max<unsigned>(20, precision_bits / 4));
  Cplx w = z;
  Cplx shift_product{1.0};
  while (abs(w) < threshold) {
    shift_product *= w;
    w += Cplx{1.0};
  }

  const Real two_pi = 2 * pi_value();
  Cplx lg = (w - Cplx{0.5}) * log(w) - w + Cplx{log(two_pi) / 2};
  const Cplx w2_inv = Cplx{1.0} / (w * w);
  Cplx w_pow = Cplx{1.0} / w;  // w^{-(2k-1)}
  const Real cutoff = ldexp(Real(1), -static_cast<int>(precision_bits) - 8);
  for (unsigned k = 1; k <= 64; ++k) {
    const Cplx term = to_real(bernoulli(2 * k) / Rational(2 * k * (2 * k - 1))) * w_pow;
    lg += term;
    if (abs(term) < cutoff * abs(lg)) break;
    w_pow *= w2_inv;
  }
  return lg - log(shift_product);
}

EvalResult gamma_complex(const Cplx& z, const EvalOptions& opts) {
  opts.validate();
  PrecisionGuard guard(opts.precision_bits);
  if (near_nonpositive_integer(z, 1e-12))
    throw PoleOfGamma("gamma pole at non-positive integer");

  Cplx value;
  if (z.re < 0.5) {
    // Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
    const Real pi = pi_value();
    const Cplx denom = sin(Cplx{pi} * z) * exp(log_gamma_right_half(Cplx{1.0} - z, opts.precision_bits));
    value = Cplx{pi} / denom;
  } else {
    value = exp(log_gamma_right_half(z, opts.precision_bits));
  }
  if (!is_finite(value)) throw PoleOfGamma("gamma evaluation overflowed");

  EvalResult out;
  out.value = value;
  out.err_estimate = abs(value) * ldexp(Real(1), -static_cast<int>(opts.precision_bits) + 6);
  return out;
}

}  // namespace deszeta
