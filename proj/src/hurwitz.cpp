#include "deszeta/numeric/hurwitz.hpp"

#include <algorithm>

#include "deszeta/bernoulli.hpp"

namespace deszeta {

namespace {

struct EmResult {
  Cplx value;
  Real omitted;  // magnitude bound of the first omitted correction
};

EmResult euler_maclaurin(const Cplx& s, const Real& a, int N, int max_K,
                         const Real& target_abs) {
  Cplx acc{0.0};
  for (int n = 0; n < N; ++n) acc += pow_real(a + n, -s);

  const Real x = a + N;
  const Cplx x_pow = pow_real(x, -s);  // x^{-s}
  acc += pow_real(x, Cplx{1.0} - s) / (s - Cplx{1.0});
  acc += Cplx{0.5} * x_pow;

  // sum_k B_{2k}/(2k)! (s)_{2k-1} x^{-s-2k+1}; asymptotic, so stop at the
  // smallest term or once below target.
  const Real x2_inv = 1 / (x * x);
  Cplx poch = s;                     // (s)_{2k-1}
  Cplx x_fac = x_pow * Cplx{1 / x};  // x^{-s-2k+1}
  Real prev_mag = -1;
  Real omitted = 0;
  for (int k = 1; k <= max_K; ++k) {
    const Cplx term = to_real(bernoulli(2 * k) / Rational(factorial(2 * k))) *
                      (poch * x_fac);
    const Real mag = abs(term);
    omitted = mag;
    if (prev_mag >= 0 && mag > prev_mag) break;  // series started diverging
    acc += term;
    prev_mag = mag;
    poch *= (s + Cplx{static_cast<double>(2 * k - 1)}) *
            (s + Cplx{static_cast<double>(2 * k)});
    x_fac *= x2_inv;
    if (mag <= target_abs) break;
  }
  return {acc, omitted};
}

}  // namespace

EvalResult hurwitz_zeta(const Cplx& s, const Real& a, const EvalOptions& opts) {
  opts.validate();
  PrecisionGuard guard(opts.precision_bits);
  if (!(a >= 1)) throw Error("hurwitz_zeta requires a >= 1");
  if (abs(s - Cplx{1.0}) <= 1e-6)
    throw PoleAtOne("hurwitz_zeta pole at s = 1");

  const Real target_rel = ldexp(Real(1), -static_cast<int>(opts.precision_bits) - 2);

  // Euler-Maclaurin needs a + N comfortably above |s| for the corrections
  // to behave; start from the configured defaults and grow N on demand.
  int N = std::max<int>(50, static_cast<int>(abs(s).convert_to<double>() * 1.2) + 8);
  if (a > N) N = 8;  // a alone already dominates |s|
  const int K = std::max(opts.euler_maclaurin_order, 8);

  EmResult r{};
  for (int attempt = 0; attempt < 4; ++attempt) {
    r = euler_maclaurin(s, a, N, K + 20 * attempt, target_rel);
    const Real scale = std::max(abs(r.value), Real(1e-30));
    if (r.omitted <= target_rel * scale) break;
    N *= 2;
  }

  EvalResult out;
  out.value = r.value;
  out.err_estimate =
      r.omitted + abs(r.value) * ldexp(Real(1), -static_cast<int>(opts.precision_bits) + 6);
  if (!is_finite(out.value)) throw Error("hurwitz_zeta produced a non-finite value");
  return out;
}

EvalResult riemann_zeta(const Cplx& s, const EvalOptions& opts) {
  return hurwitz_zeta(s, Real(1), opts);
}

}  // namespace deszeta
