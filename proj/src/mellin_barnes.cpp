#include "deszeta/numeric/mellin_barnes.hpp"

#include <cmath>
#include <functional>

#include "deszeta/numeric/desing_numeric.hpp"
#include "deszeta/numeric/gamma.hpp"

namespace deszeta {

namespace {

struct Node {
  Cplx value;
  Real err;
};

// (1/2πi) ∫ F(a+iτ) i dτ over |τ| <= T by trapezoid; the coarse pass reuses
// every other fine node for a Richardson-style error estimate.
EvalResult contour_trapezoid(const std::function<Node(const Real&)>& f,
                             const EvalOptions& opts) {
  const Real T = Real(opts.contour_truncation);
  const Real h = Real(opts.contour_step);
  int n = static_cast<int>(std::ceil(2 * opts.contour_truncation / opts.contour_step));
  if (n % 2) ++n;
  const Real step = 2 * T / n;

  std::vector<Node> nodes(n + 1);
  for (int i = 0; i <= n; ++i) nodes[i] = f(-T + step * i);
  (void)h;

  Cplx fine{0.0}, coarse{0.0};
  Real inner_err = 0;
  for (int i = 0; i <= n; ++i) {
    const Real wgt = (i == 0 || i == n) ? Real(1) / 2 : Real(1);
    fine += Cplx{wgt} * nodes[i].value;
    inner_err += wgt * nodes[i].err;
  }
  for (int i = 0; i <= n; i += 2) {
    const Real wgt = (i == 0 || i == n) ? Real(1) / 2 : Real(1);
    coarse += Cplx{wgt} * nodes[i].value;
  }
  const Real two_pi = 2 * pi_value();
  EvalResult out;
  out.value = Cplx{step / two_pi} * fine;
  const Cplx coarse_val = Cplx{2 * step / two_pi} * coarse;
  const Real tail = (abs(nodes[0].value) + abs(nodes[n].value)) / pi_value() / two_pi;
  out.err_estimate =
      abs(out.value - coarse_val) / 3 + step / two_pi * inner_err + tail;
  if (tail > Real(1e-11) * (std::max)(Real(1), abs(out.value)))
    throw QuadratureNotConverged(
        "contour tail at |Im z| = T is too large; raise contour_truncation");
  if (!is_finite(out.value))
    throw Error("contour quadrature produced a non-finite value");
  return out;
}

}  // namespace

EvalResult mellin_barnes_kernel_check(const Real& lambda, const Cplx& s, const Real& a,
                                      const EvalOptions& opts) {
  opts.validate();
  PrecisionGuard guard(opts.precision_bits);
  if (!(lambda > 0)) throw UnsupportedInstance("kernel check needs lambda > 0");
  if (!(s.re > 0) || !(a > -s.re) || !(a < 0))
    throw UnsupportedInstance("kernel check needs Re(s) > 0 and -Re(s) < a < 0");

  const EvalResult gs = gamma_complex(s, opts);
  auto f = [&](const Real& tau) -> Node {
    const Cplx z{a, tau};
    const EvalResult g1 = gamma_complex(s + z, opts);
    const EvalResult g2 = gamma_complex(-z, opts);
    const Cplx lam_z = pow_real(lambda, z);
    const Cplx kernel = g1.value * g2.value / gs.value;
    const Cplx val = kernel * lam_z;
    const Real err =
        abs(lam_z) * (abs(g1.value) * g2.err_estimate + abs(g2.value) * g1.err_estimate +
                      abs(kernel) * gs.err_estimate) /
        abs(gs.value);
    return {val, err};
  };
  return contour_trapezoid(f, opts);
}

EvalResult mellin_barnes_split(const std::vector<Cplx>& s, const Real& a,
                               const EvalOptions& opts) {
  opts.validate();
  PrecisionGuard guard(opts.precision_bits);
  const size_t r = s.size();
  if (r != 2 && r != 3) throw UnsupportedInstance("split supports r in {2,3}");
  for (const auto& sj : s)
    if (!(sj.re > 1)) throw UnsupportedInstance("split needs Re(s_j) > 1 for all j");
  if (!(a > -s[r - 1].re) || !(a < -1))
    throw UnsupportedInstance("split needs -Re(s_r) < a < -1");

  detail::RouteFlags flags;
  flags.allow_noninteger_trailing = true;
  flags.allow_depth_one_trailing = true;
  flags.prefer_trailing = (r >= 3);

  const EvalResult gs = gamma_complex(s[r - 1], opts);
  auto f = [&](const Real& tau) -> Node {
    const Cplx z{a, tau};
    const EvalResult g1 = gamma_complex(s[r - 1] + z, opts);
    const EvalResult g2 = gamma_complex(-z, opts);
    const Cplx kernel = g1.value * g2.value / gs.value;

    std::vector<Cplx> head(s.begin(), s.end() - 2);
    head.push_back(s[r - 2] + s[r - 1] + z);
    const EvalResult z1 = detail::zeta_des_combination(head, opts, flags);
    const EvalResult z2 = detail::zeta_des_combination({-z}, opts, flags);

    const Cplx val = kernel * z1.value * z2.value;
    const Real kmag = abs(kernel);
    const Real err = kmag * (abs(z1.value) * z2.err_estimate +
                             abs(z2.value) * z1.err_estimate) +
                     abs(z1.value) * abs(z2.value) *
                         (abs(g1.value) * g2.err_estimate +
                          abs(g2.value) * g1.err_estimate) /
                         abs(gs.value);
    return {val, err};
  };
  return contour_trapezoid(f, opts);
}

}  // namespace deszeta
