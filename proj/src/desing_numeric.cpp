#include "deszeta/numeric/desing_numeric.hpp"

#include <algorithm>

#include "deszeta/coeff_table.hpp"
#include "deszeta/numeric/euler_zagier.hpp"

namespace deszeta {

namespace {

bool near_real_integer(const Cplx& z, double tol, long* out = nullptr) {
  if (abs(z.im) > tol) return false;
  const Real r = round(z.re);
  if (abs(z.re - r) > tol) return false;
  if (out) *out = r.convert_to<long>();
  return true;
}

bool in_region(const std::vector<Cplx>& s, double margin) {
  Real acc = 0;
  for (size_t k = 1; k <= s.size(); ++k) {
    acc += s[s.size() - k].re;
    if (!(acc >= Real(static_cast<long>(k)) + margin)) return false;
  }
  return true;
}

// one shifted-MZF summand of the Eq.-style combination
EvalResult route_summand(const std::vector<Cplx>& args, const EvalOptions& opts,
                         const detail::RouteFlags& flags) {
  const size_t r = args.size();
  const bool region = in_region(args, 0.1);
  std::vector<Cplx> head(args.begin(), args.end() - 1);
  const Cplx& w = args.back();

  if (region) {
    // the trailing route is exact-tail accelerated; inside the region it is
    // both valid and much faster at depth >= 3
    if ((r >= 3 || flags.prefer_trailing) && r >= 2) {
      try {
        return euler_zagier_trailing(head, w, opts);
      } catch (const NotInConvergenceRegion&) {
        // fall through to plain nested summation
      }
    }
    Weights ones;
    ones.gamma.assign(r, Real(1));
    return euler_zagier(args, ones, opts);
  }

  if (r == 1) {
    if (!flags.allow_depth_one_trailing)
      throw NotInConvergenceRegion(
          "depth-1 argument outside the convergent half-plane");
    return euler_zagier_trailing({}, w, opts);
  }
  if (!flags.allow_noninteger_trailing && !near_real_integer(w, 1e-9))
    throw NotInConvergenceRegion(
        "summand outside the convergence region and its final component is "
        "not a real integer");
  return euler_zagier_trailing(head, w, opts);
}

}  // namespace

bool on_singular_locus(const std::vector<Cplx>& s, double tol) {
  const size_t r = s.size();
  if (r == 0) return false;
  if (abs(s[r - 1] - Cplx{1.0}) <= tol) return true;
  Cplx acc = s[r - 1];
  for (size_t k = 2; k <= r; ++k) {
    acc += s[r - k];
    long n = 0;
    if (!near_real_integer(acc, tol, &n)) continue;
    if (k == 2) {
      if (n == 2 || n == 1 || n == 0 || (n < 0 && n % 2 == 0)) return true;
    } else {
      if (n <= static_cast<long>(k)) return true;
    }
  }
  return false;
}

namespace detail {

EvalResult zeta_des_combination(const std::vector<Cplx>& s, const EvalOptions& opts,
                                const RouteFlags& flags) {
  const int r = static_cast<int>(s.size());
  const CoeffTable& table = expand_G(r);
  Cplx total{0.0};
  Real err = 0;
  for (const auto& entry : table.entries) {
    std::vector<Cplx> args(s);
    for (int j = 0; j < r; ++j) args[j] += Cplx{static_cast<double>(entry.m[j])};
    const EvalResult summand = route_summand(args, opts, flags);
    Cplx factor{to_real(Rational(entry.a))};
    for (int j = 0; j < r; ++j) factor *= pochhammer(s[j], entry.l[j]);
    total += factor * summand.value;
    err += abs(factor) * summand.err_estimate +
           abs(factor) * abs(summand.value) *
               ldexp(Real(1), -static_cast<int>(opts.precision_bits) + 6);
  }
  return {total, err};
}

}  // namespace detail

EvalResult zeta_des_numeric(const std::vector<Cplx>& s, const EvalOptions& opts) {
  opts.validate();
  PrecisionGuard guard(opts.precision_bits);
  const int r = static_cast<int>(s.size());
  if (r < 1 || r > 6) throw Error("zeta_des_numeric supports 1 <= r <= 6");

  const CoeffTable& table = expand_G(r);
  for (const auto& entry : table.entries) {
    std::vector<Cplx> args(s);
    for (int j = 0; j < r; ++j) args[j] += Cplx{static_cast<double>(entry.m[j])};
    if (on_singular_locus(args))
      throw SingularLocus(
          "a shifted summand sits on a singular locus of the classic MZF; "
          "use the mixed evaluator's perturbation path");
  }
  return detail::zeta_des_combination(s, opts, detail::RouteFlags{});
}

EvalResult zeta_des_mixed(const std::vector<Cplx>& s_head, unsigned k_tail,
                          const EvalOptions& opts) {
  opts.validate();
  PrecisionGuard guard(opts.precision_bits);
  const int r = static_cast<int>(s_head.size()) + 1;
  if (r > 6) throw Error("zeta_des_mixed supports r <= 6");
  for (const auto& h : s_head) {
    long n = 0;
    if (near_real_integer(h, 1e-9, &n) && n <= 0)
      throw UnsupportedInstance(
          "only one trailing non-positive-integer coordinate is supported");
  }

  detail::RouteFlags flags;
  flags.allow_noninteger_trailing = true;
  flags.allow_depth_one_trailing = true;

  auto eval_at = [&](const Cplx& tail) {
    std::vector<Cplx> s(s_head);
    s.push_back(tail);
    return detail::zeta_des_combination(s, opts, flags);
  };

  // direct term-wise evaluation works unless a summand lands on a pole or
  // locus (those cancel in the full combination and need the eps path)
  const CoeffTable& table = expand_G(r);
  bool need_eps = false;
  for (const auto& entry : table.entries) {
    std::vector<Cplx> args(s_head);
    args.push_back(Cplx{-static_cast<double>(k_tail)});
    for (int j = 0; j < r; ++j) args[j] += Cplx{static_cast<double>(entry.m[j])};
    if (on_singular_locus(args)) {
      need_eps = true;
      break;
    }
    // trailing-route boundary Re(s_{r-j}+...+s_r) = j+1 hit exactly (with a
    // non-real partial sum this is not a locus, but the direct route still
    // cannot reach it; the perturbation restores a strict margin)
    Cplx suffix = args[r - 1];
    for (int j = 1; j < r; ++j) {
      suffix += args[r - 1 - j];
      if (abs(suffix.re - Real(j + 1)) <= 1e-9) {
        need_eps = true;
        break;
      }
    }
    if (need_eps) break;
  }
  if (!need_eps) return eval_at(Cplx{-static_cast<double>(k_tail)});

  const Real eps1 = Real(opts.epsilon_perturbation);
  const Real eps2 = eps1 / 2;
  const Real base = -Real(static_cast<long>(k_tail));
  const EvalResult f1 = eval_at(Cplx{base + eps1});
  const EvalResult f2 = eval_at(Cplx{base + eps2});
  EvalResult out;
  out.value = Cplx{2.0} * f2.value - f1.value;  // linear extrapolation to eps=0
  out.err_estimate = 2 * f2.err_estimate + f1.err_estimate + abs(out.value - f2.value);
  if (!is_finite(out.value)) throw Error("zeta_des_mixed produced a non-finite value");
  return out;
}

EvalResult limit_representation(const std::vector<Cplx>& s,
                                const std::vector<Real>& c_values,
                                const EvalOptions& opts) {
  opts.validate();
  PrecisionGuard guard(opts.precision_bits);
  const size_t r = s.size();
  if (r == 0 || c_values.size() < 2)
    throw Error("limit_representation needs r >= 1 and at least two c values");
  {
    Real acc = 0;
    for (size_t k = 1; k <= r; ++k) {
      acc += s[r - k].re;
      if (!(acc > Real(static_cast<long>(k)) + Real(1) / 2))
        throw NotInConvergenceRegion(
            "limit_representation needs margin > 0.5 inside the region");
    }
  }
  for (const auto& c : c_values)
    if (!(c > 0) || !(abs(c - 1) > 0) || abs(c - 1) > Real(1) / 4)
      throw NotInConvergenceRegion("each c must satisfy 0 < |c-1| <= 0.25");

  const size_t n = c_values.size();
  std::vector<Cplx> f(n);
  std::vector<Real> ferr(n);
  for (size_t i = 0; i < n; ++i) {
    const Real& c = c_values[i];
    Cplx acc{0.0};
    Real err = 0;
    Real mag = 0;
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      Weights w;
      w.gamma.reserve(r);
      int ones = 0;
      for (size_t j = 0; j < r; ++j) {
        const bool on = (mask >> j) & 1u;
        w.gamma.push_back(on ? c : Real(1));
        ones += on;
      }
      const EvalResult z = euler_zagier(s, w, opts);
      const Real sign = (ones % 2) ? Real(-1) : Real(1);
      const Real cpow = pow(c, ones);
      acc += Cplx{sign * cpow} * z.value;
      err += cpow * z.err_estimate;
      mag += cpow * abs(z.value);
    }
    const Real amp = pow(1 - c, -static_cast<int>(r));
    f[i] = Cplx{amp} * acc;
    ferr[i] = abs(amp) *
              (err + mag * ldexp(Real(1), -static_cast<int>(opts.precision_bits) + 8));
  }

  // extrapolation in h = 1-c to h = 0; Neville (polynomial) and
  // Bulirsch-Stoer (rational) candidates, keeping whichever self-reports the
  // smaller stage-to-stage change. Lagrange weights give the propagated-noise
  // part of the error bar.
  std::vector<Real> h(n);
  for (size_t i = 0; i < n; ++i) h[i] = 1 - c_values[i];

  std::vector<std::vector<Cplx>> p(n, std::vector<Cplx>(n));
  for (size_t i = 0; i < n; ++i) p[i][0] = f[i];
  for (size_t j = 1; j < n; ++j)
    for (size_t i = 0; i + j < n; ++i)
      p[i][j] = (Cplx{h[i]} * p[i + 1][j - 1] - Cplx{h[i + j]} * p[i][j - 1]) /
                Cplx{h[i] - h[i + j]};
  const Cplx poly = p[0][n - 1];
  const Real poly_res = abs(p[0][n - 1] - p[0][n - 2]);

  // diagonal rational extrapolation (Stoer-Bulirsch tableau at x = 0)
  Cplx rat{0.0};
  Real rat_res = 0;
  bool rat_ok = true;
  {
    std::vector<std::vector<Cplx>> t(n, std::vector<Cplx>(n));
    for (size_t i = 0; i < n; ++i) t[i][0] = f[i];
    for (size_t m = 1; m < n && rat_ok; ++m) {
      for (size_t i = 0; i + m < n; ++i) {
        const Cplx d1 = t[i + 1][m - 1] - t[i][m - 1];
        const Cplx d2 = t[i + 1][m - 1] - (m >= 2 ? t[i + 1][m - 2] : Cplx{0.0});
        const Real scale = abs(t[i + 1][m - 1]) + abs(t[i][m - 1]) + Real(1e-60);
        if (abs(d2) <= Real(1e-50) * scale) {
          rat_ok = false;
          break;
        }
        const Cplx den = Cplx{h[i] / h[i + m]} * (Cplx{1.0} - d1 / d2) - Cplx{1.0};
        if (abs(den) <= Real(1e-50)) {
          rat_ok = false;
          break;
        }
        t[i][m] = t[i + 1][m - 1] + d1 / den;
      }
    }
    if (rat_ok) {
      rat = t[0][n - 1];
      rat_res = abs(t[0][n - 1] - t[0][n - 2]) + abs(t[0][n - 1] - t[1][n - 2]);
    }
  }

  Real prop = 0;
  for (size_t i = 0; i < n; ++i) {
    Real wgt = 1;
    for (size_t j = 0; j < n; ++j)
      if (j != i) wgt *= h[j] / (h[j] - h[i]);
    prop += abs(wgt) * ferr[i];
  }
  EvalResult out;
  if (rat_ok && rat_res < poly_res) {
    out.value = rat;
    out.err_estimate = prop + rat_res;
  } else {
    out.value = poly;
    out.err_estimate = prop + poly_res;
  }
  if (out.err_estimate > abs(out.value) && abs(out.value) > 0)
    throw CancellationLoss(
        "extrapolation error exceeds the value; raise precision or widen c");
  if (!is_finite(out.value))
    throw Error("limit_representation produced a non-finite value");
  return out;
}

}  // namespace deszeta
