#include "deszeta/numeric/euler_zagier.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "deszeta/bernoulli.hpp"
#include "deszeta/numeric/hurwitz.hpp"

namespace deszeta {

namespace {

// sum_{n > x} n^{-p} <= x^{1-p} / (p - 1); p is clamped so heuristic error
// bookkeeping stays finite even when a propagated decay exponent is weak.
Real tail_bound(const Real& x, Real p) {
  if (p < Real(1.05)) p = Real(1.05);
  return pow(x, 1 - p) / (p - 1);
}

}  // namespace

EvalResult euler_zagier(const std::vector<Cplx>& s, const Weights& gamma,
                        const EvalOptions& opts) {
  opts.validate();
  PrecisionGuard guard(opts.precision_bits);
  const size_t r = s.size();
  if (r == 0) throw Error("euler_zagier needs at least one exponent");
  if (gamma.gamma.size() != r) throw Error("weights size must match the depth");
  gamma.validate();

  // Re(s_{r-k+1} + ... + s_r) > k, with margin 0.1 so truncation tails decay.
  {
    Real acc = 0;
    for (size_t k = 1; k <= r; ++k) {
      acc += s[r - k].re;
      if (!(acc >= Real(static_cast<long>(k)) + Real(1) / 10))
        throw NotInConvergenceRegion(
            "euler_zagier: suffix condition Re(s_{r-k+1}+...+s_r) > k fails "
            "(margin 0.1) at k = " + std::to_string(k));
    }
  }

  // decay exponent of the summand seen from level k (0-based):
  // d_k = Re(s_k + ... + s_r) - (number of inner variables)
  std::vector<Real> decay(r);
  {
    Real acc = 0;
    for (size_t k = r; k-- > 0;) {
      acc += s[k].re;
      decay[k] = acc - Real(static_cast<long>(r - 1 - k));
    }
  }

  const Real break_tol = ldexp(Real(1), -static_cast<int>(opts.precision_bits) + 4);

  std::function<EvalResult(size_t, const Real&)> eval_level =
      [&](size_t k, const Real& A) -> EvalResult {
    if (k == r - 1) {
      // sum_m (A + g m)^{-s} = g^{-s} zeta_H(s, A/g + 1)
      const Real& g = gamma.gamma[k];
      const EvalResult hz = hurwitz_zeta(s[k], A / g + 1, opts);
      const Cplx f = pow_real(g, -s[k]);
      return {f * hz.value, abs(f) * hz.err_estimate};
    }
    const Real& g = gamma.gamma[k];
    Cplx acc{0.0};
    Real err = 0;
    Real last_mag = 0;
    int m = 1;
    for (; m <= opts.series_cutoff; ++m) {
      const Real A1 = A + g * m;
      const EvalResult inner = eval_level(k + 1, A1);
      const Cplx f = pow_real(A1, -s[k]);
      const Cplx term = f * inner.value;
      acc += term;
      err += abs(f) * inner.err_estimate;
      last_mag = abs(term);
      if (m >= 8) {
        const Real tail_est = last_mag * m / (decay[k] - 1);
        if (tail_est <= break_tol * (abs(acc) + Real(1e-30))) {
          err += tail_est;
          return {acc, err};
        }
      }
    }
    err += last_mag * opts.series_cutoff / (decay[k] - 1);
    return {acc, err};
  };

  return eval_level(0, Real(0));
}

namespace {

// c * zeta_H(e, x + 1); the building block of symbolic tail expansions.
struct ExpTerm {
  Cplx c;
  Cplx e;
};

// Approximates a tail function for arguments x >= x0; the omitted part is
// bounded (heuristically) by err0 * (x/x0)^{-err_q}.
struct Expansion {
  std::vector<ExpTerm> terms;
  Real err0{0};
  Real err_q{1e6};
};

struct ExpandParams {
  int x0;
  int k_asym;  // Bernoulli pairs of the Hurwitz asymptotic expansion
  int i_binom;  // order of the (n+1)^{-mu} -> n^{-mu-i} rebasing
  Real prune_eps;
};

Real est_hz_mag(const Cplx& e, const Real& x1) {
  Real inv = 1 / abs(e - Cplx{1.0});
  if (inv > Real(4)) inv = (std::min)(inv, Real(1e8));
  return pow(x1, 1 - e.re) * (inv + 1);
}

void note_decay(Real& err_q, const Real& q) {
  if (q < err_q) err_q = q;
}

// Expansion of x -> sum_{n > x} n^{-s} * F(n) where F is given by `src`.
// Each source term c * zeta_H(e, n+1) is expanded asymptotically in n,
// rebased from (n+1)-powers to n-powers, and the resulting n^{-p} tails are
// resummed as Hurwitz zetas at x. All truncations land in err0/err_q.
Expansion compose(const Cplx& s, const Expansion& src, const ExpandParams& pp) {
  Expansion out;
  const Real x1 = Real(pp.x0 + 1);

  // propagate the source's own error through sum_{n > x0} n^{-Re s} (n/x0)^{-q}
  if (src.err0 > 0) {
    const Real p = s.re + src.err_q;
    out.err0 += src.err0 * pow(Real(pp.x0), src.err_q) * tail_bound(Real(pp.x0), p);
    note_decay(out.err_q, p - 1);
  }

  const Rational b_trunc_abs = abs(bernoulli(2 * pp.k_asym + 2)) /
                               Rational(factorial(2 * pp.k_asym + 2));

  for (const auto& src_term : src.terms) {
    const Real cmag = abs(src_term.c);
    const Cplx& e = src_term.e;

    // cheap skip: the whole contribution of this source is negligible
    {
      const Real lead = cmag * est_hz_mag(s + e - Cplx{1.0}, x1);
      if (lead < pp.prune_eps) {
        out.err0 += 2 * lead;
        note_decay(out.err_q, s.re + e.re - 2);
        continue;
      }
    }

    // zeta_H(e, n+1) ~ sum_mu d_mu (n+1)^{-mu}
    std::vector<std::pair<Cplx, Cplx>> mus;
    mus.reserve(pp.k_asym + 2);
    mus.emplace_back(e - Cplx{1.0}, Cplx{1.0} / (e - Cplx{1.0}));
    mus.emplace_back(e, Cplx{0.5});
    Cplx poch = e;  // (e)_{2k-1}
    for (int k = 1; k <= pp.k_asym; ++k) {
      const Cplx d = to_real(bernoulli(2 * k) / Rational(factorial(2 * k))) * poch;
      mus.emplace_back(e + Cplx{static_cast<double>(2 * k - 1)}, d);
      poch *= (e + Cplx{static_cast<double>(2 * k - 1)}) *
              (e + Cplx{static_cast<double>(2 * k)});
    }
    // first omitted asymptotic term, summed against n^{-s} beyond x0
    {
      const Real coef = cmag * to_real(b_trunc_abs) * abs(poch);
      const Real p = s.re + e.re + 2 * pp.k_asym + 1;
      out.err0 += coef * tail_bound(Real(pp.x0), p);
      note_decay(out.err_q, p - 1);
    }

    for (const auto& [mu, d] : mus) {
      const Real dmag = cmag * abs(d);
      if (dmag * est_hz_mag(s + mu, x1) < pp.prune_eps) {
        out.err0 += 2 * dmag * est_hz_mag(s + mu, x1);
        note_decay(out.err_q, s.re + mu.re - 1);
        continue;
      }
      // (n+1)^{-mu} = sum_i b_i n^{-mu-i}, b_i = (-1)^i (mu)_i / i!
      Cplx b{1.0};
      bool completed = true;
      Real last_mag = 0;
      for (int i = 0; i <= pp.i_binom; ++i) {
        if (i > 0) b *= -(mu + Cplx{static_cast<double>(i - 1)}) / Cplx{static_cast<double>(i)};
        const Cplx coef = src_term.c * d * b;
        const Cplx expo = s + mu + Cplx{static_cast<double>(i)};
        const Real mag = abs(coef) * est_hz_mag(expo, x1);
        last_mag = mag;
        if (mag < pp.prune_eps) {
          out.err0 += mag;
          note_decay(out.err_q, expo.re - 1);
          if (i >= 2) {
            completed = false;
            out.err0 += 2 * mag;
            break;
          }
          continue;
        }
        out.terms.push_back({coef, expo});
      }
      if (completed) {
        // bound the first omitted rebasing term
        const Cplx b_next = b * -(mu + Cplx{static_cast<double>(pp.i_binom)}) /
                            Cplx{static_cast<double>(pp.i_binom + 1)};
        const Real p = s.re + mu.re + pp.i_binom + 1;
        out.err0 += 2 * dmag * abs(b_next) * tail_bound(Real(pp.x0), p);
        note_decay(out.err_q, p - 1);
        (void)last_mag;
      }
    }
  }

  // exponents recur as "base + integer"; merging keeps the term count small
  std::sort(out.terms.begin(), out.terms.end(), [](const ExpTerm& a, const ExpTerm& b) {
    if (a.e.re != b.e.re) return a.e.re < b.e.re;
    return a.e.im < b.e.im;
  });
  std::vector<ExpTerm> merged;
  merged.reserve(out.terms.size());
  for (auto& term : out.terms) {
    if (!merged.empty() &&
        abs(term.e - merged.back().e) <= Real(1e-24) * (1 + abs(term.e))) {
      merged.back().c += term.c;
    } else {
      merged.push_back(std::move(term));
    }
  }
  out.terms = std::move(merged);

  constexpr size_t kMaxTerms = 20000;
  if (out.terms.size() > kMaxTerms) {
    std::nth_element(out.terms.begin(), out.terms.begin() + kMaxTerms, out.terms.end(),
                     [&](const ExpTerm& a, const ExpTerm& b) {
                       return abs(a.c) * est_hz_mag(a.e, x1) >
                              abs(b.c) * est_hz_mag(b.e, x1);
                     });
    for (size_t j = kMaxTerms; j < out.terms.size(); ++j)
      out.err0 += abs(out.terms[j].c) * est_hz_mag(out.terms[j].e, x1);
    out.terms.resize(kMaxTerms);
  }
  return out;
}

EvalResult eval_expansion(const Expansion& ex, int x0, const EvalOptions& opts) {
  EvalResult out;
  out.err_estimate = ex.err0;
  const Real a = Real(x0 + 1);
  for (const auto& term : ex.terms) {
    const EvalResult hz = hurwitz_zeta(term.e, a, opts);
    out.value += term.c * hz.value;
    out.err_estimate += abs(term.c) * hz.err_estimate;
  }
  return out;
}

}  // namespace

EvalResult euler_zagier_trailing(const std::vector<Cplx>& s_head, const Cplx& w,
                                 const EvalOptions& opts) {
  opts.validate();
  PrecisionGuard guard(opts.precision_bits);
  const size_t t = s_head.size();
  if (abs(w - Cplx{1.0}) <= 1e-6)
    throw PoleAtOne("euler_zagier_trailing: trailing argument at the pole s = 1");

  {
    Cplx suffix = w;
    for (size_t j = 1; j <= t; ++j) {
      suffix += s_head[t - j];
      if (!(suffix.re > Real(static_cast<long>(j + 1))))
        throw NotInConvergenceRegion(
            "euler_zagier_trailing: need Re(s_{t-j+1}+...+s_t+w) > j+1 at j = " +
            std::to_string(j));
    }
  }

  if (t == 0) return riemann_zeta(w, opts);

  ExpandParams pp;
  pp.x0 = 64;
  pp.k_asym = std::max(opts.euler_maclaurin_order, 12);
  pp.i_binom = 20;
  pp.prune_eps = ldexp(Real(1), -static_cast<int>(opts.precision_bits) - 8);

  // symbolic tail expansions E_k of G_k(x) = sum_{n>x} n^{-s_k} G_{k+1}(n),
  // G_{t+1}(n) = zeta_H(w, n+1); built innermost-first
  std::vector<Expansion> exps(t);
  {
    Expansion base;
    base.terms.push_back({Cplx{1.0}, w});
    base.err0 = 0;
    for (size_t k = t; k-- > 0;)
      exps[k] = compose(s_head[k], k + 1 < t ? exps[k + 1] : base, pp);
  }

  // pointwise values below the cut, suffix-summed level by level
  std::vector<Cplx> v(pp.x0 + 1);
  std::vector<Real> ve(pp.x0 + 1, Real(0));
  for (int n = 1; n <= pp.x0; ++n) {
    const EvalResult hz = hurwitz_zeta(w, Real(n + 1), opts);
    v[n] = hz.value;
    ve[n] = hz.err_estimate;
  }
  for (size_t k = t; k-- > 0;) {
    const EvalResult tail = eval_expansion(exps[k], pp.x0, opts);
    std::vector<Cplx> nv(pp.x0 + 1);
    std::vector<Real> nve(pp.x0 + 1, Real(0));
    nv[pp.x0] = tail.value;
    nve[pp.x0] = tail.err_estimate;
    for (int n = pp.x0 - 1; n >= 0; --n) {
      const Cplx f = pow_real(Real(n + 1), -s_head[k]);
      nv[n] = nv[n + 1] + f * v[n + 1];
      nve[n] = nve[n + 1] + abs(f) * ve[n + 1];
    }
    v = std::move(nv);
    ve = std::move(nve);
  }

  EvalResult out{v[0], ve[0]};
  if (!is_finite(out.value))
    throw Error("euler_zagier_trailing produced a non-finite value");
  return out;
}

}  // namespace deszeta
