#include "deszeta/series.hpp"

#include <functional>
#include <numeric>

#include "deszeta/errors.hpp"

namespace deszeta {

namespace {

int total_degree(const TruncatedSeries::Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.num_vars() != b.num_vars() ||
      a.max_total_degree() != b.max_total_degree())
    throw Error("series operands must share num_vars and max_total_degree");
}

}  // namespace

TruncatedSeries::TruncatedSeries(int num_vars, int max_total_degree)
    : num_vars_(num_vars), max_total_degree_(max_total_degree) {
  if (num_vars < 1 || max_total_degree < 0)
    throw Error("TruncatedSeries needs num_vars >= 1 and degree >= 0");
}

Rational TruncatedSeries::coefficient(const Exponents& e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::set_coefficient(const Exponents& e, const Rational& value) {
  if (static_cast<int>(e.size()) != num_vars_)
    throw Error("exponent vector length mismatch");
  if (total_degree(e) > max_total_degree_) return;
  if (value == 0)
    coeffs_.erase(e);
  else
    coeffs_[e] = value;
}

TruncatedSeries TruncatedSeries::constant(int num_vars, int max_total_degree,
                                          const Rational& value) {
  TruncatedSeries s(num_vars, max_total_degree);
  s.set_coefficient(Exponents(num_vars, 0), value);
  return s;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_compatible(a, b);
  TruncatedSeries out = a;
  for (const auto& [e, c] : b.coefficients())
    out.set_coefficient(e, out.coefficient(e) + c);
  return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_compatible(a, b);
  TruncatedSeries out(a.num_vars(), a.max_total_degree());
  const int N = a.max_total_degree();
  for (const auto& [ea, ca] : a.coefficients()) {
    const int da = total_degree(ea);
    for (const auto& [eb, cb] : b.coefficients()) {
      if (da + total_degree(eb) > N) continue;
      TruncatedSeries::Exponents e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.set_coefficient(e, out.coefficient(e) + ca * cb);
    }
  }
  return out;
}

TruncatedSeries series_divide_by_unit(const TruncatedSeries& a,
                                      const TruncatedSeries& b) {
  check_compatible(a, b);
  const int r = a.num_vars();
  const int N = a.max_total_degree();
  const TruncatedSeries::Exponents zero(r, 0);
  const Rational b0 = b.coefficient(zero);
  if (b0 == 0) throw DivisionByNonUnit("series division by non-unit");

  // Graded recursion: q[e] = (a[e] - sum_{0<f<=e} b[f] q[e-f]) / b0.
  TruncatedSeries q(r, N);
  // Enumerate exponent vectors of total degree <= N in graded order.
  std::vector<TruncatedSeries::Exponents> order;
  TruncatedSeries::Exponents e(r, 0);
  for (int d = 0; d <= N; ++d) {
    // all vectors with total degree exactly d
    std::vector<TruncatedSeries::Exponents> level;
    TruncatedSeries::Exponents cur(r, 0);
    // recursive enumeration via explicit stack
    std::function<void(int, int)> rec = [&](int pos, int rem) {
      if (pos == r - 1) {
        cur[pos] = rem;
        level.push_back(cur);
        return;
      }
      for (int v = 0; v <= rem; ++v) {
        cur[pos] = v;
        rec(pos + 1, rem - v);
      }
    };
    rec(0, d);
    for (auto& v : level) order.push_back(std::move(v));
  }

  for (const auto& target : order) {
    Rational acc = a.coefficient(target);
    for (const auto& [f, bf] : b.coefficients()) {
      if (f == zero) continue;
      TruncatedSeries::Exponents g(r);
      bool ok = true;
      for (int i = 0; i < r; ++i) {
        g[i] = target[i] - f[i];
        if (g[i] < 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      acc -= bf * q.coefficient(g);
    }
    q.set_coefficient(target, acc / b0);
  }
  return q;
}

TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b,
                             SeriesOp op) {
  switch (op) {
    case SeriesOp::add:
      return series_add(a, b);
    case SeriesOp::mul:
      return series_mul(a, b);
    case SeriesOp::divide_by_unit:
      return series_divide_by_unit(a, b);
  }
  throw Error("unknown series op");
}

TruncatedSeries series_exp_linear(const std::vector<Rational>& coeffs, int N) {
  const int r = static_cast<int>(coeffs.size());
  TruncatedSeries linear(r, N);
  for (int j = 0; j < r; ++j) {
    TruncatedSeries::Exponents e(r, 0);
    e[j] = 1;
    linear.set_coefficient(e, coeffs[j]);
  }
  TruncatedSeries out = TruncatedSeries::constant(r, N, 1);
  TruncatedSeries power = TruncatedSeries::constant(r, N, 1);
  for (int n = 1; n <= N; ++n) {
    power = series_mul(power, linear);
    if (power.coefficients().empty()) break;
    TruncatedSeries term(r, N);
    const Rational inv_fact = Rational(1) / Rational(factorial(n));
    for (const auto& [e, c] : power.coefficients())
      term.set_coefficient(e, c * inv_fact);
    out = series_add(out, term);
  }
  return out;
}

}  // namespace deszeta
