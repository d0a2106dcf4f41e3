#include "deszeta/desing_values.hpp"

#include <functional>
#include <map>
#include <mutex>

#include "deszeta/bernoulli.hpp"
#include "deszeta/series.hpp"

namespace deszeta {

namespace {

// All ordered compositions of k into `parts` non-negative parts.
const std::vector<std::vector<unsigned>>& compositions(unsigned k, unsigned parts) {
  static std::map<std::pair<unsigned, unsigned>, std::vector<std::vector<unsigned>>>
      cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto key = std::make_pair(k, parts);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(parts, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned rem) {
    if (pos + 1 == parts) {
      cur[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (unsigned v = 0; v <= rem; ++v) {
      cur[pos] = v;
      rec(pos + 1, rem - v);
    }
  };
  if (parts == 0) {
    if (k == 0) out.push_back({});
  } else {
    rec(0, k);
  }
  return cache.emplace(key, std::move(out)).first->second;
}

Rational zeta_des_value_uncached(const MultiIndex& k) {
  const unsigned r = static_cast<unsigned>(k.size());
  // nu matrix enumerated column by column; column i (1-based) holds the
  // entries nu_{1i},...,nu_{ii} with column sum k_{i}.
  Rational total = 0;
  std::vector<Int> row_fact_denominator(r, 1);
  std::vector<unsigned> row_sum(r, 0);

  std::function<void(unsigned)> rec = [&](unsigned col) {
    if (col == r) {
      Rational term = 1;
      for (unsigned i = 0; i < r; ++i) {
        term *= Rational(factorial(k[i]), row_fact_denominator[i]);
        term *= bernoulli(row_sum[i] + 1);
        if (term == 0) return;  // odd Bernoulli index above 1
      }
      total += term;
      return;
    }
    for (const auto& comp : compositions(k[col], col + 1)) {
      for (unsigned row = 0; row <= col; ++row) {
        row_sum[row] += comp[row];
        row_fact_denominator[row] *= factorial(comp[row]);
      }
      rec(col + 1);
      for (unsigned row = 0; row <= col; ++row) {
        row_sum[row] -= comp[row];
        row_fact_denominator[row] /= factorial(comp[row]);
      }
    }
  };
  rec(0);

  if (weight(k) % 2 == 1) total = -total;
  return total;
}

// Z_FKMT(t_1,...,t_r) as a truncated series of total degree N.
TruncatedSeries build_generating_series(unsigned r, int N) {
  // Each factor is ((1 - T)e^T - 1)/(e^T - 1)^2 with T = t_i+...+t_r. Both
  // numerator and denominator vanish to order 2 in T; cancel T^2 first and
  // divide the univariate cofactors, then substitute the linear form.
  std::vector<Rational> quotient(N + 1);
  {
    // numerator/T^2: a_n = (-1-n)/(n+2)!,  denominator/T^2: d_n with d_0 = 1
    std::vector<Rational> a(N + 1), d(N + 1);
    for (int n = 0; n <= N; ++n) {
      a[n] = Rational(-1 - n, 1) / Rational(factorial(n + 2));
      // (e^T-1)^2 = e^{2T} - 2e^T + 1 has T^m coefficient (2^m - 2)/m!
      Int two_pow = Int(1) << (n + 2);
      d[n] = Rational(two_pow - 2) / Rational(factorial(n + 2));
    }
    for (int n = 0; n <= N; ++n) {
      Rational acc = a[n];
      for (int f = 1; f <= n; ++f) acc -= d[f] * quotient[n - f];
      quotient[n] = acc;  // d[0] == 1
    }
  }

  TruncatedSeries product = TruncatedSeries::constant(r, N, 1);
  for (unsigned i = 0; i < r; ++i) {
    TruncatedSeries linear(r, N);
    for (unsigned j = i; j < r; ++j) {
      TruncatedSeries::Exponents e(r, 0);
      e[j] = 1;
      linear.set_coefficient(e, 1);
    }
    TruncatedSeries factor = TruncatedSeries::constant(r, N, quotient[0]);
    TruncatedSeries power = TruncatedSeries::constant(r, N, 1);
    for (int n = 1; n <= N; ++n) {
      power = series_mul(power, linear);
      TruncatedSeries term(r, N);
      for (const auto& [e, c] : power.coefficients())
        term.set_coefficient(e, c * quotient[n]);
      factor = series_add(factor, term);
    }
    product = series_mul(product, factor);
  }
  return product;
}

struct GfCacheEntry {
  int degree = -1;
  TruncatedSeries series{1, 0};
};

}  // namespace

Rational zeta_des_value(const MultiIndex& k) {
  check_multi_index(k);
  static std::map<MultiIndex, Rational> cache;
  static std::mutex mu;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
  }
  Rational value = zeta_des_value_uncached(k);
  std::lock_guard lock(mu);
  return cache.emplace(k, std::move(value)).first->second;
}

Rational zeta_des_value_gf(const MultiIndex& k) {
  check_multi_index(k);
  const unsigned r = static_cast<unsigned>(k.size());
  const int N = static_cast<int>(weight(k));

  static std::map<unsigned, GfCacheEntry> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto& entry = cache[r];
  if (entry.degree < N) {
    entry.series = build_generating_series(r, N);
    entry.degree = N;
  }

  // Z = sum (-t)^k / k! zeta^des(-k), so invert sign and factorials.
  TruncatedSeries::Exponents e(k.begin(), k.end());
  Rational c = entry.series.coefficient(e);
  for (unsigned i = 0; i < r; ++i) c *= Rational(factorial(k[i]));
  if (N % 2 == 1) c = -c;
  return c;
}

Rational verify_shuffle_integer(const MultiIndex& k, const MultiIndex& l) {
  check_multi_index(k);
  check_multi_index(l);
  const unsigned p = static_cast<unsigned>(k.size());
  const unsigned q = static_cast<unsigned>(l.size());

  Rational rhs = 0;
  std::vector<unsigned> i(q, 0);
  for (;;) {
    Rational coef = 1;
    unsigned shift = 0;
    for (unsigned b = 0; b < q; ++b) {
      coef *= Rational(binomial(l[b], i[b]));
      if (i[b] % 2 == 1) coef = -coef;
      shift += i[b];
    }
    MultiIndex merged(k);
    merged[p - 1] += shift;
    for (unsigned b = 0; b < q; ++b) merged.push_back(l[b] - i[b]);
    rhs += coef * zeta_des_value(merged);

    // next i in the box prod [0, l_b]
    unsigned b = 0;
    while (b < q && i[b] == l[b]) i[b++] = 0;
    if (b == q) break;
    ++i[b];
  }

  return zeta_des_value(k) * zeta_des_value(l) - rhs;
}

}  // namespace deszeta
