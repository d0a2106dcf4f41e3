#include "deszeta/bernoulli.hpp"

#include <shared_mutex>

namespace deszeta {

namespace {

std::vector<Rational>& bernoulli_cache() {
  static std::vector<Rational> cache{Rational(1)};
  return cache;
}

std::shared_mutex& bernoulli_mutex() {
  static std::shared_mutex mu;
  return mu;
}

// Defining recurrence: sum_{j=0}^{m} C(m+1,j) B_j = 0 for m >= 1.
void extend_cache(unsigned m) {
  auto& cache = bernoulli_cache();
  while (cache.size() <= m) {
    const unsigned n = static_cast<unsigned>(cache.size());
    Rational acc = 0;
    for (unsigned j = 0; j < n; ++j) acc += Rational(binomial(n + 1, j)) * cache[j];
    cache.push_back(-acc / Rational(n + 1));
  }
}

}  // namespace

Rational bernoulli(unsigned m) {
  {
    std::shared_lock lock(bernoulli_mutex());
    if (m < bernoulli_cache().size()) return bernoulli_cache()[m];
  }
  std::unique_lock lock(bernoulli_mutex());
  extend_cache(m);
  return bernoulli_cache()[m];
}

std::vector<Rational> bernoulli_polynomial(unsigned n) {
  std::vector<Rational> out(n + 1);
  for (unsigned k = 0; k <= n; ++k)
    out[n - k] = Rational(binomial(n, k)) * bernoulli(k);
  return out;
}

}  // namespace deszeta
