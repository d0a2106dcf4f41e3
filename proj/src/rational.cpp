#include "deszeta/rational.hpp"

#include <mutex>
#include <vector>

namespace deszeta {

Int factorial(unsigned n) {
  static std::vector<Int> cache{1};
  static std::mutex mu;
  std::lock_guard lock(mu);
  while (cache.size() <= n) cache.push_back(cache.back() * Int(cache.size()));
  return cache[n];
}

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

Rational pochhammer_exact(const Rational& s, unsigned k) {
  Rational out = 1;
  for (unsigned i = 0; i < k; ++i) out *= s + Rational(i);
  return out;
}

}  // namespace deszeta
