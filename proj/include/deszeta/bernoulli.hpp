#pragma once

#include <vector>

#include "deszeta/rational.hpp"

namespace deszeta {

// Bernoulli number B_m under the convention x/(e^x-1) = sum B_m x^m / m!,
// so B_1 = -1/2. Values are memoized; the cache supports concurrent reads
// with internally serialized writes.
Rational bernoulli(unsigned m);

// Coefficients of the Bernoulli polynomial
// B_n(x) = sum_k C(n,k) B_k x^(n-k), lowest degree first (size n+1).
std::vector<Rational> bernoulli_polynomial(unsigned n);

}  // namespace deszeta
