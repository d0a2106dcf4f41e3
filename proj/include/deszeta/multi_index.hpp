#pragma once

#include <numeric>
#include <vector>

#include "deszeta/errors.hpp"

namespace deszeta {

// Tuple (k_1,...,k_r) of non-negative integers, r >= 1.
using MultiIndex = std::vector<unsigned>;

inline unsigned weight(const MultiIndex& k) {
  return std::accumulate(k.begin(), k.end(), 0u);
}

inline void check_multi_index(const MultiIndex& k) {
  if (k.empty()) throw Error("MultiIndex must have length >= 1");
}

}  // namespace deszeta
