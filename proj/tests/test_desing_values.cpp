#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deszeta/bernoulli.hpp"
#include "deszeta/desing_values.hpp"

using namespace deszeta;

namespace {
void for_each_index(size_t len, unsigned max_weight,
                    const std::function<void(const MultiIndex&)>& fn) {
  MultiIndex cur(len, 0);
  std::function<void(size_t, unsigned)> rec = [&](size_t pos, unsigned left) {
    if (pos == len) {
      fn(cur);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  rec(0, max_weight);
}
}  // namespace

TEST_CASE("depth-1 closed form (-1)^k B_{k+1}") {
  for (unsigned k = 0; k <= 20; ++k) {
    Rational expect = bernoulli(k + 1);
    if (k % 2 == 1) expect = -expect;
    CHECK(zeta_des_value({k}) == expect);
  }
  CHECK(zeta_des_value({0}) == Rational(-1, 2));
  CHECK(zeta_des_value({1}) == Rational(-1, 6));
  CHECK(zeta_des_value({2}) == 0);
}

TEST_CASE("small depth-2 values") {
  CHECK(zeta_des_value({0, 0}) == Rational(1, 4));
  CHECK(zeta_des_value({0, 1}) == Rational(1, 6));
  CHECK(zeta_des_value({1, 0}) == Rational(1, 12));
  CHECK(zeta_des_value({1, 1}) == Rational(1, 36));
  CHECK(zeta_des_value({2, 0}) == 0);
}

TEST_CASE("generating function route agrees") {
  for (size_t r = 1; r <= 3; ++r)
    for_each_index(r, 6, [](const MultiIndex& k) {
      CHECK(zeta_des_value(k) == zeta_des_value_gf(k));
    });
  CHECK(zeta_des_value({2, 1, 0, 3}) == zeta_des_value_gf({2, 1, 0, 3}));
}

TEST_CASE("integer shuffle identity residual is zero") {
  for_each_index(2, 3, [](const MultiIndex& k) {
    for_each_index(2, 3, [&](const MultiIndex& l) {
      CHECK(verify_shuffle_integer(k, l) == 0);
    });
  });
  CHECK(verify_shuffle_integer({3}, {2, 1}) == 0);
  CHECK(verify_shuffle_integer({1, 2, 0}, {4}) == 0);
}

TEST_CASE("empty index rejected") {
  CHECK_THROWS_AS(zeta_des_value(MultiIndex{}), Error);
}
