#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "deszeta/coeff_table.hpp"
#include "deszeta/errors.hpp"

using namespace deszeta;

TEST_CASE("Laurent polynomial product") {
  LaurentPoly p(1), q(1);
  p.add_term({1, 0}, 1);   // u
  p.add_term({0, -1}, 2);  // 2/v
  q.add_term({0, 1}, 3);   // 3v
  auto pq = p * q;
  CHECK(pq.terms().size() == 2);
  CHECK(pq.terms().at({1, 1}) == 3);
  CHECK(pq.terms().at({0, 0}) == 6);
  auto one = LaurentPoly::one(1);
  auto pid = p * one;
  CHECK(pid.terms() == p.terms());
}

TEST_CASE("depth-1 table") {
  const auto& t = expand_G(1);
  REQUIRE(t.entries.size() == 2);
  CHECK(t.entries[0].l == std::vector<unsigned>{0});
  CHECK(t.entries[0].m == std::vector<int>{0});
  CHECK(t.entries[0].a == 1);
  CHECK(t.entries[1].l == std::vector<unsigned>{1});
  CHECK(t.entries[1].m == std::vector<int>{0});
  CHECK(t.entries[1].a == -1);
  auto st = table_stats(t);
  CHECK(st.num_terms == 2);
  CHECK(st.max_abs_m == 0);
  CHECK(st.max_total_l == 1);
}

TEST_CASE("depth-2 table, hand-expanded") {
  // G_2 = (1 - (u1 v1 + u2 v2)/v1)(1 - (u2 v2)(1/v2 - 1/v1)) expands to the
  // seven terms below.
  const auto& t = expand_G(2);
  REQUIRE(t.entries.size() == 7);
  auto get = [&](std::vector<unsigned> l, std::vector<int> m) {
    const Int* a = t.find(l, m);
    REQUIRE(a != nullptr);
    return *a;
  };
  CHECK(get({0, 0}, {0, 0}) == 1);
  CHECK(get({1, 0}, {0, 0}) == -1);
  CHECK(get({0, 1}, {0, 0}) == -1);
  CHECK(get({1, 1}, {0, 0}) == 1);
  CHECK(get({0, 2}, {-1, 1}) == 1);
  CHECK(get({1, 1}, {-1, 1}) == -1);
  CHECK(get({0, 2}, {-2, 2}) == -1);
  CHECK(t.find({2, 0}, {0, 0}) == nullptr);
  auto st = table_stats(t);
  CHECK(st.num_terms == 7);
  CHECK(st.max_abs_m == 2);
  CHECK(st.max_total_l == 2);
}

TEST_CASE("every entry has zero total shift, r <= 5") {
  for (int r = 1; r <= 5; ++r) {
    const auto& t = expand_G(r);
    CHECK(!t.entries.empty());
    for (const auto& e : t.entries) {
      CHECK(std::accumulate(e.m.begin(), e.m.end(), 0) == 0);
      CHECK(e.l.size() == static_cast<size_t>(r));
      CHECK(e.m.size() == static_cast<size_t>(r));
      CHECK(e.a != 0);
    }
  }
}

TEST_CASE("depth bounds") {
  CHECK_THROWS_AS(expand_G(0), Error);
  CHECK_THROWS_AS(expand_G(7), Error);
  CHECK_NOTHROW(expand_G(6));
}
