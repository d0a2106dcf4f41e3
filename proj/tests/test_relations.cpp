#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deszeta/relations.hpp"

using namespace deszeta;
using nlohmann::json;

TEST_CASE("report serialization carries exactly the contract fields") {
  RelationReport rep;
  rep.relation = "demo";
  rep.params = json{{"x", 1}};
  rep.exact = true;
  rep.lhs_exact = Rational(3, 4);
  rep.rhs_exact = Rational(3, 4);
  rep.verdict = Verdict::pass;
  const json j = report_to_json(rep, 20);
  REQUIRE(j.size() == 7);
  for (const char* key :
       {"relation", "params", "lhs", "rhs", "residual", "tolerance", "verdict"})
    CHECK(j.contains(key));
  CHECK(j["lhs"] == "3/4");
  CHECK(j["residual"] == "0");
  CHECK(j["verdict"] == "pass");
  CHECK(std::string(verdict_name(Verdict::unsupported)) == "unsupported");
}

TEST_CASE("tabulated map access") {
  TabulatedBivariateMap f;
  f.q = 1;
  f.set(0, {0}, Rational(1, 2));
  CHECK(f.at(0, {0}) == Rational(1, 2));
  CHECK_THROWS_AS(f.at(-1, {0}), MissingTableEntry);
}

TEST_CASE("binomial inversion roundtrip on a hand-built table") {
  TabulatedBivariateMap f;
  f.q = 2;
  // arbitrary rationals on the closure needed for weight <= 2 at s = 0
  for (int n = -4; n <= 0; ++n)
    for (unsigned j1 = 0; j1 <= 2; ++j1)
      for (unsigned j2 = 0; j2 + j1 <= 2; ++j2)
        f.set(n, {j1, j2}, Rational(3 * n + static_cast<int>(j1) - 7,
                                    1 + static_cast<int>(j2) + 2));

  // g = forward(f); then inverse(g) must reproduce f entry-wise. Forward at
  // shift n reads f down to shift n - 2, so g only exists on [-2, 0].
  TabulatedBivariateMap g;
  g.q = 2;
  for (int n = -2; n <= 0; ++n)
    for (unsigned j1 = 0; j1 <= 2; ++j1)
      for (unsigned j2 = 0; j2 + j1 <= 2; ++j2)
        g.set(n, {j1, j2}, binomial_inversion_forward(f, n, {j1, j2}));

  for (unsigned l1 = 0; l1 <= 2; ++l1)
    for (unsigned l2 = 0; l2 + l1 <= 2; ++l2)
      CHECK(binomial_inversion_inverse(g, 0, {l1, l2}) == f.at(0, {l1, l2}));
}

TEST_CASE("exact relation verifiers") {
  auto rep1 = verify_main_theorem({Cplx{-2.0}, Cplx{-1.0}}, {1, 2});
  CHECK(rep1.exact);
  CHECK(rep1.verdict == Verdict::pass);
  CHECK(rep1.lhs_exact == rep1.rhs_exact);

  auto rep2 = verify_prop_thm41({Cplx{0.0}, Cplx{-3.0}}, {2});
  CHECK(rep2.exact);
  CHECK(rep2.verdict == Verdict::pass);
}

TEST_CASE("numeric relation verifiers") {
  auto rep1 = verify_main_theorem({Cplx{4.6}}, {0});
  CHECK(!rep1.exact);
  CHECK(rep1.verdict == Verdict::pass);
  CHECK(rep1.residual <= rep1.tolerance);

  auto rep2 = verify_prop_thm41({Cplx{4.0}}, {1});
  CHECK(rep2.verdict == Verdict::pass);

  // q >= 2 with non-integer s is a declared boundary, reported not thrown
  auto rep3 = verify_main_theorem({Cplx{4.5}, Cplx{4.5}}, {1, 1});
  CHECK(rep3.verdict == Verdict::unsupported);
}

TEST_CASE("suite dispatch") {
  CHECK_THROWS_AS(run_suite("unknown"), UnknownSuite);
  auto reports = run_suite("inversion");
  CHECK(reports.size() == 100);
  for (const auto& r : reports) {
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.exact);
    CHECK(r.lhs_exact == r.rhs_exact);
  }
  // rerunning with the same config reproduces the reports exactly
  auto again = run_suite("inversion");
  REQUIRE(again.size() == reports.size());
  for (size_t i = 0; i < reports.size(); ++i) {
    CHECK(again[i].params == reports[i].params);
    CHECK(again[i].lhs_exact == reports[i].lhs_exact);
  }
}
