#pragma once

#include <map>
#include <vector>

#include "deszeta/rational.hpp"

namespace deszeta {

// Sparse Laurent polynomial in u_1..u_r (exponents >= 0) and v_1..v_r
// (exponents may be negative). Key layout: [u exponents..., v exponents...].
class LaurentPoly {
 public:
  using Exponents = std::vector<int>;

  explicit LaurentPoly(int r) : r_(r) {}

  int r() const { return r_; }
  const std::map<Exponents, Int>& terms() const { return terms_; }
  void add_term(const Exponents& e, const Int& c);
  LaurentPoly operator*(const LaurentPoly& other) const;
  static LaurentPoly one(int r);

 private:
  int r_;
  std::map<Exponents, Int> terms_;
};

// Integer coefficient table a^r_{l,m}: l in N_0^r, m in Z^r with |m| = 0.
struct CoeffEntry {
  std::vector<unsigned> l;
  std::vector<int> m;
  Int a;
};

struct CoeffTable {
  int r = 0;
  std::vector<CoeffEntry> entries;  // deterministic order (sorted by key)

  const Int* find(const std::vector<unsigned>& l, const std::vector<int>& m) const;
};

struct CoeffTableStats {
  size_t num_terms = 0;
  int max_abs_m = 0;
  unsigned max_total_l = 0;
};

// Expands G_r(u;v) = prod_j {1 - (u_j v_j + ... + u_r v_r)(v_j^{-1} - v_{j-1}^{-1})}
// (the j = 1 factor omits the v_0^{-1} term) and reads off the coefficients.
// Throws InternalInvariantViolation if any term has m_1+...+m_r != 0.
// Tables are cached; 1 <= r <= 6.
const CoeffTable& expand_G(int r);

CoeffTableStats table_stats(const CoeffTable& t);

}  // namespace deszeta
