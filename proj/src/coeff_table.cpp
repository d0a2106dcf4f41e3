#include "deszeta/coeff_table.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

#include "deszeta/errors.hpp"

namespace deszeta {

void LaurentPoly::add_term(const Exponents& e, const Int& c) {
  if (static_cast<int>(e.size()) != 2 * r_)
    throw Error("LaurentPoly exponent vector must have length 2r");
  for (int i = 0; i < r_; ++i)
    if (e[i] < 0) throw Error("u exponents must be non-negative");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  LaurentPoly out(r_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) {
      Exponents e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

LaurentPoly LaurentPoly::one(int r) {
  LaurentPoly p(r);
  p.add_term(Exponents(2 * r, 0), 1);
  return p;
}

const Int* CoeffTable::find(const std::vector<unsigned>& l,
                            const std::vector<int>& m) const {
  for (const auto& e : entries)
    if (e.l == l && e.m == m) return &e.a;
  return nullptr;
}

namespace {

CoeffTable expand_G_uncached(int r) {
  LaurentPoly product = LaurentPoly::one(r);
  for (int j = 1; j <= r; ++j) {
    // 1 - (u_j v_j + ... + u_r v_r)(v_j^{-1} - v_{j-1}^{-1}); v_0^{-1} := 0.
    LaurentPoly factor(r);
    factor.add_term(LaurentPoly::Exponents(2 * r, 0), 1);
    for (int t = j; t <= r; ++t) {
      LaurentPoly::Exponents e(2 * r, 0);
      e[t - 1] = 1;          // u_t
      e[r + t - 1] = 1;      // v_t
      e[r + j - 1] -= 1;     // v_j^{-1}
      factor.add_term(e, -1);
      if (j > 1) {
        LaurentPoly::Exponents f(2 * r, 0);
        f[t - 1] = 1;
        f[r + t - 1] = 1;
        f[r + j - 2] -= 1;   // v_{j-1}^{-1}
        factor.add_term(f, 1);
      }
    }
    product = product * factor;
  }

  CoeffTable table;
  table.r = r;
  for (const auto& [e, c] : product.terms()) {
    CoeffEntry entry;
    entry.l.assign(e.begin(), e.begin() + r);
    entry.m.assign(e.begin() + r, e.end());
    entry.a = c;
    const int m_sum = std::accumulate(entry.m.begin(), entry.m.end(), 0);
    if (m_sum != 0) {
      std::ostringstream os;
      os << "G_" << r << " expansion produced a term with |m| = " << m_sum;
      throw InternalInvariantViolation(os.str());
    }
    table.entries.push_back(std::move(entry));
  }
  // std::map iteration already sorts by (l, m); keep that order.
  return table;
}

}  // namespace

const CoeffTable& expand_G(int r) {
  if (r < 1 || r > 6) throw Error("expand_G supports 1 <= r <= 6");
  static std::map<int, CoeffTable> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto it = cache.find(r);
  if (it == cache.end()) it = cache.emplace(r, expand_G_uncached(r)).first;
  return it->second;
}

CoeffTableStats table_stats(const CoeffTable& t) {
  CoeffTableStats s;
  s.num_terms = t.entries.size();
  for (const auto& e : t.entries) {
    for (int mj : e.m) s.max_abs_m = std::max(s.max_abs_m, std::abs(mj));
    unsigned lsum = std::accumulate(e.l.begin(), e.l.end(), 0u);
    s.max_total_l = std::max(s.max_total_l, lsum);
  }
  return s;
}

}  // namespace deszeta
