#include "fchar/kostka.hpp"

#include <algorithm>

namespace fchar {

LaurentPoly restricted_kostka(int64_t k, int64_t l, const Composition& m_in) {
  if (k < 1) throw ParamError("restricted_kostka: level must be >= 1");
  if (l < 0 || l > k) throw ParamError("restricted_kostka: need 0 <= l <= k");
  const Composition m = m_in.resized(k);  // throws if a nonzero entry would drop
  LaurentPoly r(qvars());
  const int64_t diff = m.weight() - l;
  if (diff < 0 || diff % 2 != 0) return r;
  for (const Composition& n : compositions_with_weight(k, diff / 2)) {
    // c(n) and the vacancy numbers p_a
    int64_t c = 0;
    bool dead = false;
    LaurentPoly term = LaurentPoly::constant(qvars(), 1);
    for (int64_t a = 1; a <= k && !dead; ++a) {
      const int64_t v_a = std::max<int64_t>(a - k + l, 0);
      c += v_a * n.at(a);
      int64_t p_a = -v_a;
      for (int64_t b = 1; b <= k; ++b) {
        const int64_t A_ab = std::min(a, b);
        c += A_ab * n.at(a) * n.at(b);
        p_a += A_ab * (m.at(b) - 2 * n.at(b));
      }
      LaurentPoly f = q_binomial(p_a + n.at(a), n.at(a));
      if (f.is_zero()) {
        dead = true;
        break;
      }
      term = term * f;
    }
    if (dead) continue;
    r += term.shifted({c});
  }
  return r;
}

LaurentPoly unrestricted_kostka(int64_t l, const Composition& m) {
  if (l < 0) throw ParamError("unrestricted_kostka: need l >= 0");
  const int64_t kstar = std::max({l, m.weight(), m.size(), (int64_t)1});
  return restricted_kostka(kstar, l, m.resized(kstar));
}

LaurentPoly alternating_sum_kostka(int64_t k, int64_t l, const Composition& m) {
  if (k < 1) throw ParamError("alternating_sum_kostka: level must be >= 1");
  if (l < 0 || l > k) throw ParamError("alternating_sum_kostka: need 0 <= l <= k");
  const int64_t w = m.weight();
  LaurentPoly r(qvars());
  for (int64_t i = 0;; ++i) {
    const int64_t label = 2 * (k + 2) * i + l;
    if (label > w) break;
    r += unrestricted_kostka(label, m).shifted({(k + 2) * i * i + (l + 1) * i});
  }
  for (int64_t i = 1;; ++i) {
    const int64_t label = 2 * (k + 2) * i - l - 2;  // >= k+2 > 0
    if (label > w) break;
    r -= unrestricted_kostka(label, m).shifted({(k + 2) * i * i - (l + 1) * i});
  }
  return r;
}

}  // namespace fchar
