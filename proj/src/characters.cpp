#include "fchar/characters.hpp"

namespace fchar {

LaurentPoly chi(const Composition& m) {
  LaurentPoly r(qz_vars());
  const int64_t w = m.weight();
  for (const Composition& n : compositions_dominated_by(m)) {
    LaurentPoly f = f_coeff(m, n);
    if (f.is_zero()) continue;
    // z carries the integer exponent |m| - |n| (stored doubled)
    r += embed(f, qz_vars()).shifted({0, 2 * (w - n.weight())});
  }
  return r;
}

LaurentPoly ch_pi(const Composition& m) { return chi(m).shifted({0, -m.weight()}); }

LaurentPoly ch_vm(const Composition& M) {
  LaurentPoly r(qz12_vars());
  for (const Composition& m : compositions_dominated_by(M)) {
    LaurentPoly f = f_coeff(M, m);
    if (f.is_zero()) continue;
    LaurentPoly c = ch_pi(m);
    r += embed(f, qz12_vars()) * embed(c, qz12_vars(), {{"z", "z1"}}) *
         embed(c, qz12_vars(), {{"z", "z2"}});
  }
  return r;
}

LaurentPoly ch_vmmbar(const Composition& M, const Composition& Mbar) {
  if (M.size() != Mbar.size()) throw ParamError("ch_vmmbar: M and Mbar must have equal length");
  LaurentPoly r(qz12_sixth_vars());
  const int64_t dM = M.weight() - Mbar.weight();
  for (const Composition& m : compositions_dominated_by(M)) {
    LaurentPoly fm = f_coeff(M, m);
    if (fm.is_zero()) continue;
    for (const Composition& mb : compositions_dominated_by(Mbar)) {
      LaurentPoly fmb = f_coeff(Mbar, mb);
      if (fmb.is_zero()) continue;
      LaurentPoly a = embed(fm * fmb, qz_vars()) * ch_pi(m + mb);
      // (z1 z2)^(e_z/2) * (z1^{-1} z2)^r with
      // r = (|M|-|Mbar|)/3 - (|m|-|mbar|)/2; in step-6 storage the term
      // (e_q, e_z) lands at (e_q, 3 e_z - d6, 3 e_z + d6), d6 = 6r.
      const int64_t d6 = 2 * dM - 3 * (m.weight() - mb.weight());
      for (const auto& [e, c] : a.terms())
        r.add_term({e[0], 3 * e[1] - d6, 3 * e[1] + d6}, c);
    }
  }
  return r;
}

namespace {

Composition highest_point_multiplicity(int64_t k, int64_t N) {
  std::vector<int64_t> parts(k, 0);
  parts[k - 1] = N;
  return Composition(std::move(parts));
}

}  // namespace

LaurentPoly ch_bigc(int64_t k, int64_t l, int64_t N) {
  if (k < 1 || l < 0 || l > k || N < 0) throw ParamError("ch_bigc: bad parameters");
  const Composition M = highest_point_multiplicity(k, N);
  LaurentPoly r(qz_vars());
  for (const Composition& m : compositions_dominated_by(M)) {
    LaurentPoly f = f_coeff(M, m);
    if (f.is_zero()) continue;
    LaurentPoly kq = restricted_kostka(k, l, m);
    if (kq.is_zero()) continue;
    r += embed(f * kq, qz_vars()) * ch_pi(m);
  }
  return r;
}

LaurentPoly ch_bigc_alternating(int64_t k, int64_t l, int64_t N) {
  if (k < 1 || l < 0 || l > k || N < 0) throw ParamError("ch_bigc_alternating: bad parameters");
  const Composition M = highest_point_multiplicity(k, N);
  const int64_t w = M.weight();

  // cache the m-sum ingredients once
  struct Item {
    Composition m;
    LaurentPoly f_chpi;  // F_{M,m}(q) ch_{q,z}(pi_m)
  };
  std::vector<Item> items;
  for (const Composition& m : compositions_dominated_by(M)) {
    LaurentPoly f = f_coeff(M, m);
    if (f.is_zero()) continue;
    items.push_back({m, embed(f, qz_vars()) * ch_pi(m)});
  }
  auto level_sum = [&](int64_t label) {
    LaurentPoly s(qz_vars());
    for (const Item& it : items) {
      LaurentPoly kq = unrestricted_kostka(label, it.m);
      if (kq.is_zero()) continue;
      s += embed(kq, qz_vars()) * it.f_chpi;
    }
    return s;
  };

  LaurentPoly r(qz_vars());
  for (int64_t i = 0;; ++i) {
    const int64_t label = 2 * (k + 2) * i + l;
    if (label > w) break;
    r += level_sum(label).shifted({(k + 2) * i * i + (l + 1) * i, 0});
  }
  for (int64_t i = 1;; ++i) {
    const int64_t label = 2 * (k + 2) * i - l - 2;
    if (label > w) break;
    r -= level_sum(label).shifted({(k + 2) * i * i - (l + 1) * i, 0});
  }
  return r;
}

LaurentPoly ch_mixc(int64_t k, int64_t l, const Composition& M, const Composition& Mbar) {
  if (k < 1 || l < 0 || l > k) throw ParamError("ch_mixc: bad parameters");
  if (M.size() != k || Mbar.size() != k)
    throw ParamError("ch_mixc: M and Mbar must have length k");
  LaurentPoly r(qz_vars());
  for (const Composition& m : compositions_dominated_by(M)) {
    LaurentPoly fm = f_coeff(M, m);
    if (fm.is_zero()) continue;
    for (const Composition& mb : compositions_dominated_by(Mbar)) {
      LaurentPoly fmb = f_coeff(Mbar, mb);
      if (fmb.is_zero()) continue;
      LaurentPoly kq = restricted_kostka(k, l, m + mb);
      if (kq.is_zero()) continue;
      // z tracks the full extended weight |m| - |mbar| (stored doubled)
      r += embed(fm * fmb * kq, qz_vars()).shifted({0, 2 * (m.weight() - mb.weight())});
    }
  }
  return r;
}

void CoinvariantParams::validate() const {
  if (k < 1) throw ParamError("params: level k must be >= 1");
  if (l < 0 || l > k) throw ParamError("params: need 0 <= l <= k");
  const bool pointwise = N.has_value();
  const bool mixed = M.has_value() || Mbar.has_value();
  if (pointwise == mixed)
    throw ParamError("params: give either N or the pair (M, Mbar)");
  if (pointwise) {
    if (*N < 0) throw ParamError("params: N must be >= 0");
  } else {
    if (!M || !Mbar) throw ParamError("params: mixed family needs both M and Mbar");
    if (M->size() != k || Mbar->size() != k)
      throw ParamError("params: M and Mbar must have length k");
  }
}

}  // namespace fchar
