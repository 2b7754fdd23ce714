#include "fchar/verlinde.hpp"

#include <algorithm>

namespace fchar {

VerlindeElt VerlindeElt::zero(int64_t k) {
  if (k < 0) throw ParamError("VerlindeElt: level must be >= 0");
  return {k, std::vector<BigInt>((size_t)k + 1, BigInt(0))};
}

VerlindeElt VerlindeElt::basis(int64_t k, int64_t l) {
  VerlindeElt e = zero(k);
  if (l < 0 || l > k) throw ParamError("VerlindeElt: basis label out of range");
  e.coeffs[l] = 1;
  return e;
}

VerlindeElt& VerlindeElt::operator+=(const VerlindeElt& o) {
  if (level != o.level) throw ParamError("VerlindeElt: level mismatch");
  for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

VerlindeElt& VerlindeElt::mul_scalar(const BigInt& c) {
  for (auto& v : coeffs) v *= c;
  return *this;
}

VerlindeElt verlinde_mul(const VerlindeElt& a, const VerlindeElt& b) {
  if (a.level != b.level) throw ParamError("verlinde_mul: level mismatch");
  const int64_t k = a.level;
  VerlindeElt r = VerlindeElt::zero(k);
  for (int64_t l = 0; l <= k; ++l) {
    if (a.coeffs[l] == 0) continue;
    for (int64_t lp = 0; lp <= k; ++lp) {
      if (b.coeffs[lp] == 0) continue;
      BigInt c = a.coeffs[l] * b.coeffs[lp];
      int64_t hi = std::min(l + lp, 2 * k - l - lp);
      for (int64_t lpp = std::abs(l - lp); lpp <= hi; lpp += 2) r.coeffs[lpp] += c;
    }
  }
  return r;
}

VerlindeElt verlinde_pow(const VerlindeElt& a, uint64_t n) {
  VerlindeElt r = VerlindeElt::unit(a.level);
  for (uint64_t i = 0; i < n; ++i) r = verlinde_mul(r, a);
  return r;
}

BigInt verlinde_coeff(const VerlindeElt& a, int64_t l) {
  if (l < 0 || l > a.level) throw ParamError("verlinde_coeff: label out of range");
  return a.coeffs[l];
}

BigInt dim_bigc(int64_t k, int64_t l, int64_t N) {
  if (k < 0 || l < 0 || l > k || N < 0) throw ParamError("dim_bigc: bad parameters");
  VerlindeElt s = VerlindeElt::zero(k);
  for (int64_t j = 0; j <= k; ++j) s.coeffs[j] = j + 1;
  return verlinde_coeff(verlinde_pow(s, (uint64_t)N), l);
}

BigInt dim_mixc(int64_t k, int64_t l, const Composition& M, const Composition& Mbar) {
  if (k < 1 || l < 0 || l > k) throw ParamError("dim_mixc: bad parameters");
  if (M.size() != k || Mbar.size() != k)
    throw ParamError("dim_mixc: M and Mbar must have length k");
  VerlindeElt r = VerlindeElt::unit(k);
  for (int64_t a = 1; a <= k; ++a) {
    VerlindeElt s = VerlindeElt::zero(k);
    for (int64_t j = 0; j <= a; ++j) s.coeffs[j] = 1;
    for (int64_t rep = 0; rep < M.at(a) + Mbar.at(a); ++rep) r = verlinde_mul(r, s);
  }
  return verlinde_coeff(r, l);
}

}  // namespace fchar
