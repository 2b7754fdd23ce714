#pragma once

#include <cstdint>
#include <vector>

#include "fchar/numeric.hpp"
#include "fchar/qcomb.hpp"

namespace fchar {

// Element of the level-k fusion ring with basis [0], ..., [k]:
// [l] [l'] = sum of [l''] over |l-l'| <= l'' <= min(l+l', 2k-l-l'),
// l'' = |l-l'| (mod 2).
struct VerlindeElt {
  int64_t level = 0;           // k >= 0
  std::vector<BigInt> coeffs;  // size k+1

  static VerlindeElt zero(int64_t k);
  static VerlindeElt basis(int64_t k, int64_t l);
  static VerlindeElt unit(int64_t k) { return basis(k, 0); }

  VerlindeElt& operator+=(const VerlindeElt& o);
  friend VerlindeElt operator+(VerlindeElt a, const VerlindeElt& b) { return a += b; }
  VerlindeElt& mul_scalar(const BigInt& c);
  bool operator==(const VerlindeElt&) const = default;
};

VerlindeElt verlinde_mul(const VerlindeElt& a, const VerlindeElt& b);
VerlindeElt verlinde_pow(const VerlindeElt& a, uint64_t n);
BigInt verlinde_coeff(const VerlindeElt& a, int64_t l);

// dim of the N-point coinvariant space at level k, weight l:
// coefficient of [l] in (sum_j (j+1)[j])^N.
BigInt dim_bigc(int64_t k, int64_t l, int64_t N);

// dim of the mixed coinvariant space: coefficient of [l] in
// prod_a ([0] + [1] + ... + [a])^{M_a + Mbar_a}.
BigInt dim_mixc(int64_t k, int64_t l, const Composition& M, const Composition& Mbar);

}  // namespace fchar
