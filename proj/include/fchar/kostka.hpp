#pragma once

#include <cstdint>

#include "fchar/qcomb.hpp"

namespace fchar {

// Level-k restricted Kostka polynomial K^{(k)}_{l,m}(q), the fermionic
// sum over n in Z_{>=0}^k with 2|n| = |m| - l:
//   K = sum_n q^{c(n)} prod_a [p_a + n_a choose n_a]_q,
//   c(n) = sum_{a,b} A_{ab} n_a n_b + sum_a v_a n_a,
//   p_a  = sum_b A_{ab} (m_b - 2 n_b) - v_a,
// A_{ab} = min(a,b), v_a = max(a - k + l, 0). Zero when |m| - l is
// negative or odd. m shorter than k is zero-padded.
LaurentPoly restricted_kostka(int64_t k, int64_t l, const Composition& m);

// Level-infinity Kostka polynomial K_{l,m}(q): the restricted value
// stabilizes once k >= max(l, |m|); computed at k* = max(l, |m|,
// len(m), 1).
LaurentPoly unrestricted_kostka(int64_t l, const Composition& m);

// Restricted Kostka via the alternating sum of unrestricted ones:
//   K^{(k)}_{l,m} = sum_{i>=0} q^{(k+2)i^2 + (l+1)i} K_{2(k+2)i+l, m}
//                 - sum_{i>0}  q^{(k+2)i^2 - (l+1)i} K_{2(k+2)i-l-2, m}.
// Terms with label > |m| vanish, which truncates both sums.
LaurentPoly alternating_sum_kostka(int64_t k, int64_t l, const Composition& m);

}  // namespace fchar
