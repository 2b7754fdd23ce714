#pragma once

#include <cstdint>
#include <optional>

#include "fchar/kostka.hpp"
#include "fchar/qcomb.hpp"

namespace fchar {

// Variable lists used by the character formulas. z-type variables carry
// half-integer exponents (step 2); the two-variable sl3 character needs
// sixths (step 6).
inline VarSpec qz_vars() { return {kVarQ, {"z", 2}}; }
inline VarSpec qz12_vars() { return {kVarQ, {"z1", 2}, {"z2", 2}}; }
inline VarSpec qz12_sixth_vars() { return {kVarQ, {"z1", 6}, {"z2", 6}}; }

// chi_m(q,z) = sum_n z^{|m|-|n|} F_{m,n}(q), over n with
// lambda(n) <= lambda(m). Integer z-exponents.
LaurentPoly chi(const Composition& m);

// Graded character of the fusion product pi_m = pi_1^{* m_1} * ... *
// pi_k^{* m_k}: ch_{q,z} = z^{-|m|/2} chi_m(q,z). Half-integer
// z-exponents when |m| is odd.
LaurentPoly ch_pi(const Composition& m);

// Two-variable character of the level-k fusion tensor module built from
// M = (M_1..M_k) dual-pair factors, summed over intermediate labels:
//   ch_{q,z1,z2} = sum_m F_{M,m}(q) ch_{q,z1}(pi_m) ch_{q,z2}(pi_m).
LaurentPoly ch_vm(const Composition& M);

// Two-variable character of the sl3-type fusion module with factors
// labeled by M and dual factors labeled by Mbar:
//   sum_{m,mbar} F_{M,m} F_{Mbar,mbar} ch_{q,z1z2}(pi_{m+mbar})
//                * (z1^{-1} z2)^{(|M|-|Mbar|)/3 - (|m|-|mbar|)/2}.
// Exponents live in sixths of integers (step-6 variables).
LaurentPoly ch_vmmbar(const Composition& M, const Composition& Mbar);

// Character of the N-point coinvariant space at level k, weight l:
//   sum_m F_{(0..0,N),m}(q) K^{(k)}_{l,m}(q) ch_{q,z}(pi_m).
LaurentPoly ch_bigc(int64_t k, int64_t l, int64_t N);

// Same space through the alternating-sum identity: plugging the
// unrestricted-Kostka alternating sum for K^{(k)} and regrouping gives
//   sum over labels l' of signed q-powers of
//   KK_{l',M}(q,z) = sum_m F_{M,m}(q) K_{l',m}(q) ch_{q,z}(pi_m).
LaurentPoly ch_bigc_alternating(int64_t k, int64_t l, int64_t N);

// Character of the mixed coinvariant space with factor multiplicities M
// and dual multiplicities Mbar:
//   sum_{m,mbar} F_{M,m} F_{Mbar,mbar} K^{(k)}_{l,m+mbar}(q)
//                * z^{|m|-|mbar|}.
LaurentPoly ch_mixc(int64_t k, int64_t l, const Composition& M, const Composition& Mbar);

// Validated parameter bundle for the coinvariant families, mirroring the
// CLI surface: (k,l,N) for the symmetric family, (k,l,M,Mbar) for the
// mixed one.
struct CoinvariantParams {
  int64_t k = 1;
  int64_t l = 0;
  std::optional<int64_t> N;
  std::optional<Composition> M;
  std::optional<Composition> Mbar;
  void validate() const;
};

}  // namespace fchar
