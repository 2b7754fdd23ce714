#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "fchar/numeric.hpp"

namespace fchar {

// Integer matrix in triplet form, rows/cols indexed from 0.
struct SparseIntMat {
  int64_t n = 0;
  std::vector<std::tuple<int32_t, int32_t, int64_t>> entries;  // (row, col, value)

  void add(int64_t r, int64_t c, int64_t v) {
    if (v != 0) entries.emplace_back((int32_t)r, (int32_t)c, v);
  }
  std::vector<BigInt> apply(const std::vector<BigInt>& x) const;
  std::vector<std::vector<BigInt>> to_dense() const;
};

// exact [A,B] for bracket checks
std::vector<std::vector<BigInt>> commutator_dense(const SparseIntMat& a, const SparseIntMat& b);

// Finite-dimensional module with named generator matrices, named
// diagonal weight operators (integer eigenvalue vectors) and a
// distinguished cyclic vector. Generator matrices are over Z; the fusion
// engine maps them into the working field.
struct RepModule {
  std::string name;
  int64_t dim = 0;
  std::map<std::string, SparseIntMat> generators;
  std::map<std::string, std::vector<int64_t>> weight_ops;
  std::vector<int64_t> cyclic;
};

// Irreducible sl2 module of highest weight l (dim l+1), weight basis
// w_0..w_l with w_0 lowest:
//   e w_j = (j+1) w_{j+1},  f w_j = (l-j+1) w_{j-1},  h w_j = (2j-l) w_j.
// Generators "e","f","h"; weight op "h"; cyclic = w_0.
RepModule build_sl2_irrep(int64_t l);

// Direct sum over l = 0..k of (dual of pi_l) tensor pi_l, a module over
// two commuting sl2 copies. First copy acts on the dual slot ("e1",
// "f1","h1", matrices -x^T x I), second on the plain slot ("e2","f2",
// "h2"). The cyclic vector is the sum over l of the canonical elements
// sum_j phi_j x w_j, which every diagonal pair (x1 + x2) kills. Weight
// ops "h1","h2".
RepModule build_varpi(int64_t k);

// Direct sum over l = 0..m of pi_l with cyclic vector = sum of lowest
// weight vectors; extended charge operator "ht" has eigenvalue +l on
// pi_l. Generators "e","f","h" and the diagonal "ht" (available to
// quotient ideals); weight ops "h","ht".
RepModule build_pi_sum(int64_t m);

// Same sum with cyclic vector = sum of highest weight vectors and
// "ht" eigenvalue -l on pi_l.
RepModule build_pibar_sum(int64_t m);

// m-th symmetric power of the vector representation of sl3, basis the
// monomials x1^{a1} x2^{a2} x3^{a3}, a1+a2+a3 = m:
//   e_uv x^alpha = alpha_v x^{alpha + eps_u - eps_v}.
// Generators "e12","e13","e23","e21","e31","e32","h12","h23"; weight ops
// "h12" (a1-a2), "h23" (a2-a3); cyclic = x3^m (lowest weight).
RepModule build_sl3_sym(int64_t m);

// m-th symmetric power of the dual: monomials y^alpha in the dual basis,
//   e_uv y^alpha = -alpha_u y^{alpha - eps_u + eps_v},
// weights "h12" = -(a1-a2), "h23" = -(a2-a3); cyclic = y1^m (lowest).
RepModule build_sl3_sym_dual(int64_t m);

}  // namespace fchar
