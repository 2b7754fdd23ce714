#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fchar/fusion.hpp"
#include "fchar/qcomb.hpp"

namespace fchar {

// One oracle computation: parameters, randomness actually used, raw
// graded dimensions, and the character polynomial they assemble to.
// Every prime-field oracle run is executed twice (second prime, fresh
// seed) and must agree before it is reported; persistent disagreement
// raises DegeneracyError.
struct OracleReport {
  std::string op;
  nlohmann::ordered_json params;
  uint64_t prime = 0;  // 0 in rational mode
  uint64_t seed = 0;
  bool rational = false;
  std::vector<uint64_t> zetas;
  int64_t total_dim = 0;
  GradedDims dims;
  LaurentPoly poly;

  // filled when the caller compared against the formula route
  std::optional<LaurentPoly> formula;
  std::optional<bool> match;

  nlohmann::ordered_json to_json() const;
  void compare(const LaurentPoly& expected);
};

// chi_m(q,z) from an explicit fusion of sl2 irreducibles: m_a factors of
// highest weight a, graded by filtration degree and the diagonal Cartan;
// the result is shifted by z^{|m|/2} to match chi (integer exponents).
OracleReport oracle_chi(const Composition& m, const FusionRun& run);

// ch_q of the quotient of the fusion product by the right ideal
// <e@t^0, (e@t^1)^{k-l+1}, h@t^0 + l>, computed slice by slice on the
// associated graded module. Every surviving vector sits in diagonal
// weight -l; the report carries the resulting polynomial in q.
OracleReport oracle_kostka(int64_t k, int64_t l, const Composition& m, const FusionRun& run);

// Character of the N-point coinvariant space: N factors built from the
// level-k sum of (dual pi_l) x pi_l, spanning generators from the second
// sl2 copy, graded quotient by <e2@t^0, (e2@t^1)^{k-l+1}, h2@t^0 + l>,
// z reading the first-copy Cartan.
OracleReport oracle_chbig(int64_t k, int64_t l, int64_t N, const FusionRun& run);

// Character of the mixed coinvariant space: factors are sums of sl2
// irreducibles (pi^(a) with lowest-weight cyclic vectors for M, the
// highest-weight duals for Mbar), quotient taken on the filtered module
// by the ideal <e@t^0, (e@t^1)^{k-l+1}, h@t^0 + l>, z reading the
// extended charge. `htilde_ideal` switches the Cartan term of the ideal
// to the extended charge reading (kept for experimentation; wrong
// normalization on purpose when true).
OracleReport oracle_chmix(int64_t k, int64_t l, const Composition& M, const Composition& Mbar,
                          const FusionRun& run, bool htilde_ideal = false);

// Two-variable character of the fusion of level-k sums of (dual pi_l) x
// pi_l with multiplicities M; z1/z2 read the two Cartan copies.
OracleReport oracle_vm(const Composition& M, const FusionRun& run);

// Two-variable character of the sl3 fusion with symmetric-power factors
// (M) and their duals (Mbar); z1/z2 read the fundamental-weight
// gradings, stored in sixths.
OracleReport oracle_vmmbar(const Composition& M, const Composition& Mbar, const FusionRun& run);

}  // namespace fchar
