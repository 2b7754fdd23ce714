#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fchar/laurent.hpp"
#include "fchar/repmodule.hpp"
#include "json.hpp"

namespace fchar {

// One output grading direction. The engine assigns each tensor
// coordinate the stored exponent sum_{(name,coef)} coef * (eigenvalue of
// weight op `name`); `combo` must be chosen so this equals step *
// mathematical exponent.
struct WeightAxis {
  std::string var;
  int step = 2;
  std::vector<std::pair<std::string, int64_t>> combo;
};

// Filtered tensor product of cyclic modules at pairwise distinct
// evaluation points: x@t^i acts on factor a through zeta_a^i x. The
// filtration level F^d is spanned by monomials in the acting generators
// of total t-degree <= d applied to the tensor of cyclic vectors.
struct FusionProblem {
  std::vector<RepModule> factors;
  std::vector<std::string> acting;  // generator names spanning the action
  std::vector<WeightAxis> axes;
};

// Ideal operator (G_{gen,tdeg} + shift * Id)^power on the tensor space;
// its total filtration degree is power * tdeg.
struct IdealOp {
  std::string gen;
  int64_t tdeg = 0;
  int64_t power = 1;
  int64_t shift = 0;
};

enum class QuotientMode {
  graded,   // quotient of each graded slice: F^d / (F^{d-1} + sum O F^{d-deg O})
  filtered  // quotient of the whole space first: dims of (F^d + I)/(F^{d-1} + I)
};

// dims keyed by (filtration degree, stored weight exponents per axis)
struct GradedDims {
  std::map<std::pair<int64_t, std::vector<int64_t>>, int64_t> dims;

  int64_t total() const;
  LaurentPoly to_poly(const std::vector<WeightAxis>& axes) const;
  nlohmann::ordered_json to_json() const;
  bool operator==(const GradedDims&) const = default;
};

struct FusionRun {
  uint64_t prime = kDefaultPrime;
  uint64_t seed = 1;
  bool rational = false;  // exact-rational mode with evaluation points 1..N
};

struct FusionResult {
  GradedDims dims;
  std::vector<uint64_t> zetas;  // residues used (1..N in rational mode)
  int64_t total_dim = 0;
};

// Graded character of the plain fusion product (no quotient). Throws
// DegeneracyError if the span stalls below the full tensor dimension.
FusionResult fusion_graded_character(const FusionProblem& fp, const FusionRun& run);

// Character of the quotient by the right-ideal generated by `ops`.
FusionResult graded_quotient_character(const FusionProblem& fp, const std::vector<IdealOp>& ops,
                                       QuotientMode mode, const FusionRun& run);

}  // namespace fchar
