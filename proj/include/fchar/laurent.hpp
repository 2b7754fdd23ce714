#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "fchar/numeric.hpp"
#include "json.hpp"

namespace fchar {

// One polynomial variable. `step` is the exponent denominator: stored
// exponents are step * mathematical exponent, so q carries step 1, the
// sl2 weight variables z, z1, z2 carry step 2 (half-integer weights)
// and the two-variable sl3 character uses step 6 (thirds combined with
// halves). All arithmetic happens on the integer stored exponents.
struct Variable {
  std::string name;
  int step = 1;
  bool operator==(const Variable&) const = default;
};

using VarSpec = std::vector<Variable>;

// Sparse Laurent polynomial with BigInt coefficients over an ordered
// variable list. Terms are kept in a map ordered lexicographically by
// exponent vector; zero coefficients are never stored, which makes
// equality, hashing and serialization canonical.
class LaurentPoly {
 public:
  using ExpVec = std::vector<int64_t>;
  using TermMap = std::map<ExpVec, BigInt>;

  LaurentPoly() = default;  // zero polynomial in zero variables
  explicit LaurentPoly(VarSpec vars) : vars_(std::move(vars)) {}

  static LaurentPoly constant(VarSpec vars, const BigInt& c);
  static LaurentPoly monomial(VarSpec vars, ExpVec e, const BigInt& c);

  const VarSpec& vars() const { return vars_; }
  size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  int find_var(const std::string& name) const;  // -1 if absent

  BigInt coeff(const ExpVec& e) const;
  void add_term(const ExpVec& e, const BigInt& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  LaurentPoly& mul_scalar(const BigInt& c);

  // Multiplication by the monomial with stored exponent vector `delta`.
  LaurentPoly shifted(const ExpVec& delta) const;
  LaurentPoly pow(uint64_t n) const;

  bool operator==(const LaurentPoly&) const = default;

  // Value at every variable = 1; equals the coefficient sum.
  BigInt coeff_sum() const;

  // Substitution. Each binding sends a variable to an exact rational or
  // to a polynomial over a subset of the remaining variables (matching
  // steps). Fractional powers (half-step variables bound to something
  // that is not a perfect square, ...) must resolve exactly, otherwise
  // SpecializeError is thrown. The result is a polynomial over the
  // remaining variables, or a plain rational once none remain.
  using SpecValue = std::variant<BigRat, LaurentPoly>;
  using SpecResult = std::variant<LaurentPoly, BigRat>;
  SpecResult specialize(const std::map<std::string, SpecValue>& bindings) const;

  // Canonical serialization: variable names, per-variable step (boolean
  // `halfstep` array when all steps are 1 or 2, integer `step` array
  // otherwise), terms sorted by exponent vector, coefficients as decimal
  // strings. from_json accepts either step encoding.
  nlohmann::ordered_json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);

  std::string to_string() const;  // human-readable, mathematical exponents
  std::string to_csv() const;     // one term per row: exponents, coefficient

 private:
  void check_compatible(const LaurentPoly& o) const;
  VarSpec vars_;
  TermMap terms_;
};

// Rewrites p over the variable list `target`. Each variable of p maps to
// the target variable of the same name (after applying `rename`), which
// must exist with the same step; exponents of unmatched target variables
// are zero.
LaurentPoly embed(const LaurentPoly& p, const VarSpec& target,
                  const std::map<std::string, std::string>& rename = {});

}  // namespace fchar
