#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fchar/laurent.hpp"

namespace fchar {

inline const Variable kVarQ{"q", 1};
inline VarSpec qvars() { return {kVarQ}; }

// Non-negative integer vector (m_1, ..., m_k), k >= 1. Indexing in the
// formulas is 1-based; parts() is 0-based storage.
class Composition {
 public:
  explicit Composition(std::vector<int64_t> parts);
  static Composition zero(int64_t k) { return Composition(std::vector<int64_t>(k, 0)); }

  const std::vector<int64_t>& parts() const { return parts_; }
  int64_t size() const { return (int64_t)parts_.size(); }      // k
  int64_t at(int64_t a) const { return parts_[a - 1]; }        // 1-based
  int64_t total() const;                                       // sum of parts
  int64_t weight() const;                                      // sum a * m_a

  // suffix sums lambda_a = m_a + ... + m_k, a = 1..k (0-based return)
  std::vector<int64_t> lambda() const;

  // Zero-pad or shrink to length k; shrinking a nonzero entry throws.
  Composition resized(int64_t k) const;

  friend Composition operator+(const Composition& a, const Composition& b);
  bool operator==(const Composition&) const = default;
  auto operator<=>(const Composition&) const = default;
  std::string to_string() const;

 private:
  std::vector<int64_t> parts_;
};

inline int64_t weight(const Composition& m) { return m.weight(); }
inline std::vector<int64_t> lambda_partial(const Composition& m) { return m.lambda(); }

// Gaussian binomial [m choose n]_q as a polynomial in q. Zero unless
// 0 <= n <= m. Computed from the product formula
//   (q^{m-n+1})_n / (q)_n,    (z)_n = prod_{j<n} (1 - z q^j),
// with exact polynomial division.
LaurentPoly q_binomial(int64_t m, int64_t n);

// Coefficient polynomial of the graded multinomial expansion
//   prod_a (1 + x_1 + ... + x_a)^{M_a} = sum_m F_{M,m}(1) x^m,
// q-refined: with lambda = lambda(M), mu = lambda(m), mu_{k+1} = 0,
//   F_{M,m}(q) = q^{sum_{a<k} mu_{a+1}(lambda_a - mu_a)}
//                * prod_a [lambda_a - mu_{a+1} choose mu_a - mu_{a+1}]_q.
// M and m must have the same length. Zero iff some lambda_a(m) >
// lambda_a(M).
LaurentPoly f_coeff(const Composition& M, const Composition& m);

// Brute-force expansion of prod_a (1 + x_1 + ... + x_a)^{M_a}; maps the
// exponent vector of x to its integer coefficient. Oracle for
// f_coeff(.)(q=1).
std::map<std::vector<int64_t>, BigInt> multinomial_expansion(const Composition& M);

// All m of the same length with lambda_a(m) <= lambda_a(M) for every a;
// exactly the support candidates of F_{M,.}.
std::vector<Composition> compositions_dominated_by(const Composition& M);

// All n of length k with sum a * n_a = s (s >= 0).
std::vector<Composition> compositions_with_weight(int64_t k, int64_t s);

}  // namespace fchar
