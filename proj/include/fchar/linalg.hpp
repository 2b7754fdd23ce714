#pragma once

#include <cstdint>
#include <vector>

#include "fchar/numeric.hpp"
#include "fchar/repmodule.hpp"

namespace fchar {

// Coefficient rings for the fusion linear algebra. Both expose the same
// tiny interface; row reduction and span bookkeeping are templated on
// it. FpRing is the fast path (64-bit residues, Barrett reduction for
// moduli below 2^32); RatRing is the exact-rational cross-check.

struct FpRing {
  using Elt = uint64_t;
  uint64_t p = 0;
  // floor(2^64 / p), used to replace the division in a*b mod p
  uint64_t barrett = 0;
  bool small = false;  // p < 2^32: products fit in 64 bits

  explicit FpRing(uint64_t prime) : p(prime) {
    if (!is_prime_u64(prime)) throw ParamError("FpRing: modulus is not prime");
    small = prime < (1ull << 32);
    if (small) barrett = (uint64_t)((unsigned __int128)0 - 1) / p;  // ~ 2^64/p
  }
  Elt zero() const { return 0; }
  Elt one() const { return 1 % p; }
  bool is_zero(Elt a) const { return a == 0; }
  Elt add(Elt a, Elt b) const {
    Elt r = a + b;
    return r >= p ? r - p : r;
  }
  Elt sub(Elt a, Elt b) const { return a >= b ? a - b : a + p - b; }
  Elt neg(Elt a) const { return a ? p - a : 0; }
  Elt reduce64(uint64_t x) const {
    // Barrett: q = floor(x * barrett / 2^64) <= floor(x/p), remainder
    // after one correction
    uint64_t q = (uint64_t)(((unsigned __int128)x * barrett) >> 64);
    uint64_t r = x - q * p;
    while (r >= p) r -= p;
    return r;
  }
  Elt mul(Elt a, Elt b) const {
    if (small) return reduce64(a * b);
    return mulmod_u64(a, b, p);
  }
  Elt inv(Elt a) const { return invmod_u64(a, p); }
  Elt from_int(int64_t v) const {
    int64_t r = v % (int64_t)p;
    if (r < 0) r += (int64_t)p;
    return (Elt)r;
  }
};

struct RatRing {
  using Elt = BigRat;
  Elt zero() const { return BigRat(0); }
  Elt one() const { return BigRat(1); }
  bool is_zero(const Elt& a) const { return a == 0; }
  Elt add(const Elt& a, const Elt& b) const { return a + b; }
  Elt sub(const Elt& a, const Elt& b) const { return a - b; }
  Elt neg(const Elt& a) const { return -a; }
  Elt mul(const Elt& a, const Elt& b) const { return a * b; }
  Elt inv(const Elt& a) const {
    if (a == 0) throw Error("RatRing: zero is not invertible");
    return 1 / a;
  }
  Elt from_int(int64_t v) const { return BigRat((long)v); }
};

// Square matrix over R in triplet form.
template <class R>
struct FieldMat {
  int64_t n = 0;
  std::vector<std::tuple<int32_t, int32_t, typename R::Elt>> entries;

  void apply(const R& ring, const std::vector<typename R::Elt>& x,
             std::vector<typename R::Elt>& y) const {
    y.assign(n, ring.zero());
    for (const auto& [r, c, v] : entries)
      y[r] = ring.add(y[r], ring.mul(v, x[c]));
  }
  std::vector<std::vector<typename R::Elt>> to_dense(const R& ring) const {
    std::vector<std::vector<typename R::Elt>> d(n, std::vector<typename R::Elt>(n, ring.zero()));
    for (const auto& [r, c, v] : entries) d[r][c] = ring.add(d[r][c], v);
    return d;
  }
};

// Dense matrix helpers for composing ideal operators.
template <class R>
struct DenseOps {
  using Elt = typename R::Elt;
  using Mat = std::vector<std::vector<Elt>>;

  static Mat identity(const R& ring, int64_t n) {
    Mat m(n, std::vector<Elt>(n, ring.zero()));
    for (int64_t i = 0; i < n; ++i) m[i][i] = ring.one();
    return m;
  }
  static Mat mul(const R& ring, const Mat& a, const Mat& b) {
    const int64_t n = (int64_t)a.size();
    Mat c(n, std::vector<Elt>(n, ring.zero()));
    for (int64_t i = 0; i < n; ++i)
      for (int64_t k = 0; k < n; ++k) {
        if (ring.is_zero(a[i][k])) continue;
        const Elt& aik = a[i][k];
        for (int64_t j = 0; j < n; ++j)
          c[i][j] = ring.add(c[i][j], ring.mul(aik, b[k][j]));
      }
    return c;
  }
  static void add_scalar_diag(const R& ring, Mat& a, const Elt& s) {
    for (size_t i = 0; i < a.size(); ++i) a[i][i] = ring.add(a[i][i], s);
  }
  static void apply(const R& ring, const Mat& a, const std::vector<Elt>& x,
                    std::vector<Elt>& y) {
    const int64_t n = (int64_t)a.size();
    y.assign(n, ring.zero());
    for (int64_t i = 0; i < n; ++i) {
      Elt acc = ring.zero();
      for (int64_t j = 0; j < n; ++j)
        if (!ring.is_zero(x[j])) acc = ring.add(acc, ring.mul(a[i][j], x[j]));
      y[i] = acc;
    }
  }
};

// Growing subspace kept in reduced row echelon form. insert() returns
// whether the rank grew. Fully deterministic: pivots are the first
// nonzero columns, pivot entries normalized to 1, all rows reduced.
template <class R>
class RowBasis {
 public:
  using Elt = typename R::Elt;

  RowBasis() = default;
  RowBasis(const R* ring, int64_t n) : ring_(ring), n_(n), row_of_col_(n, -1) {}

  int64_t dim() const { return (int64_t)rows_.size(); }
  const std::vector<std::vector<Elt>>& rows() const { return rows_; }

  // Reduces v against the basis in place; afterwards v is zero iff it
  // was in the span.
  void reduce(std::vector<Elt>& v) const {
    for (int64_t c = 0; c < n_; ++c) {
      if (ring_->is_zero(v[c])) continue;
      const int r = row_of_col_[c];
      if (r < 0) continue;
      const Elt f = v[c];
      const std::vector<Elt>& row = rows_[r];
      for (int64_t j = c; j < n_; ++j)
        if (!ring_->is_zero(row[j])) v[j] = ring_->sub(v[j], ring_->mul(f, row[j]));
    }
  }

  bool contains(std::vector<Elt> v) const {
    reduce(v);
    for (const Elt& x : v)
      if (!ring_->is_zero(x)) return false;
    return true;
  }

  bool insert(std::vector<Elt> v) {
    reduce(v);
    int64_t c = 0;
    while (c < n_ && ring_->is_zero(v[c])) ++c;
    if (c == n_) return false;
    const Elt f = ring_->inv(v[c]);
    for (int64_t j = c; j < n_; ++j)
      if (!ring_->is_zero(v[j])) v[j] = ring_->mul(v[j], f);
    // clear column c in the existing rows
    for (auto& row : rows_) {
      if (ring_->is_zero(row[c])) continue;
      const Elt g = row[c];
      for (int64_t j = c; j < n_; ++j)
        if (!ring_->is_zero(v[j])) row[j] = ring_->sub(row[j], ring_->mul(g, v[j]));
    }
    row_of_col_[c] = (int)rows_.size();
    rows_.push_back(std::move(v));
    return true;
  }

 private:
  const R* ring_ = nullptr;
  int64_t n_ = 0;
  std::vector<std::vector<Elt>> rows_;
  std::vector<int> row_of_col_;
};

// A subspace chain together with its decomposition along a fixed
// partition of the coordinates into weight classes. The span must stay
// invariant under that decomposition (true for all the spaces the
// fusion engine builds); check() verifies dim = sum of class dims.
template <class R>
class WeightedSpan {
 public:
  using Elt = typename R::Elt;

  WeightedSpan() = default;
  WeightedSpan(const R* ring, int64_t n, const std::vector<int>* class_of_col,
               int64_t num_classes)
      : ring_(ring),
        n_(n),
        class_of_col_(class_of_col),
        full_(ring, n),
        per_class_(num_classes, RowBasis<R>(ring, n)) {}

  // returns true if the full span grew
  bool insert(const std::vector<Elt>& v) {
    if (!full_.insert(v)) return false;
    // project onto each class that v touches
    std::vector<char> touched(per_class_.size(), 0);
    for (int64_t c = 0; c < n_; ++c)
      if (!ring_->is_zero(v[c])) touched[(*class_of_col_)[c]] = 1;
    for (size_t cl = 0; cl < per_class_.size(); ++cl) {
      if (!touched[cl]) continue;
      std::vector<Elt> proj(n_, ring_->zero());
      for (int64_t c = 0; c < n_; ++c)
        if ((*class_of_col_)[c] == (int)cl) proj[c] = v[c];
      per_class_[cl].insert(std::move(proj));
    }
    return true;
  }

  int64_t dim() const { return full_.dim(); }
  int64_t class_dim(int64_t cl) const { return per_class_[cl].dim(); }
  const RowBasis<R>& full() const { return full_; }

  // weight-invariance: the class projections must tile the span
  bool check() const {
    int64_t s = 0;
    for (const auto& b : per_class_) s += b.dim();
    return s == full_.dim();
  }

 private:
  const R* ring_ = nullptr;
  int64_t n_ = 0;
  const std::vector<int>* class_of_col_ = nullptr;
  RowBasis<R> full_;
  std::vector<RowBasis<R>> per_class_;
};

}  // namespace fchar
