#include "fchar/qcomb.hpp"

#include <functional>
#include <sstream>

namespace fchar {

Composition::Composition(std::vector<int64_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ParamError("Composition: length must be >= 1");
  for (int64_t v : parts_)
    if (v < 0) throw ParamError("Composition: entries must be non-negative");
}

int64_t Composition::total() const {
  int64_t s = 0;
  for (int64_t v : parts_) s += v;
  return s;
}

int64_t Composition::weight() const {
  int64_t s = 0;
  for (size_t i = 0; i < parts_.size(); ++i) s += (int64_t)(i + 1) * parts_[i];
  return s;
}

std::vector<int64_t> Composition::lambda() const {
  std::vector<int64_t> l(parts_.size());
  int64_t s = 0;
  for (size_t i = parts_.size(); i-- > 0;) {
    s += parts_[i];
    l[i] = s;
  }
  return l;
}

Composition Composition::resized(int64_t k) const {
  if (k < 1) throw ParamError("Composition::resized: length must be >= 1");
  for (size_t i = (size_t)k; i < parts_.size(); ++i)
    if (parts_[i] != 0) throw ParamError("Composition::resized: would drop a nonzero entry");
  std::vector<int64_t> p(parts_.begin(), parts_.begin() + std::min<int64_t>(k, size()));
  p.resize(k, 0);
  return Composition(std::move(p));
}

Composition operator+(const Composition& a, const Composition& b) {
  if (a.size() != b.size()) throw ParamError("Composition: length mismatch in +");
  std::vector<int64_t> p(a.parts_);
  for (size_t i = 0; i < p.size(); ++i) p[i] += b.parts_[i];
  return Composition(std::move(p));
}

std::string Composition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

namespace {

// dense coefficient vector of a polynomial in q, exponents 0..size-1

// multiply by (1 - q^s)
void mul_one_minus_qpow(std::vector<BigInt>& c, int64_t s) {
  c.resize(c.size() + s, BigInt(0));
  for (size_t i = c.size(); i-- > 0;) {
    if (i >= (size_t)s) c[i] -= c[i - s];
  }
}

// divide exactly by (1 - q^s); the quotient of P = (1 - q^s) D obeys
// D[i] = P[i] + D[i-s]
void div_one_minus_qpow(std::vector<BigInt>& c, int64_t s) {
  for (size_t i = (size_t)s; i < c.size(); ++i) c[i] += c[i - s];
  for (size_t i = c.size() - s; i < c.size(); ++i)
    if (c[i] != 0) throw Error("q-binomial: inexact division");
  c.resize(c.size() - s);
}

}  // namespace

LaurentPoly q_binomial(int64_t m, int64_t n) {
  LaurentPoly r(qvars());
  if (n < 0 || n > m) return r;  // zero
  std::vector<BigInt> c{BigInt(1)};
  for (int64_t j = 0; j < n; ++j) mul_one_minus_qpow(c, m - n + 1 + j);
  for (int64_t j = 1; j <= n; ++j) div_one_minus_qpow(c, j);
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) r.add_term({(int64_t)i}, c[i]);
  return r;
}

LaurentPoly f_coeff(const Composition& M, const Composition& m) {
  if (M.size() != m.size()) throw ParamError("f_coeff: M and m must have the same length");
  const int64_t k = M.size();
  std::vector<int64_t> lam = M.lambda();
  std::vector<int64_t> mu = m.lambda();
  mu.push_back(0);  // mu_{k+1} = 0
  LaurentPoly r = LaurentPoly::constant(qvars(), 1);
  for (int64_t a = 1; a <= k; ++a) {
    LaurentPoly b = q_binomial(lam[a - 1] - mu[a], mu[a - 1] - mu[a]);
    if (b.is_zero()) return LaurentPoly(qvars());
    r = r * b;
  }
  int64_t e = 0;
  for (int64_t a = 1; a <= k - 1; ++a) e += mu[a] * (lam[a - 1] - mu[a - 1]);
  return r.shifted({e});
}

std::map<std::vector<int64_t>, BigInt> multinomial_expansion(const Composition& M) {
  const int64_t k = M.size();
  std::map<std::vector<int64_t>, BigInt> acc;
  acc.emplace(std::vector<int64_t>(k, 0), BigInt(1));
  for (int64_t a = 1; a <= k; ++a) {
    for (int64_t rep = 0; rep < M.at(a); ++rep) {
      std::map<std::vector<int64_t>, BigInt> next;
      for (const auto& [e, c] : acc) {
        // choose the 1 or one of x_1..x_a
        auto [it0, ins0] = next.emplace(e, c);
        if (!ins0) it0->second += c;
        for (int64_t j = 1; j <= a; ++j) {
          std::vector<int64_t> e2 = e;
          ++e2[j - 1];
          auto [it, ins] = next.emplace(std::move(e2), c);
          if (!ins) it->second += c;
        }
      }
      acc = std::move(next);
    }
  }
  return acc;
}

std::vector<Composition> compositions_dominated_by(const Composition& M) {
  const int64_t k = M.size();
  std::vector<int64_t> lamM = M.lambda();
  std::vector<Composition> out;
  // enumerate suffix sums mu_k <= mu_{k-1} <= ... <= mu_1, mu_a <= lambda_a(M)
  std::vector<int64_t> mu(k + 1, 0);  // mu[k] = mu_{k+1} = 0 sentinel
  std::function<void(int64_t)> rec = [&](int64_t a) {
    if (a == 0) {
      std::vector<int64_t> parts(k);
      for (int64_t i = 0; i < k; ++i) parts[i] = mu[i] - mu[i + 1];
      out.emplace_back(std::move(parts));
      return;
    }
    for (int64_t v = mu[a]; v <= lamM[a - 1]; ++v) {
      mu[a - 1] = v;
      rec(a - 1);
    }
  };
  rec(k);
  return out;
}

std::vector<Composition> compositions_with_weight(int64_t k, int64_t s) {
  if (k < 1) throw ParamError("compositions_with_weight: length must be >= 1");
  std::vector<Composition> out;
  if (s < 0) return out;
  std::vector<int64_t> n(k, 0);
  std::function<void(int64_t, int64_t)> rec = [&](int64_t a, int64_t rest) {
    if (a == k) {
      if (rest == 0) out.emplace_back(n);
      return;
    }
    // entries a+1..k contribute multiples of a+1 <= rest
    for (int64_t v = 0; v * (a + 1) <= rest; ++v) {
      n[a] = v;
      rec(a + 1, rest - v * (a + 1));
    }
    n[a] = 0;
  };
  rec(0, s);
  return out;
}

}  // namespace fchar
