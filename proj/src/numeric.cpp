#include "fchar/numeric.hpp"

#include <numeric>

namespace fchar {

BigRat pow_rat(const BigRat& base, long e) {
  if (e == 0) return BigRat(1);
  if (e > 0) {
    BigRat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), (unsigned long)e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), (unsigned long)e);
    r.canonicalize();
    return r;
  }
  if (base == 0) throw Error("pow_rat: 0 raised to a negative power");
  BigRat inv = BigRat(base.get_den(), base.get_num());
  inv.canonicalize();
  return pow_rat(inv, -e);
}

namespace {

// Exact n-th root of v >= 0, or nullopt.
std::optional<BigInt> root_exact(const BigInt& v, unsigned long n) {
  BigInt r;
  int exact = mpz_root(r.get_mpz_t(), v.get_mpz_t(), n);
  if (!exact) return std::nullopt;
  return r;
}

}  // namespace

std::optional<BigRat> pow_rat_exact(const BigRat& base, long num, long den) {
  if (den < 1) throw Error("pow_rat_exact: denominator must be >= 1");
  if (num % den == 0) return pow_rat(base, num / den);
  if (base == 0) {
    if (num > 0) return BigRat(0);
    return std::nullopt;
  }
  // Reduce the exponent, then need base^(1/den) exact.
  long g = std::gcd(num < 0 ? -num : num, den);
  num /= g;
  den /= g;
  BigRat b = base;
  if (b < 0) {
    if (den % 2 == 0) return std::nullopt;
    auto r = pow_rat_exact(-b, num, den);
    if (!r) return std::nullopt;
    // odd den: sign follows num
    return (num % 2 != 0) ? BigRat(-*r) : *r;
  }
  auto rn = root_exact(b.get_num(), (unsigned long)den);
  auto rd = root_exact(b.get_den(), (unsigned long)den);
  if (!rn || !rd) return std::nullopt;
  BigRat root(*rn, *rd);
  root.canonicalize();
  return pow_rat(root, num);
}

std::string to_decimal(const BigInt& v) { return v.get_str(10); }

BigInt bigint_from_decimal(const std::string& s) {
  if (s.empty()) throw ParseError("empty integer literal");
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ParseError("bad integer literal: " + s);
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw ParseError("bad integer literal: " + s);
  return BigInt(s, 10);
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
  return (uint64_t)((unsigned __int128)a * b % p);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t invmod_u64(uint64_t a, uint64_t p) {
  a %= p;
  if (a == 0) throw Error("invmod_u64: zero is not invertible");
  // p prime, so Fermat works and avoids signed overflow bookkeeping.
  return powmod_u64(a, p - 2, p);
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // This base set is a proven witness set for all n < 2^64.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeFieldElt::PrimeFieldElt(const BigInt& value, uint64_t p) : p_(p) {
  if (p < 2) throw ParamError("PrimeFieldElt: modulus must be >= 2");
  BigInt r = value % BigInt((unsigned long)p);
  if (r < 0) r += BigInt((unsigned long)p);
  v_ = r.get_ui();
}

PrimeFieldElt::PrimeFieldElt(int64_t value, uint64_t p) : PrimeFieldElt(BigInt((long)value), p) {}

void PrimeFieldElt::check_same(const PrimeFieldElt& o) const {
  if (p_ != o.p_) throw Error("PrimeFieldElt: mixed moduli");
}

PrimeFieldElt PrimeFieldElt::operator+(const PrimeFieldElt& o) const {
  check_same(o);
  PrimeFieldElt r = *this;
  r.v_ += o.v_;
  if (r.v_ >= p_) r.v_ -= p_;
  return r;
}

PrimeFieldElt PrimeFieldElt::operator-(const PrimeFieldElt& o) const {
  check_same(o);
  PrimeFieldElt r = *this;
  r.v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + p_ - o.v_;
  return r;
}

PrimeFieldElt PrimeFieldElt::operator*(const PrimeFieldElt& o) const {
  check_same(o);
  PrimeFieldElt r = *this;
  r.v_ = mulmod_u64(v_, o.v_, p_);
  return r;
}

PrimeFieldElt PrimeFieldElt::operator/(const PrimeFieldElt& o) const { return *this * o.inv(); }

PrimeFieldElt PrimeFieldElt::operator-() const {
  PrimeFieldElt r = *this;
  r.v_ = v_ ? p_ - v_ : 0;
  return r;
}

PrimeFieldElt PrimeFieldElt::inv() const {
  PrimeFieldElt r = *this;
  r.v_ = invmod_u64(v_, p_);
  return r;
}

PrimeFieldElt PrimeFieldElt::pow(uint64_t e) const {
  PrimeFieldElt r = *this;
  r.v_ = powmod_u64(v_, e, p_);
  return r;
}

}  // namespace fchar
