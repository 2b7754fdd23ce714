#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "fchar/errors.hpp"

namespace fchar {

// Exact arbitrary-precision integers and rationals. GMP supplies the
// representation; everything the library needs beyond plain arithmetic
// lives in the helpers below.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt pow_int(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// base^e for integer e (negative allowed). Throws on 0^negative.
BigRat pow_rat(const BigRat& base, long e);

// Exact base^(num/den), den >= 1. Empty result if no exact value exists
// in Q (e.g. 2^(1/2), (-4)^(1/2)).
std::optional<BigRat> pow_rat_exact(const BigRat& base, long num, long den);

std::string to_decimal(const BigInt& v);
BigInt bigint_from_decimal(const std::string& s);

// ---- 64-bit modular arithmetic -----------------------------------------
//
// Helpers shared by PrimeFieldElt and the fusion row reduction. All
// moduli are odd primes below 2^63.

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p);
uint64_t invmod_u64(uint64_t a, uint64_t p);  // a != 0 mod p

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(uint64_t n);

// Default modulus and the companion used for cross-checking runs.
inline constexpr uint64_t kDefaultPrime = 2147483647ull;    // 2^31 - 1
inline constexpr uint64_t kSecondaryPrime = 2147483629ull;  // 2^31 - 19

// Element of F_p. Carries its modulus so mixed-modulus arithmetic is
// caught immediately; the fusion inner loops use raw uint64_t instead.
class PrimeFieldElt {
 public:
  PrimeFieldElt() : v_(0), p_(0) {}
  PrimeFieldElt(const BigInt& value, uint64_t p);
  PrimeFieldElt(int64_t value, uint64_t p);

  uint64_t value() const { return v_; }
  uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  PrimeFieldElt operator+(const PrimeFieldElt& o) const;
  PrimeFieldElt operator-(const PrimeFieldElt& o) const;
  PrimeFieldElt operator*(const PrimeFieldElt& o) const;
  PrimeFieldElt operator/(const PrimeFieldElt& o) const;
  PrimeFieldElt operator-() const;
  PrimeFieldElt inv() const;
  PrimeFieldElt pow(uint64_t e) const;
  bool operator==(const PrimeFieldElt& o) const = default;

 private:
  void check_same(const PrimeFieldElt& o) const;
  uint64_t v_;
  uint64_t p_;
};

}  // namespace fchar
