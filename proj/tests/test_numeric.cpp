#include <random>
#include <vector>

#include "doctest.h"
#include "fchar/numeric.hpp"

using namespace fchar;

TEST_SUITE("numeric") {

TEST_CASE("primality") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(is_prime_u64(5));
  CHECK(is_prime_u64(kDefaultPrime));
  CHECK(is_prime_u64(kSecondaryPrime));
  CHECK(is_prime_u64(18446744073709551557ull));  // largest 64-bit prime
  CHECK_FALSE(is_prime_u64(0));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(4));
  CHECK_FALSE(is_prime_u64(kDefaultPrime - 1));
  CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
  CHECK_FALSE(is_prime_u64(kDefaultPrime * 2));
}

TEST_CASE("modular arithmetic against wide multiplication") {
  std::mt19937_64 rng(12345);
  for (uint64_t p : std::vector<uint64_t>{kDefaultPrime, kSecondaryPrime, 97,
                                          18446744073709551557ull}) {
    std::uniform_int_distribution<uint64_t> d(0, p - 1);
    for (int i = 0; i < 200; ++i) {
      uint64_t a = d(rng), b = d(rng);
      __uint128_t ref = (__uint128_t)a * b % p;
      CHECK(mulmod_u64(a, b, p) == (uint64_t)ref);
      if (a != 0) {
        uint64_t inv = invmod_u64(a, p);
        CHECK(mulmod_u64(a, inv, p) == 1);
      }
    }
    CHECK(powmod_u64(2, p - 1, p) == 1);  // Fermat
    CHECK(powmod_u64(0, 0, p) == 1 % p);
  }
}

TEST_CASE("prime field axioms") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int64_t> d(-1000000, 1000000);
  for (uint64_t p : {kDefaultPrime, kSecondaryPrime}) {
    for (int i = 0; i < 100; ++i) {
      PrimeFieldElt a(d(rng), p), b(d(rng), p), c(d(rng), p);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == PrimeFieldElt(0, p));
      CHECK(a + (-a) == PrimeFieldElt(0, p));
      if (!b.is_zero()) CHECK((a / b) * b == a);
      CHECK(a.pow(3) == a * a * a);
    }
    CHECK(PrimeFieldElt(-1, p).value() == p - 1);
    CHECK(PrimeFieldElt(-BigInt((unsigned long)p), p).is_zero());
  }
  PrimeFieldElt x(1, kDefaultPrime), y(1, kSecondaryPrime);
  CHECK_THROWS_AS(x + y, Error);
  CHECK_THROWS_AS(PrimeFieldElt(1, kDefaultPrime).inv() * y, Error);
}

TEST_CASE("rational powers") {
  CHECK(pow_rat(BigRat(2, 3), -2) == BigRat(9, 4));
  CHECK(pow_rat(BigRat(5), 0) == BigRat(1));
  CHECK_THROWS_AS(pow_rat(BigRat(0), -1), Error);

  CHECK(pow_rat_exact(BigRat(4), 1, 2) == BigRat(2));
  CHECK(pow_rat_exact(BigRat(8, 27), 2, 3) == BigRat(4, 9));
  CHECK(pow_rat_exact(BigRat(-8), 1, 3) == BigRat(-2));
  CHECK(pow_rat_exact(BigRat(4), -1, 2) == BigRat(1, 2));
  CHECK(pow_rat_exact(BigRat(7), 0, 5) == BigRat(1));
  CHECK_FALSE(pow_rat_exact(BigRat(2), 1, 2).has_value());
  CHECK_FALSE(pow_rat_exact(BigRat(-4), 1, 2).has_value());
  CHECK_FALSE(pow_rat_exact(BigRat(2, 3), 1, 2).has_value());
}

TEST_CASE("decimal strings") {
  for (const char* s : {"0", "1", "-1", "123456789012345678901234567890", "-987654321"}) {
    CHECK(to_decimal(bigint_from_decimal(s)) == s);
  }
  CHECK(bigint_from_decimal("007") == 7);
  CHECK_THROWS_AS(bigint_from_decimal("12x"), ParseError);
  CHECK_THROWS_AS(bigint_from_decimal(""), ParseError);
}

}  // TEST_SUITE
