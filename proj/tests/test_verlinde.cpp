#include <cstdlib>

#include "doctest.h"
#include "fchar/verlinde.hpp"

using namespace fchar;

TEST_SUITE("verlinde") {

TEST_CASE("structure constants") {
  for (int64_t k = 0; k <= 4; ++k) {
    for (int64_t l = 0; l <= k; ++l) {
      for (int64_t lp = 0; lp <= k; ++lp) {
        VerlindeElt p = verlinde_mul(VerlindeElt::basis(k, l), VerlindeElt::basis(k, lp));
        for (int64_t lpp = 0; lpp <= k; ++lpp) {
          BigInt c = verlinde_coeff(p, lpp);
          bool in_range = lpp >= std::abs(l - lp) && lpp <= std::min(l + lp, 2 * k - l - lp) &&
                          (lpp - std::abs(l - lp)) % 2 == 0;
          CHECK(c == BigInt(in_range ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("commutative associative unital") {
  for (int64_t k = 1; k <= 4; ++k) {
    const VerlindeElt e = VerlindeElt::unit(k);
    for (int64_t a = 0; a <= k; ++a) {
      VerlindeElt A = VerlindeElt::basis(k, a);
      CHECK(verlinde_mul(A, e) == A);
      for (int64_t b = 0; b <= k; ++b) {
        VerlindeElt B = VerlindeElt::basis(k, b);
        CHECK(verlinde_mul(A, B) == verlinde_mul(B, A));
        for (int64_t c = 0; c <= k; ++c) {
          VerlindeElt C = VerlindeElt::basis(k, c);
          CHECK(verlinde_mul(verlinde_mul(A, B), C) == verlinde_mul(A, verlinde_mul(B, C)));
        }
      }
    }
  }
}

TEST_CASE("powers and a frozen square") {
  // ([0] + 2[1])^2 = 5[0] + 4[1] at level 1
  VerlindeElt x = VerlindeElt::basis(1, 0) + VerlindeElt::basis(1, 1).mul_scalar(2);
  VerlindeElt sq = verlinde_pow(x, 2);
  CHECK(verlinde_coeff(sq, 0) == 5);
  CHECK(verlinde_coeff(sq, 1) == 4);
  CHECK(verlinde_pow(x, 0) == VerlindeElt::unit(1));
  CHECK(verlinde_pow(x, 3) == verlinde_mul(sq, x));
}

TEST_CASE("coinvariant dimensions") {
  CHECK(dim_bigc(1, 0, 0) == 1);
  CHECK(dim_bigc(1, 1, 0) == 0);
  CHECK(dim_bigc(1, 0, 1) == 1);
  CHECK(dim_bigc(1, 1, 1) == 2);
  CHECK(dim_bigc(1, 0, 2) == 5);
  CHECK(dim_bigc(1, 1, 2) == 4);
  CHECK(dim_bigc(2, 2, 1) == 3);

  CHECK(dim_mixc(1, 0, Composition({1}), Composition({1})) == 2);
  CHECK(dim_mixc(1, 1, Composition({1}), Composition({1})) == 2);
  CHECK(dim_mixc(1, 0, Composition({0}), Composition({0})) == 1);
  CHECK(dim_mixc(2, 1, Composition({1, 1}), Composition({0, 0})) == 3);

  for (int64_t k = 1; k <= 3; ++k)
    for (int64_t l = 0; l <= k; ++l)
      CHECK(dim_mixc(k, l, Composition({0}).resized(k), Composition({0}).resized(k)) ==
            BigInt(l == 0 ? 1 : 0));

  // against the product spelled out by hand: factors [0]+[1], [0]+[1]+[2], [0]+[1]
  VerlindeElt s1 = VerlindeElt::basis(2, 0) + VerlindeElt::basis(2, 1);
  VerlindeElt s2 = s1 + VerlindeElt::basis(2, 2);
  VerlindeElt prod = verlinde_mul(verlinde_mul(s1, s2), s1);
  for (int64_t l = 0; l <= 2; ++l)
    CHECK(dim_mixc(2, l, Composition({1, 1}), Composition({1, 0})) == verlinde_coeff(prod, l));

  VerlindeElt w = VerlindeElt::basis(2, 0) + VerlindeElt::basis(2, 1).mul_scalar(2) +
                  VerlindeElt::basis(2, 2).mul_scalar(3);
  VerlindeElt w2 = verlinde_pow(w, 2);
  for (int64_t l = 0; l <= 2; ++l) CHECK(dim_bigc(2, l, 2) == verlinde_coeff(w2, l));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(VerlindeElt::basis(2, 3), ParamError);
  CHECK_THROWS_AS(VerlindeElt::basis(2, -1), ParamError);
  CHECK_THROWS_AS(verlinde_coeff(VerlindeElt::unit(2), 5), ParamError);
  CHECK_THROWS_AS(dim_bigc(1, 0, -1), ParamError);
}

}  // TEST_SUITE
