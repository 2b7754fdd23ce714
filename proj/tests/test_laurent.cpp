#include <random>

#include "doctest.h"
#include "fchar/laurent.hpp"

using namespace fchar;

namespace {

VarSpec qz() { return {{"q", 1}, {"z", 2}}; }

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int64_t> exp(-4, 4);
  std::uniform_int_distribution<int64_t> coeff(-9, 9);
  std::uniform_int_distribution<int> nterms(0, 6);
  LaurentPoly p(qz());
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) p.add_term({exp(rng), exp(rng)}, coeff(rng));
  return p;
}

}  // namespace

TEST_SUITE("laurent") {

TEST_CASE("normalization") {
  LaurentPoly p(qz());
  CHECK(p.is_zero());
  p.add_term({1, 0}, 3);
  p.add_term({1, 0}, -3);
  CHECK(p.is_zero());
  CHECK(p.term_count() == 0);
  p.add_term({0, 2}, 5);
  CHECK(p.coeff({0, 2}) == 5);
  CHECK(p.coeff({1, 1}) == 0);
  CHECK(LaurentPoly::constant(qz(), 0).is_zero());
  CHECK_THROWS_AS(p.add_term({0}, 1), VarMismatchError);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(4242);
  const LaurentPoly one = LaurentPoly::constant(qz(), 1);
  for (int i = 0; i < 50; ++i) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * one == a);
    CHECK(a + (-a) == LaurentPoly(qz()));
    CHECK(a.shifted({2, -1}) == a * LaurentPoly::monomial(qz(), {2, -1}, 1));
    CHECK(a.pow(3) == a * a * a);
    CHECK(a.pow(0) == one);
    CHECK((a * b).coeff_sum() == a.coeff_sum() * b.coeff_sum());
  }
  LaurentPoly q_only(VarSpec{{"q", 1}});
  CHECK_THROWS_AS(random_poly(rng) + q_only, VarMismatchError);
}

TEST_CASE("json round trip is canonical") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 30; ++i) {
    LaurentPoly a = random_poly(rng);
    auto j = a.to_json();
    LaurentPoly back = LaurentPoly::from_json(j);
    CHECK(back == a);
    CHECK(back.to_json().dump() == j.dump());
  }
}

TEST_CASE("json schema") {
  LaurentPoly p(qz());
  p.add_term({0, 1}, 1);
  p.add_term({2, -1}, -3);
  CHECK(p.to_json().dump() ==
        R"({"vars":["q","z"],"halfstep":[false,true],"terms":[{"e":[0,1],"c":"1"},{"e":[2,-1],"c":"-3"}]})");

  // steps outside {1,2} switch the header to an integer step array
  LaurentPoly s(VarSpec{{"q", 1}, {"z1", 6}});
  s.add_term({0, 4}, 7);
  auto js = s.to_json();
  CHECK(js.contains("step"));
  CHECK_FALSE(js.contains("halfstep"));
  CHECK(LaurentPoly::from_json(js) == s);

  CHECK_THROWS_AS(LaurentPoly::from_json(nlohmann::json::parse(R"({"vars":["q"]})")), ParseError);
  CHECK_THROWS_AS(LaurentPoly::from_json(nlohmann::json::parse(
                      R"({"vars":["q"],"halfstep":[false],"terms":[{"e":[0,0],"c":"1"}]})")),
                  ParseError);
  CHECK_THROWS_AS(LaurentPoly::from_json(nlohmann::json::parse(
                      R"({"vars":["q"],"halfstep":[false],"terms":[{"e":[0],"c":"x"}]})")),
                  ParseError);
  CHECK_THROWS_AS(LaurentPoly::from_json(nlohmann::json::parse(
                      R"({"vars":["q","q"],"halfstep":[false,false],"terms":[]})")),
                  ParseError);
}

TEST_CASE("specialization") {
  LaurentPoly p(qz());  // 1 + q + q z^(1/2)
  p.add_term({0, 0}, 1);
  p.add_term({1, 0}, 1);
  p.add_term({1, 1}, 1);

  auto all1 = p.specialize({{"q", BigRat(1)}, {"z", BigRat(1)}});
  CHECK(std::get<BigRat>(all1) == BigRat(3));
  CHECK(BigRat(p.coeff_sum()) == std::get<BigRat>(all1));

  // z^(1/2) at z = 4 resolves to 2
  auto z4 = std::get<LaurentPoly>(p.specialize({{"z", BigRat(4)}}));
  LaurentPoly want(VarSpec{{"q", 1}});
  want.add_term({0}, 1);
  want.add_term({1}, 3);
  CHECK(z4 == want);

  CHECK_THROWS_AS(p.specialize({{"z", BigRat(2)}}), SpecializeError);
  CHECK_THROWS_AS(p.specialize({{"z", BigRat(1, 3)}, {"q", BigRat(1)}}), SpecializeError);
  CHECK_THROWS_AS(p.specialize({{"y", BigRat(1)}}), SpecializeError);

  auto q2 = std::get<LaurentPoly>(p.specialize({{"q", BigRat(2)}}));
  CHECK(q2.nvars() == 1);
  CHECK(q2.coeff({0}) == 3);
  CHECK(q2.coeff({1}) == 2);
  // partial result would need coefficient 3/2, outside the integer ring
  CHECK_THROWS_AS(p.specialize({{"q", BigRat(1, 2)}}), SpecializeError);
}

TEST_CASE("embedding into larger variable lists") {
  LaurentPoly p(qz());
  p.add_term({1, 3}, 2);
  VarSpec big{{"q", 1}, {"z1", 2}, {"z2", 2}};
  LaurentPoly e = embed(p, big, {{"z", "z1"}});
  CHECK(e.coeff({1, 3, 0}) == 2);
  CHECK(e.term_count() == 1);
  CHECK_THROWS_AS(embed(p, big), VarMismatchError);  // no z in target
  VarSpec wrong_step{{"q", 1}, {"z", 6}};
  CHECK_THROWS_AS(embed(p, wrong_step), VarMismatchError);
}

}  // TEST_SUITE
