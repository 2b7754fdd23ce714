#include "doctest.h"
#include "fchar/characters.hpp"
#include "fchar/kostka.hpp"
#include "fchar/oracle.hpp"

using namespace fchar;

TEST_SUITE("oracle") {

TEST_CASE("chi reports") {
  FusionRun run;
  OracleReport rep = oracle_chi(Composition({2, 1}), run);
  CHECK(rep.op == "chi");
  CHECK(rep.prime == kDefaultPrime);
  CHECK(rep.seed == run.seed);
  CHECK_FALSE(rep.rational);
  CHECK(rep.zetas.size() == 3);
  CHECK(rep.total_dim == 12);
  CHECK(rep.poly == chi(Composition({2, 1})));

  rep.compare(chi(Composition({2, 1})));
  CHECK(rep.match.has_value());
  CHECK(*rep.match);
  auto j = rep.to_json();
  CHECK(j["op"] == "chi");
  CHECK(j["field"] == "prime");
  CHECK(j["prime"] == kDefaultPrime);
  CHECK(j["match"] == true);
  CHECK(j["total_dim"] == 12);
  CHECK(LaurentPoly::from_json(j["character"]) == rep.poly);

  rep.compare(chi(Composition({1})));  // wrong on purpose
  CHECK_FALSE(*rep.match);

  // the trivial factor only: one-dimensional, dead generators
  OracleReport triv = oracle_chi(Composition({0}), run);
  CHECK(triv.total_dim == 1);
  CHECK(triv.poly == chi(Composition({0})));
}

TEST_CASE("rational mode") {
  FusionRun run;
  run.rational = true;
  OracleReport rep = oracle_chi(Composition({1, 1}), run);
  CHECK(rep.rational);
  CHECK(rep.poly == chi(Composition({1, 1})));
  auto j = rep.to_json();
  CHECK(j["field"] == "rational");
  CHECK_FALSE(j.contains("prime"));
}

TEST_CASE("kostka quotients") {
  FusionRun run;
  OracleReport rep = oracle_kostka(2, 1, Composition({1, 1}), run);
  CHECK(rep.poly == restricted_kostka(2, 1, Composition({1, 1})));
  CHECK(rep.params["m"] == std::vector<int64_t>({1, 1}));

  CHECK(oracle_kostka(1, 0, Composition({2}), run).poly ==
        restricted_kostka(1, 0, Composition({2})));
  CHECK(oracle_kostka(3, 1, Composition({3, 0, 0}), run).poly ==
        restricted_kostka(3, 1, Composition({3, 0, 0})));
}

TEST_CASE("coinvariant spaces") {
  FusionRun run;
  CHECK(oracle_chbig(1, 1, 2, run).poly == ch_bigc(1, 1, 2));
  CHECK(oracle_chbig(1, 0, 0, run).poly == ch_bigc(1, 0, 0));  // no factors at all
  CHECK(oracle_chbig(2, 1, 1, run).poly == ch_bigc(2, 1, 1));

  CHECK(oracle_chmix(2, 1, Composition({1, 1}), Composition({0, 0}), run).poly ==
        ch_mixc(2, 1, Composition({1, 1}), Composition({0, 0})));
  CHECK(oracle_chmix(1, 0, Composition({1}), Composition({1}), run).poly ==
        ch_mixc(1, 0, Composition({1}), Composition({1})));

  // the naive reading of the charge ideal gives a genuinely different space
  OracleReport ht = oracle_chmix(2, 1, Composition({1, 1}), Composition({0, 0}), run, true);
  CHECK(ht.params["htilde_ideal"] == true);
  CHECK(ht.poly != ch_mixc(2, 1, Composition({1, 1}), Composition({0, 0})));
}

TEST_CASE("two-variable spaces") {
  FusionRun run;
  CHECK(oracle_vm(Composition({1}), run).poly == ch_vm(Composition({1})));
  CHECK(oracle_vm(Composition({2}), run).poly == ch_vm(Composition({2})));
  CHECK(oracle_vmmbar(Composition({1}), Composition({1}), run).poly ==
        ch_vmmbar(Composition({1}), Composition({1})));
  CHECK(oracle_vmmbar(Composition({2}), Composition({0}), run).poly ==
        ch_vmmbar(Composition({2}), Composition({0})));
}

TEST_CASE("seeds and primes move the evaluation points, not the answer") {
  FusionRun a;
  FusionRun b;
  b.seed = 987654321;
  b.prime = kSecondaryPrime;
  OracleReport ra = oracle_chbig(1, 1, 2, a);
  OracleReport rb = oracle_chbig(1, 1, 2, b);
  CHECK(ra.poly == rb.poly);
  CHECK(ra.zetas != rb.zetas);
  CHECK(rb.prime == kSecondaryPrime);
}

TEST_CASE("parameter validation") {
  FusionRun run;
  CHECK_THROWS_AS(oracle_kostka(0, 0, Composition({1}), run), ParamError);
  CHECK_THROWS_AS(oracle_kostka(1, 2, Composition({1}), run), ParamError);
  CHECK_THROWS_AS(oracle_chmix(1, 0, Composition({0, 1}), Composition({0}), run), ParamError);
  CHECK_THROWS_AS(oracle_chbig(1, 2, 1, run), ParamError);
  run.prime = 2;  // the construction needs an odd prime
  CHECK_THROWS_AS(oracle_chi(Composition({2}), run), ParamError);
  run.prime = 6;
  CHECK_THROWS_AS(oracle_chi(Composition({2}), run), ParamError);
}

}  // TEST_SUITE
