#include <vector>

#include "doctest.h"
#include "fchar/qcomb.hpp"

using namespace fchar;

namespace {

// partitions of j fitting in an a x b box, counted directly
int64_t box_partitions(int64_t j, int64_t a, int64_t b) {
  if (j == 0) return 1;
  if (a == 0 || b == 0) return 0;
  int64_t c = 0;
  for (int64_t first = 1; first <= a && first <= j; ++first)
    c += box_partitions(j - first, first, b - 1);
  return c;
}

}  // namespace

TEST_SUITE("qcomb") {

TEST_CASE("composition basics") {
  Composition m({2, 0, 1});
  CHECK(m.size() == 3);
  CHECK(m.at(1) == 2);
  CHECK(m.at(3) == 1);
  CHECK(m.total() == 3);
  CHECK(m.weight() == 5);
  CHECK(m.lambda() == std::vector<int64_t>{3, 1, 1});
  CHECK(m.resized(5) == Composition({2, 0, 1, 0, 0}));
  CHECK(Composition({2, 0, 1, 0}).resized(3) == m);
  CHECK_THROWS_AS(m.resized(2), ParamError);
  CHECK_THROWS_AS(Composition({}), ParamError);
  CHECK_THROWS_AS(Composition({-1}), ParamError);
  CHECK(Composition({1, 2}) + Composition({3, 0}) == Composition({4, 2}));
  CHECK(m.to_string() == "(2,0,1)");
}

TEST_CASE("gaussian binomials") {
  LaurentPoly b42 = q_binomial(4, 2);
  LaurentPoly want(qvars());
  want.add_term({0}, 1);
  want.add_term({1}, 1);
  want.add_term({2}, 2);
  want.add_term({3}, 1);
  want.add_term({4}, 1);
  CHECK(b42 == want);

  CHECK(q_binomial(5, 0) == LaurentPoly::constant(qvars(), 1));
  CHECK(q_binomial(5, 5) == LaurentPoly::constant(qvars(), 1));
  CHECK(q_binomial(3, 4).is_zero());
  CHECK(q_binomial(3, -1).is_zero());

  for (int64_t m = 0; m <= 8; ++m) {
    for (int64_t n = 0; n <= m; ++n) {
      LaurentPoly b = q_binomial(m, n);
      CHECK(b == q_binomial(m, m - n));  // symmetry
      if (n >= 1 && m >= 1) {
        // Pascal with a q-twist
        CHECK(b == q_binomial(m - 1, n - 1) + q_binomial(m - 1, n).shifted({n}));
      }
      // coefficient of q^j counts partitions of j in an n x (m-n) box
      for (const auto& [e, c] : b.terms()) CHECK(c == box_partitions(e[0], m - n, n));
      // q = 1 gives the plain binomial
      BigInt bin;
      mpz_bin_uiui(bin.get_mpz_t(), (unsigned long)m, (unsigned long)n);
      CHECK(b.coeff_sum() == bin);
    }
  }
}

TEST_CASE("graded multinomials, frozen values") {
  CHECK(f_coeff(Composition({1}), Composition({1})) == LaurentPoly::constant(qvars(), 1));

  LaurentPoly f21(qvars());  // two sites, one chosen: 1 + q
  f21.add_term({0}, 1);
  f21.add_term({1}, 1);
  CHECK(f_coeff(Composition({2}), Composition({1})) == f21);

  for (const Composition& M : {Composition({2, 1}), Composition({3}), Composition({1, 1, 1})})
    CHECK(f_coeff(M, M) == LaurentPoly::constant(qvars(), 1));

  CHECK_THROWS_AS(f_coeff(Composition({1}), Composition({1, 0})), ParamError);
}

TEST_CASE("multinomial coefficients match the brute-force expansion") {
  for (const Composition& M :
       {Composition({2}), Composition({1, 1}), Composition({3}), Composition({2, 1}),
        Composition({0, 2}), Composition({1, 0, 1})}) {
    auto expansion = multinomial_expansion(M);
    for (const Composition& n : compositions_dominated_by(M)) {
      LaurentPoly f = f_coeff(M, n);
      for (const auto& [e, c] : f.terms()) CHECK(c > 0);
      auto it = expansion.find(n.parts());
      BigInt expected = it == expansion.end() ? BigInt(0) : it->second;
      CHECK(f.coeff_sum() == expected);
    }
  }
}

TEST_CASE("composition enumerators") {
  // m_1 + 2 m_2 = 4 has solutions (4,0), (2,1), (0,2)
  auto w = compositions_with_weight(2, 4);
  CHECK(w.size() == 3);
  for (const Composition& n : w) CHECK(n.weight() == 4);

  CHECK(compositions_with_weight(3, 0).size() == 1);
  CHECK(compositions_with_weight(2, -1).empty());

  auto dom = compositions_dominated_by(Composition({2}));
  CHECK(dom.size() == 3);  // (0), (1), (2)
  for (const Composition& n : compositions_dominated_by(Composition({1, 2}))) {
    auto ln = n.lambda();
    auto lM = Composition({1, 2}).lambda();
    for (size_t i = 0; i < ln.size(); ++i) CHECK(ln[i] <= lM[i]);
  }
}

}  // TEST_SUITE
