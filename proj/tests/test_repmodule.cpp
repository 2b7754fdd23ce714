#include <vector>

#include "doctest.h"
#include "fchar/repmodule.hpp"

using namespace fchar;

namespace {

using Dense = std::vector<std::vector<BigInt>>;

Dense dense_diag(const std::vector<int64_t>& w) {
  Dense d(w.size(), std::vector<BigInt>(w.size(), 0));
  for (size_t i = 0; i < w.size(); ++i) d[i][i] = w[i];
  return d;
}

Dense scale(Dense m, int64_t c) {
  for (auto& row : m)
    for (auto& v : row) v *= c;
  return m;
}

SparseIntMat diag_mat(const std::vector<int64_t>& w) {
  SparseIntMat m{(int64_t)w.size(), {}};
  for (size_t i = 0; i < w.size(); ++i) m.add(i, i, w[i]);
  return m;
}

// [x, y] = c * z as dense matrices
void check_bracket(const RepModule& M, const std::string& x, const std::string& y,
                   const std::string& z, int64_t c) {
  Dense lhs = commutator_dense(M.generators.at(x), M.generators.at(y));
  Dense rhs = scale(M.generators.at(z).to_dense(), c);
  CHECK(lhs == rhs);
}

void check_weight_bracket(const RepModule& M, const std::string& w, const std::string& y,
                          int64_t c) {
  Dense lhs = commutator_dense(diag_mat(M.weight_ops.at(w)), M.generators.at(y));
  Dense rhs = scale(M.generators.at(y).to_dense(), c);
  CHECK(lhs == rhs);
}

std::vector<BigInt> to_big(const std::vector<int64_t>& v) {
  return std::vector<BigInt>(v.begin(), v.end());
}

bool all_zero(const std::vector<BigInt>& v) {
  for (const BigInt& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

TEST_SUITE("repmodule") {

TEST_CASE("sl2 irreducibles") {
  for (int64_t l = 0; l <= 4; ++l) {
    RepModule M = build_sl2_irrep(l);
    CHECK(M.dim == l + 1);
    check_bracket(M, "e", "f", "h", 1);
    check_bracket(M, "h", "e", "e", 2);
    check_bracket(M, "h", "f", "f", -2);
    CHECK(M.generators.at("h").to_dense() == dense_diag(M.weight_ops.at("h")));
    // cyclic vector is the lowest weight line
    std::vector<BigInt> v = to_big(M.cyclic);
    CHECK(all_zero(M.generators.at("f").apply(v)));
    // e climbs to the top without dying
    for (int64_t j = 0; j < l; ++j) v = M.generators.at("e").apply(v);
    CHECK_FALSE(all_zero(v));
    CHECK(all_zero(M.generators.at("e").apply(v)));
  }
}

TEST_CASE("dual-pair sums") {
  for (int64_t k = 1; k <= 2; ++k) {
    RepModule M = build_varpi(k);
    int64_t want = 0;
    for (int64_t l = 0; l <= k; ++l) want += (l + 1) * (l + 1);
    CHECK(M.dim == want);
    for (const char* s : {"1", "2"}) {
      check_bracket(M, std::string("e") + s, std::string("f") + s, std::string("h") + s, 1);
      check_bracket(M, std::string("h") + s, std::string("e") + s, std::string("e") + s, 2);
    }
    // the two copies commute
    for (const char* a : {"e1", "f1", "h1"})
      for (const char* b : {"e2", "f2", "h2"})
        CHECK(commutator_dense(M.generators.at(a), M.generators.at(b)) ==
              Dense(M.dim, std::vector<BigInt>(M.dim, 0)));
    // every diagonal pair kills the canonical cyclic vector
    std::vector<BigInt> v = to_big(M.cyclic);
    for (const char* x : {"e", "f", "h"}) {
      auto a = M.generators.at(std::string(x) + "1").apply(v);
      auto b = M.generators.at(std::string(x) + "2").apply(v);
      for (int64_t i = 0; i < M.dim; ++i) CHECK(a[i] + b[i] == 0);
    }
  }
}

TEST_CASE("graded sums with charge operator") {
  for (int64_t m = 0; m <= 3; ++m) {
    RepModule P = build_pi_sum(m);
    RepModule Pb = build_pibar_sum(m);
    CHECK(P.dim == (m + 1) * (m + 2) / 2);
    check_bracket(P, "e", "f", "h", 1);
    check_bracket(Pb, "e", "f", "h", 1);
    CHECK(P.generators.at("ht").to_dense() == dense_diag(P.weight_ops.at("ht")));
    // charge is central
    CHECK(commutator_dense(P.generators.at("ht"), P.generators.at("e")) ==
          Dense(P.dim, std::vector<BigInt>(P.dim, 0)));
    // cyclic vectors: all lowest resp. all highest weight lines
    CHECK(all_zero(P.generators.at("f").apply(to_big(P.cyclic))));
    CHECK(all_zero(Pb.generators.at("e").apply(to_big(Pb.cyclic))));
    // charge eigenvalues have opposite signs on the two variants
    for (int64_t i = 0; i < P.dim; ++i)
      CHECK(P.weight_ops.at("ht")[i] == -Pb.weight_ops.at("ht")[i]);
  }
}

TEST_CASE("sl3 symmetric powers") {
  for (int64_t m = 1; m <= 3; ++m) {
    for (bool dual : {false, true}) {
      RepModule M = dual ? build_sl3_sym_dual(m) : build_sl3_sym(m);
      CHECK(M.dim == (m + 1) * (m + 2) / 2);
      check_bracket(M, "e12", "e23", "e13", 1);
      check_bracket(M, "e12", "e21", "h12", 1);
      check_bracket(M, "e23", "e32", "h23", 1);
      check_bracket(M, "e12", "e13", "e13", 0);
      check_weight_bracket(M, "h12", "e12", 2);
      check_weight_bracket(M, "h12", "e23", -1);
      check_weight_bracket(M, "h23", "e23", 2);
      check_weight_bracket(M, "h23", "e12", -1);
      check_weight_bracket(M, "h12", "e13", 1);
      check_weight_bracket(M, "h23", "e13", 1);
    }

    // raising from the cyclic monomial dies exactly beyond m steps
    RepModule S = build_sl3_sym(m);
    for (int64_t a = 0; a <= m; ++a) {
      for (int64_t b = 0; a + b <= m + 1; ++b) {
        std::vector<BigInt> v = to_big(S.cyclic);
        for (int64_t i = 0; i < a; ++i) v = S.generators.at("e13").apply(v);
        for (int64_t i = 0; i < b; ++i) v = S.generators.at("e23").apply(v);
        CHECK(all_zero(v) == (a + b > m));
      }
    }
  }
}

TEST_CASE("sparse apply agrees with dense") {
  RepModule M = build_varpi(2);
  std::vector<BigInt> v(M.dim);
  for (int64_t i = 0; i < M.dim; ++i) v[i] = (i * 7919) % 13 - 6;
  for (const auto& [name, g] : M.generators) {
    std::vector<BigInt> a = g.apply(v);
    Dense d = g.to_dense();
    for (int64_t i = 0; i < M.dim; ++i) {
      BigInt s = 0;
      for (int64_t j = 0; j < M.dim; ++j) s += d[i][j] * v[j];
      CHECK(s == a[i]);
    }
  }
}

}  // TEST_SUITE
