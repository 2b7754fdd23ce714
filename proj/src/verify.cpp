#include "fchar/verify.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "fchar/characters.hpp"
#include "fchar/errors.hpp"
#include "fchar/kostka.hpp"
#include "fchar/oracle.hpp"
#include "fchar/verlinde.hpp"

namespace fchar {

namespace {

using clk = std::chrono::steady_clock;

struct Timer {
  clk::time_point t0 = clk::now();
  int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(clk::now() - t0).count();
  }
};

CheckResult finish(CheckResult r, const Timer& t) {
  r.ms = t.ms();
  if (r.pass && !r.within_budget()) {
    r.pass = false;
    r.detail = "time budget exceeded";
  }
  return r;
}

void expect(CheckResult& r, bool ok, const std::string& what) {
  ++r.cases;
  if (ok) return;
  r.pass = false;
  if (r.detail.empty()) r.detail = what;
}

void expect_poly(CheckResult& r, const LaurentPoly& got, const LaurentPoly& want,
                 const std::string& what) {
  expect(r, got == want, what + ": mismatch");
}

// all length-k compositions with part sum <= maxtotal
std::vector<Composition> comps_total_up_to(int64_t k, int64_t maxtotal) {
  std::vector<Composition> out;
  std::vector<int64_t> cur(k, 0);
  std::function<void(int64_t, int64_t)> rec = [&](int64_t pos, int64_t left) {
    if (pos == k) {
      out.push_back(Composition(cur));
      return;
    }
    for (int64_t v = 0; v <= left; ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  rec(0, maxtotal);
  return out;
}

// all length-k compositions with sum a*m_a <= maxweight
std::vector<Composition> comps_weight_up_to(int64_t k, int64_t maxweight) {
  std::vector<Composition> out;
  std::vector<int64_t> cur(k, 0);
  std::function<void(int64_t, int64_t)> rec = [&](int64_t pos, int64_t left) {
    if (pos == k) {
      out.push_back(Composition(cur));
      return;
    }
    int64_t a = pos + 1;
    for (int64_t v = 0; v * a <= left; ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v * a);
    }
    cur[pos] = 0;
  };
  rec(0, maxweight);
  return out;
}

// all m (trailing zeros trimmed) whose tensor product of irreducibles
// prod (a+1)^{m_a} has dimension <= maxdim
std::vector<Composition> chi_grid(int64_t maxdim) {
  std::vector<Composition> out;
  std::vector<int64_t> cur;
  auto emit = [&]() {
    std::vector<int64_t> t = cur;
    while (t.size() > 1 && t.back() == 0) t.pop_back();
    if (t.empty()) t = {0};
    out.push_back(Composition(std::move(t)));
  };
  std::function<void(int64_t, int64_t)> rec = [&](int64_t a, int64_t budget) {
    if (a + 1 > budget) {
      emit();
      return;
    }
    cur.push_back(0);
    for (int64_t c = 0, p = 1; p <= budget; ++c, p *= a + 1) {
      cur.back() = c;
      rec(a + 1, budget / p);
    }
    cur.pop_back();
  };
  rec(1, maxdim);
  return out;
}

std::string tuple_str(int64_t k, int64_t l, const std::string& rest) {
  return "k=" + std::to_string(k) + " l=" + std::to_string(l) + " " + rest;
}

}  // namespace

CheckResult check_multinomial_consistency() {
  Timer t;
  CheckResult r;
  r.name = "graded multinomial coefficients match brute-force expansion at q=1";
  r.budget_ms = 1000;
  r.pass = true;
  for (int64_t k = 1; k <= 3; ++k) {
    for (const Composition& M : comps_total_up_to(k, 4)) {
      std::map<std::vector<int64_t>, BigInt> expansion = multinomial_expansion(M);
      std::map<std::vector<int64_t>, BigInt> from_f;
      for (const Composition& m : compositions_dominated_by(M)) {
        BigInt v = f_coeff(M, m).coeff_sum();
        ++r.cases;
        if (v != 0) from_f[m.parts()] = v;
      }
      if (from_f != expansion) {
        r.pass = false;
        if (r.detail.empty()) r.detail = "expansion differs for M=" + M.to_string();
      }
    }
  }
  return finish(std::move(r), t);
}

CheckResult check_verlinde_kostka() {
  Timer t;
  CheckResult r;
  r.name = "restricted Kostka at q=1 matches Verlinde multiplicity";
  r.budget_ms = 1000;
  r.pass = true;
  for (int64_t k = 1; k <= 3; ++k) {
    for (const Composition& m : comps_total_up_to(k, 4)) {
      VerlindeElt prod = VerlindeElt::unit(k);
      for (int64_t a = 1; a <= k; ++a)
        for (int64_t c = 0; c < m.at(a); ++c) prod = verlinde_mul(prod, VerlindeElt::basis(k, a));
      for (int64_t l = 0; l <= k; ++l) {
        BigInt kq1 = restricted_kostka(k, l, m).coeff_sum();
        expect(r, kq1 == verlinde_coeff(prod, l),
               tuple_str(k, l, "m=" + m.to_string()) + ": Kostka(1) != Verlinde multiplicity");
      }
    }
  }
  return finish(std::move(r), t);
}

CheckResult check_dimension_formulas() {
  Timer t;
  CheckResult r;
  r.name = "Verlinde dimensions match q=z=1 character specializations";
  r.budget_ms = 10000;
  r.pass = true;
  for (int64_t k = 1; k <= 3; ++k) {
    for (int64_t l = 0; l <= k; ++l) {
      for (int64_t N = 0; N <= 3; ++N)
        expect(r, dim_bigc(k, l, N) == ch_bigc(k, l, N).coeff_sum(),
               tuple_str(k, l, "N=" + std::to_string(N)) + ": dim mismatch");
      for (const Composition& M : comps_weight_up_to(k, 5))
        for (const Composition& Mbar : comps_weight_up_to(k, 5 - M.weight()))
          expect(r, dim_mixc(k, l, M, Mbar) == ch_mixc(k, l, M, Mbar).coeff_sum(),
                 tuple_str(k, l, "M=" + M.to_string() + " Mbar=" + Mbar.to_string()) +
                     ": dim mismatch");
    }
  }
  return finish(std::move(r), t);
}

CheckResult check_alternating_identities() {
  Timer t;
  CheckResult r;
  r.name = "level-restricted characters equal alternating sums";
  r.budget_ms = 30000;
  r.pass = true;
  for (int64_t k = 1; k <= 3; ++k)
    for (int64_t l = 0; l <= k; ++l)
      for (int64_t N = 0; N <= 3; ++N)
        expect_poly(r, ch_bigc(k, l, N), ch_bigc_alternating(k, l, N),
                    tuple_str(k, l, "N=" + std::to_string(N)));
  for (int64_t k = 1; k <= 4; ++k)
    for (const Composition& m : comps_weight_up_to(k, 8))
      for (int64_t l = 0; l <= k; ++l)
        expect_poly(r, restricted_kostka(k, l, m), alternating_sum_kostka(k, l, m),
                    tuple_str(k, l, "m=" + m.to_string()));
  return finish(std::move(r), t);
}

CheckResult check_oracle_chi(const FusionRun& run) {
  Timer t;
  CheckResult r;
  r.name = "fusion oracle reproduces graded tensor characters";
  r.budget_ms = 60000;
  r.pass = true;
  for (const Composition& m : chi_grid(36)) {
    try {
      expect_poly(r, oracle_chi(m, run).poly, chi(m), "m=" + m.to_string());
    } catch (const std::exception& e) {
      expect(r, false, "m=" + m.to_string() + ": " + e.what());
    }
  }
  return finish(std::move(r), t);
}

CheckResult check_oracle_kostka(const FusionRun& run) {
  Timer t;
  CheckResult r;
  r.name = "graded quotient oracle reproduces restricted Kostka polynomials";
  r.budget_ms = 60000;
  r.pass = true;
  for (int64_t k = 1; k <= 2; ++k) {
    for (const Composition& m : chi_grid(36)) {
      if (m.size() > k) continue;
      Composition mk = m.resized(k);
      for (int64_t l = 0; l <= k; ++l) {
        try {
          expect_poly(r, oracle_kostka(k, l, mk, run).poly, restricted_kostka(k, l, mk),
                      tuple_str(k, l, "m=" + mk.to_string()));
        } catch (const std::exception& e) {
          expect(r, false, tuple_str(k, l, "m=" + mk.to_string()) + ": " + e.what());
        }
      }
    }
  }
  return finish(std::move(r), t);
}

CheckResult check_oracle_chbig(const FusionRun& run) {
  Timer t;
  CheckResult r;
  r.name = "coinvariant oracle reproduces level-restricted characters";
  r.budget_ms = 120000;
  r.pass = true;
  auto one = [&](int64_t k, int64_t l, int64_t N) {
    try {
      expect_poly(r, oracle_chbig(k, l, N, run).poly, ch_bigc(k, l, N),
                  tuple_str(k, l, "N=" + std::to_string(N)));
    } catch (const std::exception& e) {
      expect(r, false, tuple_str(k, l, "N=" + std::to_string(N)) + ": " + e.what());
    }
  };
  for (int64_t k = 1; k <= 2; ++k)
    for (int64_t N = 0; N <= 2; ++N)
      for (int64_t l = 0; l <= k; ++l) one(k, l, N);
  for (int64_t l = 0; l <= 3; ++l) one(3, l, 1);
  return finish(std::move(r), t);
}

CheckResult check_oracle_chmix(const FusionRun& run) {
  Timer t;
  CheckResult r;
  r.name = "filtered quotient oracle reproduces mixed coinvariant characters";
  r.budget_ms = 120000;
  r.pass = true;
  for (int64_t k = 1; k <= 2; ++k) {
    for (const Composition& M : comps_total_up_to(k, 3)) {
      for (const Composition& Mbar : comps_total_up_to(k, 3 - M.total())) {
        for (int64_t l = 0; l <= k; ++l) {
          std::string what =
              tuple_str(k, l, "M=" + M.to_string() + " Mbar=" + Mbar.to_string());
          try {
            expect_poly(r, oracle_chmix(k, l, M, Mbar, run).poly, ch_mixc(k, l, M, Mbar), what);
          } catch (const std::exception& e) {
            expect(r, false, what + ": " + e.what());
          }
        }
      }
    }
  }
  return finish(std::move(r), t);
}

CheckResult check_oracle_vm_vmmbar(const FusionRun& run) {
  Timer t;
  CheckResult r;
  r.name = "two-variable fusion oracles reproduce product characters";
  r.budget_ms = 120000;
  r.pass = true;
  for (const Composition& M : comps_total_up_to(2, 2)) {
    try {
      expect_poly(r, oracle_vm(M, run).poly, ch_vm(M), "M=" + M.to_string());
    } catch (const std::exception& e) {
      expect(r, false, "M=" + M.to_string() + ": " + e.what());
    }
  }
  auto capped = [](const Composition& c) {
    for (int64_t a = 1; a <= c.size(); ++a)
      if (c.at(a) > 2) return false;
    return true;
  };
  for (const Composition& M : comps_total_up_to(2, 3)) {
    if (!capped(M)) continue;
    for (const Composition& Mbar : comps_total_up_to(2, 3 - M.total())) {
      if (!capped(Mbar)) continue;
      std::string what = "M=" + M.to_string() + " Mbar=" + Mbar.to_string();
      try {
        expect_poly(r, oracle_vmmbar(M, Mbar, run).poly, ch_vmmbar(M, Mbar), what);
      } catch (const std::exception& e) {
        expect(r, false, what + ": " + e.what());
      }
    }
  }
  return finish(std::move(r), t);
}

CheckResult check_robustness(const FusionRun& run) {
  Timer t;
  CheckResult r;
  r.name = "oracle grids agree across two primes and three seeds";
  r.pass = true;
  const uint64_t primes[2] = {kDefaultPrime, kSecondaryPrime};
  const uint64_t seeds[3] = {run.seed, run.seed + 101, run.seed + 202};
  for (uint64_t p : primes) {
    for (uint64_t s : seeds) {
      FusionRun rr;
      rr.prime = p;
      rr.seed = s;
      for (const CheckResult& c :
           {check_oracle_chi(rr), check_oracle_kostka(rr), check_oracle_chbig(rr),
            check_oracle_chmix(rr), check_oracle_vm_vmmbar(rr)}) {
        r.cases += c.cases;
        if (!c.pass && r.detail.empty()) {
          r.pass = false;
          r.detail = "prime=" + std::to_string(p) + " seed=" + std::to_string(s) + ": " +
                     c.name + ": " + c.detail;
        }
        r.pass = r.pass && c.pass;
      }
    }
  }
  return finish(std::move(r), t);
}

namespace {

CheckResult small_case(const std::string& name,
                       const std::function<void(CheckResult&)>& body) {
  Timer t;
  CheckResult r;
  r.name = name;
  r.pass = true;
  try {
    body(r);
  } catch (const std::exception& e) {
    expect(r, false, e.what());
  }
  return finish(std::move(r), t);
}

std::vector<CheckResult> oracle_small(const FusionRun& run) {
  std::vector<CheckResult> out;
  out.push_back(small_case("chi oracle, smallest products", [&](CheckResult& r) {
    for (const Composition& m :
         {Composition({2}), Composition({1, 1}), Composition({2, 1})})
      expect_poly(r, oracle_chi(m, run).poly, chi(m), "m=" + m.to_string());
  }));
  out.push_back(small_case("Kostka oracle, smallest quotients", [&](CheckResult& r) {
    expect_poly(r, oracle_kostka(1, 0, Composition({2}), run).poly,
                restricted_kostka(1, 0, Composition({2})), "k=1 l=0 m=(2)");
    expect_poly(r, oracle_kostka(2, 1, Composition({1, 1}), run).poly,
                restricted_kostka(2, 1, Composition({1, 1})), "k=2 l=1 m=(1,1)");
  }));
  out.push_back(small_case("coinvariant oracle, one and two points", [&](CheckResult& r) {
    expect_poly(r, oracle_chbig(1, 0, 1, run).poly, ch_bigc(1, 0, 1), "k=1 l=0 N=1");
    expect_poly(r, oracle_chbig(1, 1, 1, run).poly, ch_bigc(1, 1, 1), "k=1 l=1 N=1");
    expect_poly(r, oracle_chbig(1, 1, 2, run).poly, ch_bigc(1, 1, 2), "k=1 l=1 N=2");
  }));
  out.push_back(small_case("mixed coinvariant oracle, single factors", [&](CheckResult& r) {
    expect_poly(r, oracle_chmix(1, 1, Composition({1}), Composition({0}), run).poly,
                ch_mixc(1, 1, Composition({1}), Composition({0})), "k=1 l=1 M=(1)");
    expect_poly(r, oracle_chmix(1, 0, Composition({1}), Composition({1}), run).poly,
                ch_mixc(1, 0, Composition({1}), Composition({1})), "k=1 l=0 M=(1) Mbar=(1)");
  }));
  out.push_back(small_case("two-variable oracle, single factors", [&](CheckResult& r) {
    expect_poly(r, oracle_vm(Composition({1}), run).poly, ch_vm(Composition({1})), "M=(1)");
    expect_poly(r, oracle_vm(Composition({2}), run).poly, ch_vm(Composition({2})), "M=(2)");
  }));
  out.push_back(small_case("symmetric-power oracle, single factors", [&](CheckResult& r) {
    expect_poly(r, oracle_vmmbar(Composition({1}), Composition({0}), run).poly,
                ch_vmmbar(Composition({1}), Composition({0})), "M=(1)");
    expect_poly(r, oracle_vmmbar(Composition({1}), Composition({1}), run).poly,
                ch_vmmbar(Composition({1}), Composition({1})), "M=(1) Mbar=(1)");
  }));
  return out;
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, const FusionRun& run) {
  std::vector<CheckResult> out;
  if (suite == "identities") {
    out.push_back(check_multinomial_consistency());
    out.push_back(check_verlinde_kostka());
    out.push_back(check_dimension_formulas());
    out.push_back(check_alternating_identities());
  } else if (suite == "oracle-small") {
    out = oracle_small(run);
  } else if (suite == "oracle-full") {
    out.push_back(check_oracle_chi(run));
    out.push_back(check_oracle_kostka(run));
    out.push_back(check_oracle_chbig(run));
    out.push_back(check_oracle_chmix(run));
    out.push_back(check_oracle_vm_vmmbar(run));
    out.push_back(check_robustness(run));
  } else {
    throw ParamError("unknown suite: " + suite +
                     " (expected identities, oracle-small or oracle-full)");
  }
  return out;
}

}  // namespace fchar
