#include "fchar/oracle.hpp"

#include <utility>

#include "fchar/errors.hpp"

namespace fchar {

nlohmann::ordered_json OracleReport::to_json() const {
  nlohmann::ordered_json j;
  j["op"] = op;
  j["params"] = params;
  j["field"] = rational ? "rational" : "prime";
  if (!rational) j["prime"] = prime;
  j["seed"] = seed;
  j["zetas"] = zetas;
  j["total_dim"] = total_dim;
  j["graded_dims"] = dims.to_json();
  j["character"] = poly.to_json();
  if (formula) j["formula"] = formula->to_json();
  if (match) j["match"] = *match;
  return j;
}

void OracleReport::compare(const LaurentPoly& expected) {
  formula = expected;
  match = (poly == expected);
}

namespace {

uint64_t remix(uint64_t seed, uint64_t salt) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

struct StableOut {
  FusionResult res;
  FusionRun used;
};

// Runs a fusion (plus optional quotient) with cross-field confirmation:
// the same problem is solved over a second prime with an independent
// seed and the graded dimensions must coincide. Disagreement or a
// degenerate draw triggers a fresh attempt; three failures in a row are
// reported as DegeneracyError. Rational runs are exact and execute once.
StableOut stable_run(const FusionProblem& fp, const std::vector<IdealOp>* ops, QuotientMode mode,
                     const FusionRun& run) {
  auto solve = [&](const FusionRun& r) {
    return ops ? graded_quotient_character(fp, *ops, mode, r) : fusion_graded_character(fp, r);
  };
  if (run.rational) return {solve(run), run};
  // odd prime so scaling an ideal generator by 1/2 cannot change its
  // image (the Cartan generator h+l and its half are interchangeable)
  if (run.prime == 2) throw ParamError("oracle: prime must be odd");
  std::string last = "no attempt";
  for (int attempt = 0; attempt < 3; ++attempt) {
    FusionRun a = run;
    if (attempt > 0) a.seed = remix(run.seed, (uint64_t)attempt);
    FusionRun b = a;
    b.prime = (a.prime == kDefaultPrime) ? kSecondaryPrime : kDefaultPrime;
    b.seed = remix(a.seed, 0x5eed);
    try {
      FusionResult ra = solve(a);
      FusionResult rb = solve(b);
      if (ra.total_dim == rb.total_dim && ra.dims == rb.dims) return {std::move(ra), a};
      last = "graded dimensions differ between the two prime fields";
    } catch (const DegeneracyError& e) {
      last = e.what();
    }
  }
  throw DegeneracyError("oracle: no stable result after 3 attempts (" + last + ")");
}

OracleReport make_report(std::string op, nlohmann::ordered_json params, const FusionProblem& fp,
                         const std::vector<IdealOp>* ops, QuotientMode mode,
                         const FusionRun& run) {
  StableOut out = stable_run(fp, ops, mode, run);
  OracleReport rep;
  rep.op = std::move(op);
  rep.params = std::move(params);
  rep.rational = out.used.rational;
  rep.prime = out.used.rational ? 0 : out.used.prime;
  rep.seed = out.used.seed;
  rep.zetas = std::move(out.res.zetas);
  rep.total_dim = out.res.total_dim;
  rep.dims = std::move(out.res.dims);
  rep.poly = rep.dims.to_poly(fp.axes);
  return rep;
}

std::vector<RepModule> sl2_factors(const Composition& m) {
  std::vector<RepModule> fs;
  for (int64_t a = 1; a <= m.size(); ++a)
    for (int64_t c = 0; c < m.at(a); ++c) fs.push_back(build_sl2_irrep(a));
  return fs;
}

void require_level_labels(const Composition& m, int64_t k, const char* who) {
  for (int64_t a = k + 1; a <= m.size(); ++a)
    if (m.at(a) != 0) throw ParamError(std::string(who) + ": labels must be <= k");
}

}  // namespace

OracleReport oracle_chi(const Composition& m, const FusionRun& run) {
  FusionProblem fp;
  fp.factors = sl2_factors(m);
  fp.acting = {"e", "f", "h"};
  fp.axes = {{"z", 2, {{"h", 1}}}};
  nlohmann::ordered_json params;
  params["m"] = m.parts();
  OracleReport rep =
      make_report("chi", std::move(params), fp, nullptr, QuotientMode::graded, run);
  // raw z-exponents are diagonal Cartan eigenvalues, symmetric around 0;
  // chi is normalized to run over z^0..z^{sum a*m_a}
  rep.poly = rep.poly.shifted({0, m.weight()});
  return rep;
}

OracleReport oracle_kostka(int64_t k, int64_t l, const Composition& m, const FusionRun& run) {
  if (k < 1 || l < 0 || l > k) throw ParamError("oracle_kostka: need k >= 1, 0 <= l <= k");
  require_level_labels(m, k, "oracle_kostka");
  FusionProblem fp;
  fp.factors = sl2_factors(m);
  fp.acting = {"e", "f", "h"};
  fp.axes = {{"z", 2, {{"h", 1}}}};
  std::vector<IdealOp> ops{{"e", 0, 1, 0}, {"e", 1, k - l + 1, 0}, {"h", 0, 1, l}};
  nlohmann::ordered_json params;
  params["k"] = k;
  params["l"] = l;
  params["m"] = m.parts();
  OracleReport rep =
      make_report("kostka", std::move(params), fp, &ops, QuotientMode::graded, run);
  // the quotient pins the Cartan eigenvalue to -l; the polynomial lives
  // in q alone
  LaurentPoly qp(qvars());
  for (const auto& [key, dim] : rep.dims.dims) {
    if (key.second != std::vector<int64_t>{-l})
      throw Error("oracle_kostka: quotient contains an unexpected weight");
    qp.add_term({key.first}, BigInt((long)dim));
  }
  rep.poly = std::move(qp);
  return rep;
}

OracleReport oracle_chbig(int64_t k, int64_t l, int64_t N, const FusionRun& run) {
  if (k < 0 || l < 0 || l > k || N < 0) throw ParamError("oracle_chbig: need 0 <= l <= k, N >= 0");
  FusionProblem fp;
  for (int64_t i = 0; i < N; ++i) fp.factors.push_back(build_varpi(k));
  fp.acting = {"e2", "f2", "h2"};
  fp.axes = {{"z", 2, {{"h1", 1}}}};
  std::vector<IdealOp> ops{{"e2", 0, 1, 0}, {"e2", 1, k - l + 1, 0}, {"h2", 0, 1, l}};
  nlohmann::ordered_json params;
  params["k"] = k;
  params["l"] = l;
  params["N"] = N;
  return make_report("chbig", std::move(params), fp, &ops, QuotientMode::graded, run);
}

OracleReport oracle_chmix(int64_t k, int64_t l, const Composition& M, const Composition& Mbar,
                          const FusionRun& run, bool htilde_ideal) {
  if (k < 1 || l < 0 || l > k) throw ParamError("oracle_chmix: need k >= 1, 0 <= l <= k");
  require_level_labels(M, k, "oracle_chmix");
  require_level_labels(Mbar, k, "oracle_chmix");
  FusionProblem fp;
  for (int64_t a = 1; a <= M.size(); ++a)
    for (int64_t c = 0; c < M.at(a); ++c) fp.factors.push_back(build_pi_sum(a));
  for (int64_t a = 1; a <= Mbar.size(); ++a)
    for (int64_t c = 0; c < Mbar.at(a); ++c) fp.factors.push_back(build_pibar_sum(a));
  fp.acting = {"e", "f", "h"};
  fp.axes = {{"z", 2, {{"ht", 2}}}};
  std::vector<IdealOp> ops{{"e", 0, 1, 0},
                           {"e", 1, k - l + 1, 0},
                           {htilde_ideal ? "ht" : "h", 0, 1, l}};
  nlohmann::ordered_json params;
  params["k"] = k;
  params["l"] = l;
  params["M"] = M.parts();
  params["Mbar"] = Mbar.parts();
  if (htilde_ideal) params["htilde_ideal"] = true;
  return make_report("chmix", std::move(params), fp, &ops, QuotientMode::filtered, run);
}

OracleReport oracle_vm(const Composition& M, const FusionRun& run) {
  FusionProblem fp;
  for (int64_t a = 1; a <= M.size(); ++a)
    for (int64_t c = 0; c < M.at(a); ++c) fp.factors.push_back(build_varpi(a));
  fp.acting = {"e2", "f2", "h2"};
  fp.axes = {{"z1", 2, {{"h1", 1}}}, {"z2", 2, {{"h2", 1}}}};
  nlohmann::ordered_json params;
  params["M"] = M.parts();
  return make_report("vm", std::move(params), fp, nullptr, QuotientMode::graded, run);
}

OracleReport oracle_vmmbar(const Composition& M, const Composition& Mbar, const FusionRun& run) {
  FusionProblem fp;
  for (int64_t a = 1; a <= M.size(); ++a)
    for (int64_t c = 0; c < M.at(a); ++c) fp.factors.push_back(build_sl3_sym(a));
  for (int64_t a = 1; a <= Mbar.size(); ++a)
    for (int64_t c = 0; c < Mbar.at(a); ++c) fp.factors.push_back(build_sl3_sym_dual(a));
  fp.acting = {"e12", "e13", "e23"};
  // stored exponents are six times the two fundamental-coweight
  // pairings: 6*D1 = 4*h12 + 2*h23, 6*D2 = 2*h12 + 4*h23
  fp.axes = {{"z1", 6, {{"h12", 4}, {"h23", 2}}}, {"z2", 6, {{"h12", 2}, {"h23", 4}}}};
  nlohmann::ordered_json params;
  params["M"] = M.parts();
  params["Mbar"] = Mbar.parts();
  return make_report("vmmbar", std::move(params), fp, nullptr, QuotientMode::graded, run);
}

}  // namespace fchar
