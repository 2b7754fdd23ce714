#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fchar/characters.hpp"
#include "fchar/errors.hpp"
#include "fchar/kostka.hpp"
#include "fchar/oracle.hpp"
#include "fchar/verify.hpp"
#include "fchar/verlinde.hpp"

namespace {

using namespace fchar;

Composition parse_comp(const std::string& s) {
  if (s.empty()) throw ParamError("composition must not be empty");
  std::vector<int64_t> parts;
  size_t pos = 0;
  while (true) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      size_t used = 0;
      parts.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParamError("bad composition entry '" + tok + "' in '" + s + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Composition(std::move(parts));
}

uint64_t prime_from_env() {
  const char* env = std::getenv("FCHAR_PRIME");
  if (env == nullptr || *env == '\0') return kDefaultPrime;
  try {
    size_t used = 0;
    uint64_t p = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return p;
  } catch (const std::exception&) {
    throw ParamError(std::string("FCHAR_PRIME is not a valid integer: ") + env);
  }
}

struct Ctx {
  int64_t k = 0;
  int64_t l = 0;
  int64_t N = 0;
  int64_t qb_m = 0;
  int64_t qb_n = 0;
  std::string m_str;
  std::string M_str;
  std::string Mbar_str = "0";
  uint64_t prime = kDefaultPrime;
  uint64_t seed = 1;
  bool rational = false;
  bool htilde = false;
  std::string format = "json";
  std::string mode = "formula";
  std::string suite;
  int exit_code = 0;

  FusionRun run() const { return FusionRun{prime, seed, rational}; }
};

void emit_poly(const LaurentPoly& p, const std::string& format) {
  if (format == "json")
    std::cout << p.to_json().dump() << "\n";
  else if (format == "csv")
    std::cout << p.to_csv();
  else
    std::cout << p.to_string() << "\n";
}

void emit_scalar(const BigInt& v, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["value"] = to_decimal(v);
    std::cout << j.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "value\n" << to_decimal(v) << "\n";
  } else {
    std::cout << to_decimal(v) << "\n";
  }
}

int emit_report(const OracleReport& rep, const std::string& format) {
  if (format == "json")
    std::cout << rep.to_json().dump() << "\n";
  else if (format == "csv")
    std::cout << rep.poly.to_csv();
  else
    std::cout << rep.poly.to_string() << "\n";
  return (rep.match && !*rep.match) ? 1 : 0;
}

void require_formula_mode(const Ctx& c, const char* cmd) {
  if (c.mode != "formula")
    throw ParamError(std::string(cmd) + " has no oracle route; drop --mode oracle");
}

void add_output_opts(CLI::App* sub, Ctx& c) {
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
}

void add_mode_opt(CLI::App* sub, Ctx& c) {
  sub->add_option("--mode", c.mode, "formula route or representation oracle")
      ->check(CLI::IsMember({"formula", "oracle"}))
      ->capture_default_str();
}

void add_run_opts(CLI::App* sub, Ctx& c) {
  sub->add_option("--prime", c.prime, "prime modulus for oracle linear algebra")
      ->capture_default_str();
  sub->add_option("--seed", c.seed, "seed for random evaluation points")->capture_default_str();
  sub->add_flag("--rational", c.rational, "exact rational oracle arithmetic (slow)");
}

int run_cli(int argc, char** argv) {
  Ctx c;
  c.prime = prime_from_env();

  CLI::App app{"exact graded characters of current-algebra fusion quotients"};
  app.require_subcommand(1);

  auto* chi_cmd = app.add_subcommand("chi", "graded character of a tensor product of irreducibles");
  chi_cmd->add_option("--m", c.m_str, "multiplicities m_1,m_2,...")->required();
  add_output_opts(chi_cmd, c);
  add_mode_opt(chi_cmd, c);
  add_run_opts(chi_cmd, c);
  chi_cmd->callback([&] {
    Composition m = parse_comp(c.m_str);
    if (c.mode == "oracle") {
      OracleReport rep = oracle_chi(m, c.run());
      rep.compare(chi(m));
      c.exit_code = emit_report(rep, c.format);
    } else {
      emit_poly(chi(m), c.format);
    }
  });

  auto* chpi_cmd = app.add_subcommand("chpi", "centered character of a tensor product");
  chpi_cmd->add_option("--m", c.m_str, "multiplicities m_1,m_2,...")->required();
  add_output_opts(chpi_cmd, c);
  add_mode_opt(chpi_cmd, c);
  chpi_cmd->callback([&] {
    require_formula_mode(c, "chpi");
    emit_poly(ch_pi(parse_comp(c.m_str)), c.format);
  });

  auto* chvm_cmd = app.add_subcommand("chvm", "two-variable character of a fusion of dual pairs");
  chvm_cmd->add_option("--M", c.M_str, "multiplicities M_1,M_2,...")->required();
  add_output_opts(chvm_cmd, c);
  add_mode_opt(chvm_cmd, c);
  add_run_opts(chvm_cmd, c);
  chvm_cmd->callback([&] {
    Composition M = parse_comp(c.M_str);
    if (c.mode == "oracle") {
      OracleReport rep = oracle_vm(M, c.run());
      rep.compare(ch_vm(M));
      c.exit_code = emit_report(rep, c.format);
    } else {
      emit_poly(ch_vm(M), c.format);
    }
  });

  auto* chvmm_cmd =
      app.add_subcommand("chvmmbar", "two-variable character of a symmetric-power fusion");
  chvmm_cmd->add_option("--M", c.M_str, "multiplicities M_1,M_2,...")->required();
  chvmm_cmd->add_option("--Mbar", c.Mbar_str, "dual multiplicities")->capture_default_str();
  add_output_opts(chvmm_cmd, c);
  add_mode_opt(chvmm_cmd, c);
  add_run_opts(chvmm_cmd, c);
  chvmm_cmd->callback([&] {
    Composition M = parse_comp(c.M_str);
    Composition Mbar = parse_comp(c.Mbar_str);
    if (c.mode == "oracle") {
      OracleReport rep = oracle_vmmbar(M, Mbar, c.run());
      rep.compare(ch_vmmbar(M, Mbar));
      c.exit_code = emit_report(rep, c.format);
    } else {
      emit_poly(ch_vmmbar(M, Mbar), c.format);
    }
  });

  auto* chbig_cmd = app.add_subcommand("chbig", "character of the N-point coinvariant space");
  chbig_cmd->add_option("--k", c.k, "level")->required();
  chbig_cmd->add_option("--l", c.l, "highest weight")->required();
  chbig_cmd->add_option("--N", c.N, "number of points")->required();
  add_output_opts(chbig_cmd, c);
  add_mode_opt(chbig_cmd, c);
  add_run_opts(chbig_cmd, c);
  chbig_cmd->callback([&] {
    if (c.mode == "oracle") {
      OracleReport rep = oracle_chbig(c.k, c.l, c.N, c.run());
      rep.compare(ch_bigc(c.k, c.l, c.N));
      c.exit_code = emit_report(rep, c.format);
    } else {
      emit_poly(ch_bigc(c.k, c.l, c.N), c.format);
    }
  });

  auto* chbiga_cmd =
      app.add_subcommand("chbig-alt", "same character via the alternating-sum expression");
  chbiga_cmd->add_option("--k", c.k, "level")->required();
  chbiga_cmd->add_option("--l", c.l, "highest weight")->required();
  chbiga_cmd->add_option("--N", c.N, "number of points")->required();
  add_output_opts(chbiga_cmd, c);
  add_mode_opt(chbiga_cmd, c);
  chbiga_cmd->callback([&] {
    require_formula_mode(c, "chbig-alt");
    emit_poly(ch_bigc_alternating(c.k, c.l, c.N), c.format);
  });

  auto* chmix_cmd = app.add_subcommand("chmix", "character of the mixed coinvariant space");
  chmix_cmd->add_option("--k", c.k, "level")->required();
  chmix_cmd->add_option("--l", c.l, "highest weight")->required();
  chmix_cmd->add_option("--M", c.M_str, "multiplicities M_1,M_2,...")->required();
  chmix_cmd->add_option("--Mbar", c.Mbar_str, "dual multiplicities")->capture_default_str();
  chmix_cmd->add_flag("--htilde-ideal", c.htilde,
                      "oracle only: read the Cartan ideal generator as the extended charge");
  add_output_opts(chmix_cmd, c);
  add_mode_opt(chmix_cmd, c);
  add_run_opts(chmix_cmd, c);
  chmix_cmd->callback([&] {
    Composition M = parse_comp(c.M_str).resized(c.k);
    Composition Mbar = parse_comp(c.Mbar_str).resized(c.k);
    if (c.mode == "oracle") {
      OracleReport rep = oracle_chmix(c.k, c.l, M, Mbar, c.run(), c.htilde);
      if (!c.htilde) rep.compare(ch_mixc(c.k, c.l, M, Mbar));
      c.exit_code = emit_report(rep, c.format);
    } else {
      if (c.htilde) throw ParamError("--htilde-ideal applies only to --mode oracle");
      emit_poly(ch_mixc(c.k, c.l, M, Mbar), c.format);
    }
  });

  auto* kostka_cmd = app.add_subcommand("kostka", "level-restricted Kostka polynomial");
  kostka_cmd->add_option("--k", c.k, "level")->required();
  kostka_cmd->add_option("--l", c.l, "weight label")->required();
  kostka_cmd->add_option("--m", c.m_str, "multiplicities m_1,m_2,...")->required();
  add_output_opts(kostka_cmd, c);
  add_mode_opt(kostka_cmd, c);
  add_run_opts(kostka_cmd, c);
  kostka_cmd->callback([&] {
    Composition m = parse_comp(c.m_str);
    if (c.mode == "oracle") {
      OracleReport rep = oracle_kostka(c.k, c.l, m.resized(c.k), c.run());
      rep.compare(restricted_kostka(c.k, c.l, m));
      c.exit_code = emit_report(rep, c.format);
    } else {
      emit_poly(restricted_kostka(c.k, c.l, m), c.format);
    }
  });

  auto* kostkau_cmd =
      app.add_subcommand("kostka-unrestricted", "Kostka polynomial without the level restriction");
  kostkau_cmd->add_option("--l", c.l, "weight label")->required();
  kostkau_cmd->add_option("--m", c.m_str, "multiplicities m_1,m_2,...")->required();
  add_output_opts(kostkau_cmd, c);
  add_mode_opt(kostkau_cmd, c);
  kostkau_cmd->callback([&] {
    require_formula_mode(c, "kostka-unrestricted");
    emit_poly(unrestricted_kostka(c.l, parse_comp(c.m_str)), c.format);
  });

  auto* kostkaa_cmd = app.add_subcommand(
      "kostka-alt", "restricted Kostka polynomial via the alternating sum of unrestricted ones");
  kostkaa_cmd->add_option("--k", c.k, "level")->required();
  kostkaa_cmd->add_option("--l", c.l, "weight label")->required();
  kostkaa_cmd->add_option("--m", c.m_str, "multiplicities m_1,m_2,...")->required();
  add_output_opts(kostkaa_cmd, c);
  add_mode_opt(kostkaa_cmd, c);
  kostkaa_cmd->callback([&] {
    require_formula_mode(c, "kostka-alt");
    emit_poly(alternating_sum_kostka(c.k, c.l, parse_comp(c.m_str)), c.format);
  });

  auto* fcoeff_cmd = app.add_subcommand("fcoeff", "graded multinomial coefficient");
  fcoeff_cmd->add_option("--M", c.M_str, "outer multiplicities")->required();
  fcoeff_cmd->add_option("--m", c.m_str, "inner multiplicities")->required();
  add_output_opts(fcoeff_cmd, c);
  add_mode_opt(fcoeff_cmd, c);
  fcoeff_cmd->callback([&] {
    require_formula_mode(c, "fcoeff");
    emit_poly(f_coeff(parse_comp(c.M_str), parse_comp(c.m_str)), c.format);
  });

  auto* qbin_cmd = app.add_subcommand("qbin", "Gaussian binomial coefficient");
  qbin_cmd->add_option("--m", c.qb_m, "upper index")->required();
  qbin_cmd->add_option("--n", c.qb_n, "lower index")->required();
  add_output_opts(qbin_cmd, c);
  add_mode_opt(qbin_cmd, c);
  qbin_cmd->callback([&] {
    require_formula_mode(c, "qbin");
    emit_poly(q_binomial(c.qb_m, c.qb_n), c.format);
  });

  auto* vdim_cmd = app.add_subcommand("verlinde-dim", "multiplicity of [l] in a fusion power");
  vdim_cmd->add_option("--k", c.k, "level")->required();
  vdim_cmd->add_option("--l", c.l, "weight label")->required();
  vdim_cmd->add_option("--N", c.N, "number of points (full-sum convention)");
  vdim_cmd->add_option("--M", c.M_str, "multiplicities for the mixed convention");
  vdim_cmd->add_option("--Mbar", c.Mbar_str, "dual multiplicities")->capture_default_str();
  add_output_opts(vdim_cmd, c);
  add_mode_opt(vdim_cmd, c);
  vdim_cmd->callback([&] {
    require_formula_mode(c, "verlinde-dim");
    if (vdim_cmd->count("--N") > 0 && vdim_cmd->count("--M") > 0)
      throw ParamError("verlinde-dim takes either --N or --M, not both");
    if (vdim_cmd->count("--N") > 0) {
      emit_scalar(dim_bigc(c.k, c.l, c.N), c.format);
    } else if (vdim_cmd->count("--M") > 0) {
      emit_scalar(dim_mixc(c.k, c.l, parse_comp(c.M_str).resized(c.k),
                           parse_comp(c.Mbar_str).resized(c.k)),
                  c.format);
    } else {
      throw ParamError("verlinde-dim needs --N or --M");
    }
  });

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite,--suite", c.suite, "identities, oracle-small or oracle-full")
      ->required()
      ->check(CLI::IsMember({"identities", "oracle-small", "oracle-full"}));
  add_output_opts(verify_cmd, c);
  add_run_opts(verify_cmd, c);
  verify_cmd->callback([&] {
    if (c.format == "csv") throw ParamError("verify supports json or pretty output");
    std::vector<CheckResult> results = run_suite(c.suite, c.run());
    bool all = true;
    if (c.format == "json") {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const CheckResult& r : results) {
        nlohmann::ordered_json j;
        j["name"] = r.name;
        j["pass"] = r.pass;
        j["cases"] = r.cases;
        if (!r.detail.empty()) j["detail"] = r.detail;
        arr.push_back(std::move(j));
        all = all && r.pass;
      }
      std::cout << arr.dump() << "\n";
    } else {
      for (const CheckResult& r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
        if (!r.detail.empty()) std::cout << ": " << r.detail;
        std::cout << "\n";
        all = all && r.pass;
      }
    }
    if (!all) c.exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return c.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const fchar::ParamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
