#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fchar/fusion.hpp"

namespace fchar {

struct CheckResult {
  std::string name;
  bool pass = false;
  int64_t cases = 0;
  int64_t ms = 0;
  int64_t budget_ms = 0;  // 0 means no stated budget
  std::string detail;     // first failure, or empty

  bool within_budget() const { return budget_ms == 0 || ms < budget_ms; }
};

// The ten acceptance checks. 1-4 are formula-internal identities; 5-9
// compare the formula route against the representation-theoretic oracle
// on pinned parameter grids; 10 reruns 5-9 under two primes and three
// seeds each.
CheckResult check_multinomial_consistency();
CheckResult check_verlinde_kostka();
CheckResult check_dimension_formulas();
CheckResult check_alternating_identities();
CheckResult check_oracle_chi(const FusionRun& run);
CheckResult check_oracle_kostka(const FusionRun& run);
CheckResult check_oracle_chbig(const FusionRun& run);
CheckResult check_oracle_chmix(const FusionRun& run);
CheckResult check_oracle_vm_vmmbar(const FusionRun& run);
CheckResult check_robustness(const FusionRun& run);

// suite is one of "identities" (checks 1-4), "oracle-small" (one quick
// case per oracle family), "oracle-full" (checks 5-10). Unknown names
// throw ParamError.
std::vector<CheckResult> run_suite(const std::string& suite, const FusionRun& run);

}  // namespace fchar
