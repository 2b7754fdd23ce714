// Acceptance gate: runs the ten top-level checks and prints one verdict
// line each. A check fails if any case disagrees or if it overruns its
// time budget.

#include <cstdio>
#include <vector>

#include "fchar/verify.hpp"

int main() {
  using namespace fchar;
  FusionRun run;

  std::vector<CheckResult> results;
  results.push_back(check_multinomial_consistency());
  results.push_back(check_verlinde_kostka());
  results.push_back(check_dimension_formulas());
  results.push_back(check_alternating_identities());
  results.push_back(check_oracle_chi(run));
  results.push_back(check_oracle_kostka(run));
  results.push_back(check_oracle_chbig(run));
  results.push_back(check_oracle_chmix(run));
  results.push_back(check_oracle_vm_vmmbar(run));
  results.push_back(check_robustness(run));

  bool all = true;
  for (size_t i = 0; i < results.size(); ++i) {
    const CheckResult& r = results[i];
    std::printf("%s criterion %zu: %s (%lld cases, %lld ms", r.pass ? "PASS" : "FAIL", i + 1,
                r.name.c_str(), (long long)r.cases, (long long)r.ms);
    if (r.budget_ms > 0) std::printf(", budget %lld ms", (long long)r.budget_ms);
    std::printf(")\n");
    if (!r.pass && !r.detail.empty()) std::printf("     %s\n", r.detail.c_str());
    all = all && r.pass;
  }
  std::printf("%s\n", all ? "acceptance: all criteria met" : "acceptance: FAILURES");
  return all ? 0 : 1;
}
