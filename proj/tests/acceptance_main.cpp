// Acceptance gate: one line per criterion, fixed configuration, exit 1 on
// any failure. The quadrature criterion additionally has to finish inside
// its time budget at the full sample count.

#include "tregular/verify.hpp"

#include <cstdio>
#include <string>

int main() {
  using namespace tregular;
  VerifyConfig cfg;  // seed 42, 200000 samples, 4 sigma, 10000 grid points

  bool all_pass = true;
  double total = 0;
  for (int id = 1; id <= 11; ++id) {
    const CriterionResult r = run_criterion(id, cfg);
    total += r.seconds;
    bool pass = r.pass();
    std::string note;
    if (id == 9 && r.seconds >= 180.0) {
      pass = false;
      note = ", over the 180s budget";
    }
    std::printf("[%s] criterion %2d %-22s (%zu checks, %.1fs%s)\n", pass ? "PASS" : "FAIL", r.id,
                r.title.c_str(), r.checks.size(), r.seconds, note.c_str());
    for (const auto& c : r.checks)
      if (!c.pass) std::printf("       failed: %s%s%s\n", c.name.c_str(), c.detail.empty() ? "" : " -- ",
                               c.detail.c_str());
    all_pass = all_pass && pass;
  }
  std::printf("%s in %.1fs\n", all_pass ? "acceptance: all criteria pass" : "acceptance: FAILURES", total);
  return all_pass ? 0 : 1;
}
