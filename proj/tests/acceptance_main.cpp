// Acceptance gate: runs every criterion and prints one pass/fail line each.
#include <cstdio>
#include <string>

#include "brauer/acceptance.hpp"

int main() {
  brauer::AcceptanceResult res = brauer::run_acceptance_suite(BRAUER_DATA_DIR);

  // one line per criterion, with wall time
  for (const auto& [name, secs] : res.timings) {
    bool pass = false;
    for (const auto& e : res.report.entries())
      if (e.check == "criterion/" + name) pass = e.pass;
    std::printf("%s  %-18s (%.2f s)\n", pass ? "PASS" : "FAIL", name.c_str(), secs);
  }
  // surface the failing sub-checks, if any
  for (const auto& e : res.report.entries())
    if (!e.pass && e.check.rfind("criterion/", 0) != 0)
      std::printf("  fail: %s: %s\n", e.check.c_str(), e.detail.c_str());

  bool ok = res.report.ok();
  std::printf("%s\n", ok ? "acceptance: all criteria pass" : "acceptance: FAILURES");
  return ok ? 0 : 1;
}
