// Frozen end-to-end checks: one PASS/FAIL line per area, exit 1 on any FAIL.

#include "rbd/verify.hpp"

#include <cstdio>

int main() {
  bool ok = true;
  for (const rbd::CheckResult& r : rbd::acceptance_checks()) {
    if (r.pass) {
      std::printf("PASS  %s\n", r.name.c_str());
    } else {
      ok = false;
      std::printf("FAIL  %s: %s\n", r.name.c_str(), r.detail.c_str());
    }
  }
  std::printf("%s\n", rbd::exploratory_report().c_str());
  return ok ? 0 : 1;
}
