// Acceptance battery: runs every criterion at its pinned size and tolerance
// and prints one pass/fail line per criterion. Exits nonzero on any failure.

#include <cstdio>

#include "core/selftest.hpp"

int main() {
  const auto results = pmx::run_selftest(1);
  bool all_pass = true;
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    std::printf("criterion %-32s %s  (%lld cases, %lld ms)%s%s\n", r.name.c_str(),
                r.pass ? "PASS" : "FAIL", static_cast<long long>(r.cases),
                static_cast<long long>(r.millis), r.pass ? "" : "  -- ",
                r.pass ? "" : r.detail.c_str());
  }
  std::printf("acceptance: %s\n", all_pass ? "all criteria passed" : "FAILURES PRESENT");
  return all_pass ? 0 : 1;
}
