// Acceptance gate: one line per criterion, exit 0 only if every criterion
// holds. Tolerances and family sizes live in the battery implementations.

#include <algorithm>
#include <cstdio>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "bcjack/battery.hpp"

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> checks;  // all must pass
};

}  // namespace

int main() {
  const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  std::map<std::string, bcjack::CheckResult> by_name;
  for (auto& result : bcjack::run_battery("all", jobs))
    by_name.emplace(result.name, std::move(result));

  const std::vector<Criterion> criteria = {
      {1, "operator dual-path exactness", {"operator-dual-path"}},
      {2, "triangularity with closed-form diagonal",
       {"operator-triangular-diagonal"}},
      {3, "jack eigen-relation", {"jack-eigen-relation"}},
      {4, "quadrature orthogonality", {"jack-orthogonality"}},
      {5, "radial form equivalence", {"cm-form-equivalence"}},
      {6, "radial eigenfunction relation", {"cm-eigenfunction"}},
      {7, "branching closed forms vs brute force",
       {"membership-pattern", "spherical-closed-form", "chain-map-image",
        "restriction-chains", "branch-dimension-conservation"}},
      {8, "sinh-product equivariance", {"weyl-denominator-equivariance"}},
      {9, "casimir eigenvalue identities", {"casimir-identities"}},
  };

  bool all_pass = true;
  for (const auto& criterion : criteria) {
    bool pass = true;
    long checks = 0;
    std::string detail;
    for (const auto& name : criterion.checks) {
      const auto it = by_name.find(name);
      if (it == by_name.end()) {
        pass = false;
        detail = "missing check " + name;
        continue;
      }
      checks += it->second.checks;
      if (!it->second.pass) {
        pass = false;
        if (!detail.empty()) detail += " | ";
        detail += name + ": " + it->second.detail;
      }
    }
    if (pass && criterion.checks.size() == 1)
      detail = by_name.at(criterion.checks.front()).detail;
    std::printf("CRITERION %d [%s]: %s  (%ld checks)%s%s\n", criterion.number,
                criterion.title.c_str(), pass ? "PASS" : "FAIL", checks,
                detail.empty() ? "" : "  ", detail.c_str());
    all_pass = all_pass && pass;
  }
  std::printf("ACCEPTANCE: %s\n", all_pass ? "PASS" : "FAIL");
  return all_pass ? 0 : 1;
}
