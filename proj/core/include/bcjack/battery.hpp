#pragma once

#include <string>
#include <vector>

namespace bcjack {

// One named block of a verification suite. `checks` counts the elementary
// comparisons behind the verdict; `detail` carries summary statistics on
// success and the first counterexample on failure.
struct CheckResult {
  std::string name;
  bool pass = true;
  long checks = 0;
  std::string detail;
};

// Operator identities: dual-path agreement of the two coth evaluations,
// triangularity with the closed-form diagonal, the eigen-relation of the
// computed Jack polynomials, and the sinh-product sign character.
std::vector<CheckResult> battery_operator(unsigned jobs);

// Branching combinatorics: closed-form membership and sphericality criteria
// against brute-force tableau counts, chain uniqueness, dimension
// conservation and shift invariance.
std::vector<CheckResult> battery_lr(unsigned jobs);

// Finite-difference verification of the radial Casimir identities and the
// exact Harish-Chandra eigenvalue formulas.
std::vector<CheckResult> battery_radial(unsigned jobs);

// Quadrature orthogonality of the Jack family.
std::vector<CheckResult> battery_ortho(unsigned jobs);

// suite is one of "operator", "lr", "radial", "ortho", "all"; throws
// std::invalid_argument otherwise.
std::vector<CheckResult> run_battery(const std::string& suite, unsigned jobs);

}  // namespace bcjack
