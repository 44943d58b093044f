#pragma once

#include "bcjack/root_data.hpp"

namespace bcjack {

// Integer parameters (k1, k2, kt1, kv) of the twisted symmetric pair built
// on GL(m+n) x GL(m) x GL(n) with m >= n >= 1: determinant powers k1, k2 on
// the two unitary factors, the auxiliary determinant power kt1, and the
// symmetric-power degree kv.
struct TwistParams {
  int m = 1;
  int n = 1;
  long k1 = 0;
  long k2 = 0;
  long kt1 = 0;
  long kv = 0;

  friend bool operator==(const TwistParams&, const TwistParams&) = default;
};

// kappa = (k2 - k1, kv, kt1 - k2); independent of m and n.
MultiplicityVector kappa_of(const TwistParams& p);

// Admissibility: kappa3 >= kappa1 + kappa3 >= 0, i.e. k1 >= k2 and
// kt1 >= k1.
bool check_restrk(const MultiplicityVector& kappa);

// kappa_of(p) + half_multiplicities(m, n): the multiplicity point at which
// the twisted spherical functions live.
MultiplicityVector jack_multiplicities(const TwistParams& p);

}  // namespace bcjack
