#pragma once

#include <vector>

#include "bcjack/rational.hpp"
#include "bcjack/root_data.hpp"
#include "bcjack/twist_params.hpp"

namespace bcjack {

// Partitions are weakly decreasing nonnegative integer vectors; helpers
// treat trailing zeros as absent.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
Partition trim_partition(Partition p);

// Prefix condition: every prefix of the word contains at least as many
// symbols s as symbols s + 1.
bool is_lattice_word(const std::vector<int>& word);

// Semistandard filling of the skew shape outer/inner recorded row by row
// (skew cells only, left to right).
struct LRTableau {
  Partition outer;
  Partition inner;
  std::vector<std::vector<int>> rows;

  // Multiset of symbols per row index of the outer shape, starting at row 0.
  std::vector<int> row_content(std::size_t row, int symbol_count) const;
};

// Littlewood-Richardson tableaux of shape lambda/mu and weight nu: rows
// weakly increase, columns strictly increase, and the right-to-left,
// top-to-bottom reading word is a lattice word.
std::vector<LRTableau> lr_tableaux(const Partition& lambda,
                                   const Partition& mu, const Partition& nu);

// c^lambda_{mu nu}: the number of such tableaux; 0 whenever the shapes or
// sizes are incompatible.
long lr_coefficient(const Partition& lambda, const Partition& mu,
                    const Partition& nu);

// Integer weight vectors are shifted by a common ell * (1, ..., 1), minimal
// ell making all three partitions, then delegated to lr_coefficient. The
// shift leaves GL branching multiplicities unchanged when
// len(lambda) == len(mu) + len(nu), which is required if a shift is needed.
long lr_coefficient_shifted(const Weight& lambda, const Weight& mu,
                            const Weight& nu);

// One summand of a GL(m+n) restriction to GL(m) x GL(n).
struct BranchTerm {
  Weight zeta;  // length m
  Weight tau;   // length n
  long mult = 0;
};

// Full decomposition of L_lambda restricted to the block Levi subgroup:
// every (zeta, tau) with positive coefficient.
std::vector<BranchTerm> branch_to_levi(const Weight& lambda, int m, int n);

// GL(m) to GL(m-1): all interlacing weights, each of multiplicity one.
std::vector<Weight> interlace_branch(const Weight& lambda);

// Weyl dimension formula for GL(len(lambda)).
Integer gl_dimension(const Weight& lambda);

// Highest weight of the GL(m) twist factor: kt1 on the first n entries,
// k1 on the remaining m - n.
Weight gl_twist_weight(const TwistParams& p);

// Highest weight of the GL(n) factor carrying the symmetric power: entry
// (k1 + k2 - kt1) + (n - 1) kv followed by n - 1 entries
// (k1 + k2 - kt1) - kv.
Weight symmetric_twist_weight(const TwistParams& p);

// Whether the restriction of L_lambda to GL(m) x GL(n) contains
// det^{k1} (x) det^{k2}; closed form: lambda_j + lambda_{m+n+1-j} = k1 + k2
// for j <= n, lambda_{n+j} = k1 for j <= m - n, and lambda_n >= k1.
bool contains_det_pair(const Weight& lambda, long k1, long k2, int m, int n);

// Brute-force multiplicity of the twist representation in the restriction of
// L_lambda, as an LR coefficient against the two twist weights.
long spherical_multiplicity(const Weight& lambda, const TwistParams& p);

// Closed-form test equivalent to spherical_multiplicity == 1 together with
// contains_det_pair: pair sums, the middle block, lambda_n >= kt1 and
// lambda_i - lambda_{i+1} >= kv for i < n.
bool is_spherical_closed_form(const Weight& lambda, const TwistParams& p);

// GL(m+n) weight (nu_1 + khat, ..., nu_n + khat, k1, ..., k1,
// khat - nu_n, ..., khat - nu_1) with khat = (k1 + k2)/2; every entry must
// come out integral.
Weight to_gl_weight(const std::vector<Rational>& nu, const TwistParams& p);

}  // namespace bcjack
