#include "bcjack/ho_operator.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <tuple>

#include "bcjack/parallel.hpp"

namespace bcjack {

namespace {

LaurentPoly laplacian(const LaurentPoly& f) {
  LaurentPoly out(f.vars());
  for (const auto& [e, c] : f.terms()) {
    long norm2 = 0;
    for (int v : e) norm2 += static_cast<long>(v) * v;
    if (norm2 != 0) out.add_term(e, c * Rational(norm2));
  }
  return out;
}

void check_even_invariant(const LaurentPoly& f) {
  for (const auto& [e, c] : f.terms())
    for (int v : e)
      if (v % 2 != 0)
        throw std::invalid_argument("operator input must live in the even "
                                    "exponent lattice");
  for (const auto& gen : weyl_generators(f.vars()))
    if (!(weyl_act(f, gen) == f))
      throw std::invalid_argument("operator input must be Weyl invariant");
}

// u^{2 alpha} - 1.
LaurentPoly root_binomial(int vars, const std::vector<int>& alpha) {
  Exponent e(alpha.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = 2 * alpha[i];
  LaurentPoly p = LaurentPoly::monomial(vars, e, Rational(1));
  p.add_term(Exponent(e.size(), 0), Rational(-1));
  return p;
}

// Membership of e in the convex hull of the hyperoctahedral orbit of bound
// (bound sorted weakly decreasing, nonnegative): the decreasing rearrangement
// of |e| is dominated by bound in partial sums.
bool inside_orbit_hull(const Exponent& e, const std::vector<long>& bound_sums) {
  std::vector<long> abs(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) abs[i] = std::abs(long{e[i]});
  std::sort(abs.begin(), abs.end(), std::greater<>());
  long acc = 0;
  for (std::size_t i = 0; i < abs.size(); ++i) {
    acc += abs[i];
    if (acc > bound_sums[i]) return false;
  }
  return true;
}

}  // namespace

LaurentPoly apply_sutherland(const LaurentPoly& f,
                             const MultiplicityVector& r) {
  check_even_invariant(f);
  const int n = f.vars();
  const BCRootSystem roots(n);
  const std::size_t count = roots.positive_roots.size();

  std::vector<LaurentPoly> binomials;
  binomials.reserve(count);
  for (const auto& root : roots.positive_roots)
    binomials.push_back(root_binomial(n, root.alpha));

  // prefix[i] = prod_{j < i} B_j, suffix[i] = prod_{j >= i} B_j, so the
  // cofactor of root i is prefix[i] * suffix[i + 1].
  std::vector<LaurentPoly> prefix(count + 1, LaurentPoly::constant(n, 1));
  for (std::size_t i = 0; i < count; ++i)
    prefix[i + 1] = prefix[i] * binomials[i];
  std::vector<LaurentPoly> suffix(count + 1, LaurentPoly::constant(n, 1));
  for (std::size_t i = count; i-- > 0;)
    suffix[i] = binomials[i] * suffix[i + 1];
  const LaurentPoly& denominator = prefix[count];

  LaurentPoly numerator = laplacian(f) * denominator;
  for (std::size_t i = 0; i < count; ++i) {
    const auto& root = roots.positive_roots[i];
    const Rational& r_alpha = r.for_length(root.length);
    if (r_alpha == 0) continue;
    LaurentPoly deriv = f.directional_derivative(root.alpha);
    if (deriv.is_zero()) continue;
    // 2 r_alpha (u^{2 alpha} + 1) d_alpha f * cofactor.
    LaurentPoly coth_num = root_binomial(n, root.alpha);
    coth_num.add_term(Exponent(static_cast<std::size_t>(n), 0), Rational(2));
    numerator += deriv.scaled(r_alpha * 2) * coth_num *
                 (prefix[i] * suffix[i + 1]);
  }
  return exact_div(numerator, denominator);
}

LaurentPoly apply_sutherland_series(const LaurentPoly& f,
                                    const MultiplicityVector& r,
                                    const Weight& support_bound) {
  check_even_invariant(f);
  if (!is_bc_dominant(support_bound))
    throw std::invalid_argument("support bound must be dominant");
  if (static_cast<int>(support_bound.size()) != f.vars())
    throw std::invalid_argument("support bound arity mismatch");

  std::vector<long> bound_sums(support_bound.size());
  long acc = 0;
  for (std::size_t i = 0; i < support_bound.size(); ++i) {
    acc += 2L * support_bound[i];
    bound_sums[i] = acc;
  }
  for (const auto& [e, c] : f.terms())
    if (!inside_orbit_hull(e, bound_sums))
      throw std::invalid_argument("input support exceeds the stated bound");

  const int n = f.vars();
  LaurentPoly out = laplacian(f);
  for (const auto& root : BCRootSystem(n).positive_roots) {
    const Rational& r_alpha = r.for_length(root.length);
    if (r_alpha == 0) continue;
    const LaurentPoly deriv = f.directional_derivative(root.alpha);
    out += deriv.scaled(r_alpha * 2);
    const Rational tail_coeff = r_alpha * 4;
    for (const auto& [e, c] : deriv.terms()) {
      Exponent q = e;
      for (;;) {
        for (std::size_t i = 0; i < q.size(); ++i)
          q[i] -= 2 * root.alpha[i];
        if (!inside_orbit_hull(q, bound_sums)) break;
        out.add_term(q, c * tail_coeff);
      }
    }
  }
  return out;
}

Rational sutherland_eigenvalue(const Weight& mu, const MultiplicityVector& r) {
  if (!is_bc_dominant(mu))
    throw std::invalid_argument("eigenvalue needs a dominant weight");
  const auto rho = rho_vector(r, static_cast<int>(mu.size()));
  std::vector<Rational> shifted(rho);
  for (std::size_t i = 0; i < rho.size(); ++i) shifted[i] += Rational(mu[i]);
  return (dot(shifted, shifted) - dot(rho, rho)) * 4;
}

std::map<Weight, Rational> orbit_decompose(const LaurentPoly& f) {
  for (const auto& [e, c] : f.terms())
    for (int v : e)
      if (v % 2 != 0)
        throw std::invalid_argument("not in the even exponent lattice");

  std::map<Weight, Rational> parts;
  LaurentPoly rest = f;
  while (!rest.is_zero()) {
    // Highest remaining orbit: maximal (degree, lex) among dominant
    // representatives of the support.
    bool found = false;
    Weight best;
    long best_sum = 0;
    for (const auto& [e, c] : rest.terms()) {
      Weight rep(e.size());
      for (std::size_t i = 0; i < e.size(); ++i)
        rep[i] = std::abs(e[i]) / 2;
      std::sort(rep.begin(), rep.end(), std::greater<>());
      const long sum = std::accumulate(rep.begin(), rep.end(), 0L);
      if (!found || sum > best_sum || (sum == best_sum && rep > best)) {
        best = std::move(rep);
        best_sum = sum;
        found = true;
      }
    }
    Exponent dom(best.size());
    for (std::size_t i = 0; i < best.size(); ++i) dom[i] = 2 * best[i];
    const Rational c = rest.coeff(dom);
    if (c == 0)
      throw std::invalid_argument("not Weyl invariant: orbit of highest "
                                  "support weight lacks its dominant term");
    rest -= orbit_sum(best).scaled(c);
    // Any residue left in this orbit means mismatched coefficients; it will
    // surface as a missing dominant term on a later pass.
    parts.emplace(std::move(best), c);
  }
  return parts;
}

std::size_t OperatorMatrix::index_of(const Weight& nu) const {
  const auto it = std::find(cone.begin(), cone.end(), nu);
  if (it == cone.end()) throw std::invalid_argument("weight not in cone");
  return static_cast<std::size_t>(it - cone.begin());
}

OperatorMatrix operator_matrix(const Weight& mu, const MultiplicityVector& r,
                               unsigned jobs) {
  OperatorMatrix matrix;
  matrix.rank = static_cast<int>(mu.size());
  matrix.mu = mu;
  matrix.r = r;
  matrix.cone = lower_cone(mu);

  const std::size_t size = matrix.cone.size();
  std::vector<std::map<Weight, Rational>> rows(size);
  parallel_for(size, jobs, [&](std::size_t i) {
    rows[i] = orbit_decompose(apply_sutherland(orbit_sum(matrix.cone[i]), r));
  });

  matrix.diag.resize(size);
  for (std::size_t i = 0; i < size; ++i) {
    const Weight& nu = matrix.cone[i];
    auto& row = rows[i];
    const auto self = row.find(nu);
    matrix.diag[i] = self == row.end() ? Rational(0) : self->second;
    if (self != row.end()) row.erase(self);
    const Rational expected = sutherland_eigenvalue(nu, r);
    if (matrix.diag[i] != expected)
      throw TriangularityViolation("diagonal entry differs from the "
                                   "closed-form eigenvalue");
    for (const auto& [kappa, value] : row) {
      if (!dominance_le(kappa, nu) || kappa == nu)
        throw TriangularityViolation("operator image left the lower cone");
      matrix.off_diag.push_back(
          {i, matrix.index_of(kappa), value});
    }
  }
  std::sort(matrix.off_diag.begin(), matrix.off_diag.end(),
            [](const OperatorMatrix::Entry& a, const OperatorMatrix::Entry& b) {
              return std::tie(a.row, a.col) < std::tie(b.row, b.col);
            });
  return matrix;
}

}  // namespace bcjack
