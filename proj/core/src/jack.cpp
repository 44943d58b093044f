#include "bcjack/jack.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "bcjack/parallel.hpp"

namespace bcjack {

const Rational& JackPolynomial::coeff(const Weight& nu) const {
  const auto it = std::find(cone.begin(), cone.end(), nu);
  if (it == cone.end()) throw std::invalid_argument("weight not in cone");
  return coeffs[static_cast<std::size_t>(it - cone.begin())];
}

LaurentPoly JackPolynomial::to_laurent() const {
  LaurentPoly out(rank);
  for (std::size_t i = 0; i < cone.size(); ++i) {
    if (coeffs[i] == 0) continue;
    out += orbit_sum(cone[i]).scaled(coeffs[i]);
  }
  return out;
}

JackPolynomial jack_polynomial(const Weight& mu, const MultiplicityVector& r,
                               unsigned jobs) {
  const OperatorMatrix matrix = operator_matrix(mu, r, jobs);
  const std::size_t size = matrix.cone.size();

  JackPolynomial jack;
  jack.rank = matrix.rank;
  jack.mu = mu;
  jack.r = r;
  jack.cone = matrix.cone;
  jack.coeffs.assign(size, Rational(0));
  jack.eigenvalue = matrix.diag.empty() ? Rational(0) : matrix.diag[0];

  // Cone order descends from mu, so back-substitution is a forward sweep:
  // (E_mu - E_nu) c_nu = sum_{kappa > nu} c_kappa a_{kappa nu}.
  jack.coeffs[0] = 1;
  for (std::size_t col = 1; col < size; ++col) {
    Rational sum(0);
    for (const auto& entry : matrix.off_diag)
      if (entry.col == col) sum += jack.coeffs[entry.row] * entry.value;
    if (sum == 0) {
      jack.coeffs[col] = 0;
      continue;
    }
    const Rational gap = jack.eigenvalue - matrix.diag[col];
    if (gap == 0) throw EigenvalueCollision(matrix.cone[col]);
    jack.coeffs[col] = sum / gap;
  }
  return jack;
}

LaurentPoly spherical_restriction(const Weight& mu, const TwistParams& p,
                                  unsigned jobs) {
  const MultiplicityVector kappa = kappa_of(p);
  if (!check_restrk(kappa))
    throw std::invalid_argument("twist parameters violate admissibility");
  // Admissible twists allow a negative short-root power: that factor divides
  // the rest of the product exactly, so split the sinh powers by sign and
  // divide instead of refusing.
  const auto clip = [](const Rational& q) { return q > 0 ? q : Rational(0); };
  const MultiplicityVector grow{clip(kappa.p1), clip(kappa.p2), clip(kappa.p3)};
  const MultiplicityVector shrink{clip(-kappa.p1), clip(-kappa.p2),
                                  clip(-kappa.p3)};
  const JackPolynomial jack = jack_polynomial(mu, jack_multiplicities(p), jobs);
  const LaurentPoly scaled = weyl_denominator(grow, p.n) * jack.to_laurent();
  return exact_div(scaled, weyl_denominator(shrink, p.n));
}

namespace {

struct FlatTerm {
  Exponent e;
  double c;
};

std::vector<FlatTerm> flatten(const LaurentPoly& f) {
  std::vector<FlatTerm> terms;
  terms.reserve(f.term_count());
  for (const auto& [e, c] : f.terms()) terms.push_back({e, to_double(c)});
  return terms;
}

// Evaluates at u = e^{iy} via a per-point power table.
std::complex<double> eval_flat(const std::vector<FlatTerm>& terms,
                               const std::vector<std::complex<double>>& powers,
                               int max_abs, std::size_t vars) {
  std::complex<double> acc = 0.0;
  for (const auto& term : terms) {
    std::complex<double> value = term.c;
    for (std::size_t i = 0; i < vars; ++i)
      value *= powers[i * (2 * static_cast<std::size_t>(max_abs) + 1) +
                      static_cast<std::size_t>(term.e[i] + max_abs)];
    acc += value;
  }
  return acc;
}

int max_abs_exponent(const std::vector<FlatTerm>& terms) {
  int max_abs = 0;
  for (const auto& term : terms)
    for (int v : term.e) max_abs = std::max(max_abs, std::abs(v));
  return max_abs;
}

double power_weight(double base, double exponent) {
  if (exponent == 0.0) return 1.0;
  return std::pow(std::abs(base), exponent);
}

}  // namespace

double inner_product_quadrature(const LaurentPoly& f, const LaurentPoly& g,
                                const MultiplicityVector& r, int grid,
                                unsigned jobs) {
  if (f.vars() != g.vars()) throw std::invalid_argument("arity mismatch");
  if (grid < 2) throw std::invalid_argument("grid must be at least 2");
  const auto n = static_cast<std::size_t>(f.vars());
  const double r1 = 2.0 * to_double(r.p1);
  const double r2 = 2.0 * to_double(r.p2);
  const double r3 = 2.0 * to_double(r.p3);
  if (r.p1 < 0 || r.p2 < 0 || r.p3 <= 0)
    throw std::invalid_argument("quadrature weight needs r1, r2 >= 0, r3 > 0");

  const auto ft = flatten(f);
  const auto gt = flatten(g);
  const int max_abs = std::max(max_abs_exponent(ft), max_abs_exponent(gt));
  const auto steps = static_cast<std::size_t>(grid);
  const double h = std::acos(-1.0) / static_cast<double>(steps);

  // The integrand is pi-periodic in every coordinate (even exponents, squared
  // sine weights), so the trapezoidal rule collapses to a uniform sum over
  // the half-open grid. Outer slices run in parallel and are reduced in
  // fixed order.
  std::size_t outer_count = 1;
  const std::size_t inner_dims = n > 0 ? n - 1 : 0;
  std::size_t inner_count = 1;
  for (std::size_t i = 0; i < inner_dims; ++i) inner_count *= steps;
  outer_count = n > 0 ? steps : 1;

  std::vector<double> slice_sums(outer_count, 0.0);
  parallel_for(outer_count, jobs, [&](std::size_t slice) {
    std::vector<double> y(n);
    std::vector<std::complex<double>> powers(n * (2 * static_cast<std::size_t>(
                                                          max_abs) +
                                                  1));
    double acc = 0.0;
    for (std::size_t flat = 0; flat < inner_count; ++flat) {
      std::size_t rem = flat;
      y[0] = static_cast<double>(slice) * h;
      for (std::size_t i = 1; i < n; ++i) {
        y[i] = static_cast<double>(rem % steps) * h;
        rem /= steps;
      }
      double weight = 1.0;
      for (std::size_t i = 0; i < n; ++i) {
        weight *= power_weight(std::sin(y[i]), r1);
        weight *= power_weight(std::sin(2.0 * y[i]), r3);
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          weight *= power_weight(std::sin(y[i] - y[j]) * std::sin(y[i] + y[j]),
                                 r2);
      if (weight != 0.0) {
        for (std::size_t i = 0; i < n; ++i) {
          const std::size_t base = i * (2 * static_cast<std::size_t>(max_abs) +
                                        1);
          for (int k = -max_abs; k <= max_abs; ++k)
            powers[base + static_cast<std::size_t>(k + max_abs)] =
                std::polar(1.0, static_cast<double>(k) * y[i]);
        }
        const std::complex<double> fv = eval_flat(ft, powers, max_abs, n);
        const std::complex<double> gv = eval_flat(gt, powers, max_abs, n);
        acc += weight * (fv * std::conj(gv)).real();
      }
    }
    slice_sums[slice] = acc;
  });

  double total = 0.0;
  for (double s : slice_sums) total += s;
  double cell = 1.0;
  for (std::size_t i = 0; i < n; ++i) cell *= h;
  return total * cell;
}

}  // namespace bcjack
