#include "bcjack/radial.hpp"

#include <algorithm>
#include <cmath>

namespace bcjack {

namespace {

Real root_value(const std::vector<int>& alpha, const std::vector<Real>& x) {
  Real acc = 0.0L;
  for (std::size_t i = 0; i < alpha.size(); ++i) acc += alpha[i] * x[i];
  return acc;
}

Real sinh2(Real y) {
  const Real s = std::sinh(y);
  return s * s;
}

// Five-point fourth-order stencils: the conjugating sinh powers make the
// integrands steep enough that a second-order stencil at the same step leaves
// visible truncation.
Real laplacian_fd(const ScalarField& f, const std::vector<Real>& x, Real h) {
  const Real center = f(x);
  Real acc = 0.0L;
  std::vector<Real> point = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    point[i] = x[i] + 2.0L * h;
    const Real up2 = f(point);
    point[i] = x[i] + h;
    const Real up1 = f(point);
    point[i] = x[i] - h;
    const Real down1 = f(point);
    point[i] = x[i] - 2.0L * h;
    const Real down2 = f(point);
    point[i] = x[i];
    acc += (-up2 + 16.0L * up1 - 30.0L * center + 16.0L * down1 - down2) /
           (12.0L * h * h);
  }
  return acc;
}

Real partial_fd(const ScalarField& f, std::vector<Real>& point, std::size_t i,
                Real xi, Real h) {
  point[i] = xi + 2.0L * h;
  const Real up2 = f(point);
  point[i] = xi + h;
  const Real up1 = f(point);
  point[i] = xi - h;
  const Real down1 = f(point);
  point[i] = xi - 2.0L * h;
  const Real down2 = f(point);
  point[i] = xi;
  return (-up2 + 8.0L * up1 - 8.0L * down1 + down2) / (12.0L * h);
}

}  // namespace

Real cm_potential(const std::vector<Real>& x, const MultiplicityVector& r) {
  const BCRootSystem roots(static_cast<int>(x.size()));
  const Real r1 = to_double(r.p1);
  const Real r2 = to_double(r.p2);
  const Real r3 = to_double(r.p3);
  Real acc = 0.0L;
  for (const auto& root : roots.positive_roots) {
    Real coeff = 0.0L;
    switch (root.length) {
      case RootLength::kShort:
        // 2 alpha is the long root 2 e_i, so r_{2alpha} = r3.
        coeff = r1 * (r1 + 2.0L * r3 - 1.0L) * 1.0L;
        break;
      case RootLength::kMedium:
        coeff = r2 * (r2 - 1.0L) * 2.0L;
        break;
      case RootLength::kLong:
        coeff = r3 * (r3 - 1.0L) * 4.0L;
        break;
    }
    if (coeff != 0.0L) acc += coeff / sinh2(root_value(root.alpha, x));
  }
  return acc;
}

Real weyl_denominator_value(const std::vector<Real>& x,
                            const MultiplicityVector& r) {
  const BCRootSystem roots(static_cast<int>(x.size()));
  Real acc = 1.0L;
  for (const auto& root : roots.positive_roots) {
    const Real value = std::sinh(root_value(root.alpha, x));
    if (value <= 0.0L)
      throw std::invalid_argument("point must lie in the open chamber");
    acc *= std::pow(value, static_cast<Real>(to_double(r.for_length(root.length))));
  }
  return acc;
}

Real apply_cm_fd(const ScalarField& f, const std::vector<Real>& x,
                 const MultiplicityVector& r, Real h) {
  return laplacian_fd(f, x, h) - cm_potential(x, r) * f(x);
}

Real apply_radial_casimir_fd(const ScalarField& f, const std::vector<Real>& x,
                             const TwistParams& p, Real h) {
  const auto n = x.size();
  if (n != static_cast<std::size_t>(p.n))
    throw std::invalid_argument("point arity mismatch");
  const Real m_minus_n = static_cast<Real>(p.m - p.n);
  const Real k1 = static_cast<Real>(p.k1);
  const Real k2 = static_cast<Real>(p.k2);
  const Real kt1 = static_cast<Real>(p.kt1);
  const Real kv = static_cast<Real>(p.kv);

  Real acc = laplacian_fd(f, x, h);

  std::vector<Real> point = x;
  for (std::size_t i = 0; i < n; ++i) {
    Real drift =
        2.0L * m_minus_n / std::tanh(x[i]) + 2.0L / std::tanh(2.0L * x[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      drift += 2.0L / std::tanh(x[i] - x[j]) + 2.0L / std::tanh(x[i] + x[j]);
    }
    acc += drift * partial_fd(f, point, i, x[i], h);
  }

  const Real center = f(x);
  Real wells = 0.0L;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      wells -= 2.0L * kv * (kv + 1.0L) *
               (1.0L / sinh2(x[i] + x[j]) + 1.0L / sinh2(x[i] - x[j]));
  for (std::size_t i = 0; i < n; ++i) {
    const Real cosh_i = std::cosh(x[i]);
    wells += (k2 - kt1) * (k2 - kt1) / (cosh_i * cosh_i);
    wells -= (kt1 - k1) * (kt1 - k1 + 2.0L * m_minus_n) / sinh2(x[i]);
  }
  wells += (k1 + k2) * (k1 + k2) * static_cast<Real>(p.n);
  wells += 2.0L * m_minus_n * k1 * k1;
  return acc + wells * center;
}

Real conjugated_radial_casimir_fd(const ScalarField& f,
                                  const std::vector<Real>& x,
                                  const TwistParams& p, Real h) {
  const MultiplicityVector r = jack_multiplicities(p);
  const MultiplicityVector s = half_multiplicities(p.m, p.n);
  const ScalarField conjugated = [&](const std::vector<Real>& y) {
    return weyl_denominator_value(y, s) * f(y);
  };
  const Real constant = to_double(cm_constant(p));
  const Real value =
      apply_cm_fd(conjugated, x, r, h) + constant * conjugated(x);
  return value / weyl_denominator_value(x, s);
}

Rational cm_constant(const TwistParams& p) {
  const long mn = p.m + p.n;
  const long d = p.m - p.n;
  Rational c = Rational(mn - mn * mn * mn) / 6;
  c += Rational(d * d * d - d) / 6;
  c += Rational((p.k1 + p.k2) * (p.k1 + p.k2) * p.n);
  c += Rational(2 * d * p.k1 * p.k1);
  return c;
}

Rational radial_casimir_eigenvalue(const Weight& mu, const TwistParams& p) {
  if (mu.size() != static_cast<std::size_t>(p.n))
    throw std::invalid_argument("weight length must be n");
  const auto rho = rho_vector(jack_multiplicities(p), p.n);
  std::vector<Rational> shifted(rho);
  for (std::size_t i = 0; i < rho.size(); ++i) shifted[i] += Rational(mu[i]);
  return dot(shifted, shifted) * 2 + cm_constant(p) / 2;
}

Rational gl_casimir_eigenvalue(const Weight& lambda, int order) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  const auto rank = static_cast<long>(lambda.size());
  Rational acc(0);
  for (long j = 0; j < rank; ++j) {
    const Rational rho_j = Rational(rank - 1 - 2 * j) / 2;
    Rational shifted_pow(1), rho_pow(1);
    const Rational shifted = rho_j + Rational(lambda[static_cast<std::size_t>(j)]);
    for (int k = 0; k < order; ++k) {
      shifted_pow *= shifted;
      rho_pow *= rho_j;
    }
    acc += shifted_pow - rho_pow;
  }
  return acc;
}

std::vector<std::vector<Real>> sample_chamber_points(
    int rank, int count, std::mt19937_64& rng, double min_wall_distance,
    double low, double high) {
  if (rank < 1 || count < 0) throw std::invalid_argument("bad sample request");
  std::uniform_real_distribution<double> dist(low, high);
  std::vector<std::vector<Real>> points;
  points.reserve(static_cast<std::size_t>(count));
  while (points.size() < static_cast<std::size_t>(count)) {
    std::vector<Real> x(static_cast<std::size_t>(rank));
    for (auto& v : x) v = dist(rng);
    std::sort(x.begin(), x.end(), std::greater<>());
    bool ok = x.back() >= min_wall_distance;
    for (std::size_t i = 0; ok && i + 1 < x.size(); ++i)
      ok = x[i] - x[i + 1] >= min_wall_distance;
    if (ok) points.push_back(std::move(x));
  }
  return points;
}

}  // namespace bcjack
