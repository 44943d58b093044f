#include "bcjack/root_data.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bcjack {

BCRootSystem::BCRootSystem(int rank_in) : rank(rank_in) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  const auto unit = [&](int i, int value) {
    std::vector<int> v(static_cast<std::size_t>(rank), 0);
    v[static_cast<std::size_t>(i)] = value;
    return v;
  };
  for (int i = 0; i < rank; ++i)
    positive_roots.push_back({unit(i, 1), RootLength::kShort});
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) {
      auto diff = unit(i, 1);
      diff[static_cast<std::size_t>(j)] = -1;
      positive_roots.push_back({std::move(diff), RootLength::kMedium});
      auto sum = unit(i, 1);
      sum[static_cast<std::size_t>(j)] = 1;
      positive_roots.push_back({std::move(sum), RootLength::kMedium});
    }
  for (int i = 0; i < rank; ++i)
    positive_roots.push_back({unit(i, 2), RootLength::kLong});
}

const Rational& MultiplicityVector::for_length(RootLength length) const {
  switch (length) {
    case RootLength::kShort:
      return p1;
    case RootLength::kMedium:
      return p2;
    case RootLength::kLong:
      return p3;
  }
  throw std::logic_error("bad root length");
}

MultiplicityVector half_multiplicities(int m, int n) {
  if (n < 1 || m < n) throw std::invalid_argument("need m >= n >= 1");
  return {Rational(m - n), Rational(1), Rational(1, 2)};
}

std::vector<Rational> rho_vector(const MultiplicityVector& p, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  std::vector<Rational> rho(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i)
    rho[static_cast<std::size_t>(i)] =
        p.p1 / 2 + p.p3 + p.p2 * Rational(rank - 1 - i);
  return rho;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  Rational acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

bool is_bc_dominant(const Weight& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) return false;
  return w.empty() || w.back() >= 0;
}

bool is_gl_dominant(const Weight& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) return false;
  return true;
}

bool dominance_le(const Weight& nu, const Weight& mu) {
  if (nu.size() != mu.size()) throw std::invalid_argument("length mismatch");
  if (!is_bc_dominant(nu) || !is_bc_dominant(mu))
    throw std::invalid_argument("dominance order needs dominant weights");
  long snu = 0, smu = 0;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    snu += nu[i];
    smu += mu[i];
    if (snu > smu) return false;
  }
  return true;
}

namespace {

void enumerate_cone(const std::vector<long>& mu_sums, std::size_t pos,
                    long prev, long used, Weight& current,
                    std::vector<Weight>& out) {
  if (pos == mu_sums.size()) {
    out.push_back(current);
    return;
  }
  const long cap = std::min<long>(prev, mu_sums[pos] - used);
  for (long v = cap; v >= 0; --v) {
    current[pos] = static_cast<int>(v);
    enumerate_cone(mu_sums, pos + 1, v, used + v, current, out);
  }
  current[pos] = 0;
}

}  // namespace

std::vector<Weight> lower_cone(const Weight& mu) {
  if (!is_bc_dominant(mu))
    throw std::invalid_argument("lower_cone needs a dominant weight");
  std::vector<long> sums(mu.size());
  long acc = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    acc += mu[i];
    sums[i] = acc;
  }
  std::vector<Weight> cone;
  Weight current(mu.size(), 0);
  enumerate_cone(sums, 0, mu.empty() ? 0 : mu[0], 0, current, cone);
  // Descending by degree then lex: a linear extension of dominance, so each
  // weight follows everything strictly above it.
  std::sort(cone.begin(), cone.end(), [](const Weight& a, const Weight& b) {
    const long da = std::accumulate(a.begin(), a.end(), 0L);
    const long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da > db;
    return a > b;
  });
  return cone;
}

WeylElement WeylElement::identity(int rank) {
  WeylElement w;
  w.perm.resize(static_cast<std::size_t>(rank));
  std::iota(w.perm.begin(), w.perm.end(), 0);
  w.sign.assign(static_cast<std::size_t>(rank), 1);
  return w;
}

WeylElement compose(const WeylElement& second, const WeylElement& first) {
  if (second.perm.size() != first.perm.size())
    throw std::invalid_argument("rank mismatch");
  WeylElement out;
  const std::size_t n = first.perm.size();
  out.perm.resize(n);
  out.sign.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto mid = static_cast<std::size_t>(first.perm[i]);
    out.perm[i] = second.perm[mid];
    out.sign[i] = first.sign[i] * second.sign[mid];
  }
  return out;
}

std::vector<WeylElement> weyl_generators(int rank) {
  std::vector<WeylElement> gens;
  for (int i = 0; i + 1 < rank; ++i) {
    WeylElement t = WeylElement::identity(rank);
    std::swap(t.perm[static_cast<std::size_t>(i)],
              t.perm[static_cast<std::size_t>(i + 1)]);
    gens.push_back(std::move(t));
  }
  WeylElement flip = WeylElement::identity(rank);
  flip.sign.back() = -1;
  gens.push_back(std::move(flip));
  return gens;
}

Weight weyl_apply(const WeylElement& w, const Weight& e) {
  if (w.perm.size() != e.size()) throw std::invalid_argument("rank mismatch");
  Weight out(e.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    out[static_cast<std::size_t>(w.perm[i])] = w.sign[i] * e[i];
  return out;
}

LaurentPoly weyl_act(const LaurentPoly& f, const WeylElement& w) {
  LaurentPoly out(f.vars());
  for (const auto& [e, c] : f.terms()) out.add_term(weyl_apply(w, e), c);
  return out;
}

std::vector<Weight> weyl_orbit(const Weight& lambda) {
  if (!is_bc_dominant(lambda))
    throw std::invalid_argument("orbit needs a dominant weight");
  std::set<Weight> seen;
  Weight perm = lambda;
  std::sort(perm.begin(), perm.end());
  do {
    // All sign choices on nonzero entries.
    std::vector<std::size_t> nonzero;
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (perm[i] != 0) nonzero.push_back(i);
    const std::size_t count = std::size_t{1} << nonzero.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
      Weight v = perm;
      for (std::size_t b = 0; b < nonzero.size(); ++b)
        if (mask >> b & 1) v[nonzero[b]] = -v[nonzero[b]];
      seen.insert(std::move(v));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {seen.begin(), seen.end()};
}

LaurentPoly orbit_sum(const Weight& lambda) {
  LaurentPoly sum(static_cast<int>(lambda.size()));
  for (const auto& nu : weyl_orbit(lambda)) {
    Exponent e(nu.size());
    for (std::size_t i = 0; i < nu.size(); ++i) e[i] = 2 * nu[i];
    sum.add_term(e, Rational(1));
  }
  return sum;
}

namespace {

LaurentPoly sinh_poly(int vars, const std::vector<int>& alpha) {
  Exponent plus(alpha.begin(), alpha.end());
  Exponent minus(alpha.size());
  for (std::size_t i = 0; i < minus.size(); ++i) minus[i] = -alpha[i];
  LaurentPoly p = LaurentPoly::monomial(vars, plus, Rational(1, 2));
  p.add_term(minus, Rational(-1, 2));
  return p;
}

long integral_multiplicity(const Rational& value, const char* what) {
  if (!is_integer(value))
    throw std::invalid_argument(std::string(what) + " must be integral");
  return to_long(value);
}

}  // namespace

LaurentPoly weyl_denominator(const MultiplicityVector& kappa, int rank) {
  const long k1 = integral_multiplicity(kappa.p1, "kappa");
  const long k2 = integral_multiplicity(kappa.p2, "kappa");
  const long k3 = integral_multiplicity(kappa.p3, "kappa");
  if (k1 < 0 || k2 < 0 || k3 < 0)
    throw std::invalid_argument("sinh powers must be nonnegative");
  const BCRootSystem roots(rank);
  LaurentPoly out = LaurentPoly::constant(rank, Rational(1));
  for (const auto& root : roots.positive_roots) {
    const long power = root.length == RootLength::kShort ? k1
                       : root.length == RootLength::kMedium ? k2
                                                            : k3;
    if (power == 0) continue;
    const LaurentPoly factor = sinh_poly(rank, root.alpha);
    for (long k = 0; k < power; ++k) out = out * factor;
  }
  return out;
}

namespace {

int permutation_sign(std::vector<int> perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    while (perm[i] != static_cast<int>(i)) {
      std::swap(perm[i], perm[static_cast<std::size_t>(perm[i])]);
      sign = -sign;
    }
  }
  return sign;
}

}  // namespace

int weyl_sign_character(const WeylElement& w,
                        const MultiplicityVector& kappa) {
  const long k1 = integral_multiplicity(kappa.p1, "kappa");
  const long k2 = integral_multiplicity(kappa.p2, "kappa");
  const long k3 = integral_multiplicity(kappa.p3, "kappa");
  const int sgn_perm = permutation_sign(w.perm);
  int det = sgn_perm;
  for (int s : w.sign) det *= s;
  int chi = 1;
  if ((k1 + k3) % 2 != 0) chi *= det;
  if ((k1 + k2 + k3) % 2 != 0) chi *= sgn_perm;
  return chi;
}

}  // namespace bcjack
