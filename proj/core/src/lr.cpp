#include "bcjack/lr.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

namespace bcjack {

MultiplicityVector kappa_of(const TwistParams& p) {
  return {Rational(p.k2 - p.k1), Rational(p.kv), Rational(p.kt1 - p.k2)};
}

bool check_restrk(const MultiplicityVector& kappa) {
  const Rational sum = kappa.p1 + kappa.p3;
  return kappa.p3 >= sum && sum >= 0;
}

MultiplicityVector jack_multiplicities(const TwistParams& p) {
  return kappa_of(p) + half_multiplicities(p.m, p.n);
}

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] < p[i + 1]) return false;
  return p.empty() || p.back() >= 0;
}

Partition trim_partition(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

bool is_lattice_word(const std::vector<int>& word) {
  std::vector<long> counts;
  for (int s : word) {
    if (s < 1) return false;
    if (counts.size() < static_cast<std::size_t>(s))
      counts.resize(static_cast<std::size_t>(s), 0);
    auto& count = counts[static_cast<std::size_t>(s - 1)];
    ++count;
    if (s > 1 && count > counts[static_cast<std::size_t>(s - 2)]) return false;
  }
  return true;
}

std::vector<int> LRTableau::row_content(std::size_t row,
                                        int symbol_count) const {
  std::vector<int> content(static_cast<std::size_t>(symbol_count), 0);
  if (row < rows.size())
    for (int s : rows[row]) ++content[static_cast<std::size_t>(s - 1)];
  return content;
}

namespace {

struct SkewCell {
  int row;
  int col;
};

// Cells listed in reading order: rows top to bottom, each row right to left.
// Generating in this order makes the lattice condition a prefix check.
std::vector<SkewCell> reading_order_cells(const Partition& lambda,
                                          const Partition& mu) {
  std::vector<SkewCell> cells;
  for (std::size_t row = 0; row < lambda.size(); ++row) {
    const int lo = row < mu.size() ? mu[row] : 0;
    for (int col = lambda[row] - 1; col >= lo; --col)
      cells.push_back({static_cast<int>(row), col});
  }
  return cells;
}

struct LRSearch {
  const Partition& lambda;
  const Partition& mu;
  const Partition& nu;
  std::vector<SkewCell> cells;
  std::vector<int> filling;          // aligned with cells
  std::vector<long> remaining;       // per symbol
  std::vector<long> placed;          // per symbol, for the lattice prefix
  std::vector<std::vector<int>> grid;  // filled values, 0 = empty
  long count = 0;
  std::vector<LRTableau>* sink = nullptr;

  void run(std::size_t pos) {
    if (pos == cells.size()) {
      emit();
      return;
    }
    const auto [row, col] = cells[pos];
    const auto urow = static_cast<std::size_t>(row);
    const auto ucol = static_cast<std::size_t>(col);
    // Row weakly increases left to right; the right neighbor (already
    // placed) is an upper bound. The cell above (previous row, filled) is a
    // strict lower bound when it belongs to the skew shape.
    int hi = static_cast<int>(nu.size());
    if (col + 1 < lambda[urow]) hi = grid[urow][ucol + 1];
    int lo = 1;
    if (row > 0 && col < lambda[urow - 1]) {
      const int inner_above =
          urow - 1 < mu.size() ? mu[urow - 1] : 0;
      if (col >= inner_above) lo = grid[urow - 1][ucol] + 1;
    }
    for (int s = lo; s <= hi; ++s) {
      const auto us = static_cast<std::size_t>(s - 1);
      if (remaining[us] == 0) continue;
      // Lattice prefix: after placing s, symbols s must not outnumber s - 1.
      if (s > 1 && placed[us] + 1 > placed[us - 1]) continue;
      grid[urow][ucol] = s;
      filling[pos] = s;
      --remaining[us];
      ++placed[us];
      run(pos + 1);
      ++remaining[us];
      --placed[us];
      grid[urow][ucol] = 0;
    }
  }

  void emit() {
    ++count;
    if (!sink) return;
    LRTableau tableau;
    tableau.outer = lambda;
    tableau.inner = mu;
    tableau.rows.resize(lambda.size());
    for (std::size_t row = 0; row < lambda.size(); ++row) {
      const int lo = row < mu.size() ? mu[row] : 0;
      for (int col = lo; col < lambda[row]; ++col)
        tableau.rows[row].push_back(grid[row][static_cast<std::size_t>(col)]);
    }
    sink->push_back(std::move(tableau));
  }
};

long lr_run(const Partition& lambda_in, const Partition& mu_in,
            const Partition& nu_in, std::vector<LRTableau>* sink) {
  const Partition lambda = trim_partition(lambda_in);
  const Partition mu = trim_partition(mu_in);
  const Partition nu = trim_partition(nu_in);
  if (!is_partition(lambda) || !is_partition(mu) || !is_partition(nu))
    return 0;
  if (mu.size() > lambda.size()) return 0;
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] > lambda[i]) return 0;
  const long size_skew =
      std::accumulate(lambda.begin(), lambda.end(), 0L) -
      std::accumulate(mu.begin(), mu.end(), 0L);
  if (size_skew != std::accumulate(nu.begin(), nu.end(), 0L)) return 0;
  if (size_skew == 0) {
    if (sink) sink->push_back({lambda, mu, {}});
    return 1;
  }

  LRSearch search{lambda, mu, nu, reading_order_cells(lambda, mu), {}, {}, {},
                  {}, 0, sink};
  search.filling.assign(search.cells.size(), 0);
  search.remaining.assign(nu.size(), 0);
  for (std::size_t i = 0; i < nu.size(); ++i) search.remaining[i] = nu[i];
  search.placed.assign(nu.size(), 0);
  search.grid.resize(lambda.size());
  for (std::size_t row = 0; row < lambda.size(); ++row)
    search.grid[row].assign(static_cast<std::size_t>(lambda[row]), 0);
  search.run(0);
  return search.count;
}

}  // namespace

std::vector<LRTableau> lr_tableaux(const Partition& lambda,
                                   const Partition& mu, const Partition& nu) {
  std::vector<LRTableau> out;
  lr_run(lambda, mu, nu, &out);
  return out;
}

long lr_coefficient(const Partition& lambda, const Partition& mu,
                    const Partition& nu) {
  return lr_run(lambda, mu, nu, nullptr);
}

long lr_coefficient_shifted(const Weight& lambda, const Weight& mu,
                            const Weight& nu) {
  int min_entry = 0;
  for (const Weight* w : {&lambda, &mu, &nu})
    for (int v : *w) min_entry = std::min(min_entry, v);
  const int ell = -min_entry;
  if (ell > 0 && lambda.size() != mu.size() + nu.size())
    throw std::invalid_argument(
        "shifted LR needs len(lambda) == len(mu) + len(nu)");
  const auto shifted = [ell](const Weight& w) {
    Partition out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[i] + ell;
    return out;
  };
  return lr_coefficient(shifted(lambda), shifted(mu), shifted(nu));
}

namespace {

// All partitions contained in bound (componentwise, padded with zeros) with
// at most max_len parts.
void enumerate_subpartitions(const Partition& bound, std::size_t max_len,
                             std::size_t pos, int prev, Partition& current,
                             const std::function<void(const Partition&)>& fn) {
  if (pos == max_len) {
    fn(current);
    return;
  }
  const int cap =
      std::min(prev, pos < bound.size() ? bound[pos] : 0);
  for (int v = cap; v >= 0; --v) {
    current[pos] = v;
    enumerate_subpartitions(bound, max_len, pos + 1, v, current, fn);
    if (v == 0) break;
  }
  current[pos] = 0;
}

}  // namespace

std::vector<BranchTerm> branch_to_levi(const Weight& lambda, int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("need m, n >= 1");
  if (lambda.size() != static_cast<std::size_t>(m + n))
    throw std::invalid_argument("weight length must be m + n");
  if (!is_gl_dominant(lambda))
    throw std::invalid_argument("weight must be dominant");

  const int ell = -std::min(0, *std::min_element(lambda.begin(), lambda.end()));
  Partition shifted(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) shifted[i] = lambda[i] + ell;
  const long total = std::accumulate(shifted.begin(), shifted.end(), 0L);

  std::vector<BranchTerm> out;
  Partition zeta(static_cast<std::size_t>(m), 0);
  enumerate_subpartitions(
      shifted, static_cast<std::size_t>(m), 0,
      shifted.empty() ? 0 : shifted[0], zeta, [&](const Partition& z) {
        const long rest = total - std::accumulate(z.begin(), z.end(), 0L);
        if (rest < 0) return;
        Partition tau(static_cast<std::size_t>(n), 0);
        enumerate_subpartitions(
            shifted, static_cast<std::size_t>(n), 0,
            shifted.empty() ? 0 : shifted[0], tau, [&](const Partition& t) {
              if (std::accumulate(t.begin(), t.end(), 0L) != rest) return;
              const long c = lr_coefficient(shifted, z, t);
              if (c == 0) return;
              BranchTerm term;
              term.zeta.resize(static_cast<std::size_t>(m));
              for (int i = 0; i < m; ++i)
                term.zeta[static_cast<std::size_t>(i)] =
                    z[static_cast<std::size_t>(i)] - ell;
              term.tau.resize(static_cast<std::size_t>(n));
              for (int i = 0; i < n; ++i)
                term.tau[static_cast<std::size_t>(i)] =
                    t[static_cast<std::size_t>(i)] - ell;
              term.mult = c;
              out.push_back(std::move(term));
            });
      });
  std::sort(out.begin(), out.end(),
            [](const BranchTerm& a, const BranchTerm& b) {
              return std::tie(a.zeta, a.tau) < std::tie(b.zeta, b.tau);
            });
  return out;
}

std::vector<Weight> interlace_branch(const Weight& lambda) {
  if (lambda.size() < 2)
    throw std::invalid_argument("interlacing needs length at least 2");
  if (!is_gl_dominant(lambda))
    throw std::invalid_argument("weight must be dominant");
  std::vector<Weight> out;
  Weight current(lambda.size() - 1);
  std::function<void(std::size_t)> dfs = [&](std::size_t pos) {
    if (pos == current.size()) {
      out.push_back(current);
      return;
    }
    for (int v = lambda[pos]; v >= lambda[pos + 1]; --v) {
      current[pos] = v;
      dfs(pos + 1);
    }
  };
  dfs(0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Integer gl_dimension(const Weight& lambda) {
  if (!is_gl_dominant(lambda))
    throw std::invalid_argument("weight must be dominant");
  const std::size_t rank = lambda.size();
  Rational dim(1);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j) {
      const long numer = lambda[i] - lambda[j] + static_cast<long>(j - i);
      dim *= Rational(numer) / Rational(static_cast<long>(j - i));
    }
  if (!is_integer(dim)) throw std::logic_error("dimension must be integral");
  return dim.get_num();
}

Weight gl_twist_weight(const TwistParams& p) {
  Weight w(static_cast<std::size_t>(p.m));
  for (int i = 0; i < p.m; ++i)
    w[static_cast<std::size_t>(i)] =
        static_cast<int>(i < p.n ? p.kt1 : p.k1);
  return w;
}

Weight symmetric_twist_weight(const TwistParams& p) {
  const long base = p.k1 + p.k2 - p.kt1;
  Weight v(static_cast<std::size_t>(p.n));
  v[0] = static_cast<int>(base + (p.n - 1) * p.kv);
  for (int i = 1; i < p.n; ++i)
    v[static_cast<std::size_t>(i)] = static_cast<int>(base - p.kv);
  return v;
}

bool contains_det_pair(const Weight& lambda, long k1, long k2, int m, int n) {
  if (lambda.size() != static_cast<std::size_t>(m + n))
    throw std::invalid_argument("weight length must be m + n");
  if (!is_gl_dominant(lambda))
    throw std::invalid_argument("weight must be dominant");
  for (int j = 1; j <= n; ++j)
    if (lambda[static_cast<std::size_t>(j - 1)] +
            lambda[static_cast<std::size_t>(m + n - j)] !=
        k1 + k2)
      return false;
  for (int j = 1; j <= m - n; ++j)
    if (lambda[static_cast<std::size_t>(n + j - 1)] != k1) return false;
  return lambda[static_cast<std::size_t>(n - 1)] >= k1;
}

long spherical_multiplicity(const Weight& lambda, const TwistParams& p) {
  if (lambda.size() != static_cast<std::size_t>(p.m + p.n))
    throw std::invalid_argument("weight length must be m + n");
  return lr_coefficient_shifted(lambda, gl_twist_weight(p),
                                symmetric_twist_weight(p));
}

bool is_spherical_closed_form(const Weight& lambda, const TwistParams& p) {
  if (lambda.size() != static_cast<std::size_t>(p.m + p.n))
    throw std::invalid_argument("weight length must be m + n");
  if (!is_gl_dominant(lambda))
    throw std::invalid_argument("weight must be dominant");
  if (!contains_det_pair(lambda, p.k1, p.k2, p.m, p.n)) return false;
  if (lambda[static_cast<std::size_t>(p.n - 1)] < p.kt1) return false;
  for (int i = 0; i + 1 < p.n; ++i)
    if (lambda[static_cast<std::size_t>(i)] -
            lambda[static_cast<std::size_t>(i + 1)] <
        p.kv)
      return false;
  return true;
}

Weight to_gl_weight(const std::vector<Rational>& nu, const TwistParams& p) {
  if (nu.size() != static_cast<std::size_t>(p.n))
    throw std::invalid_argument("weight length must be n");
  const Rational khat = Rational(p.k1 + p.k2) / 2;
  Weight out(static_cast<std::size_t>(p.m + p.n));
  const auto assign = [&](std::size_t slot, const Rational& value) {
    if (!is_integer(value))
      throw std::invalid_argument("twisted image has a non-integral entry");
    out[slot] = static_cast<int>(to_long(value));
  };
  for (int i = 0; i < p.n; ++i)
    assign(static_cast<std::size_t>(i), nu[static_cast<std::size_t>(i)] + khat);
  for (int j = 0; j < p.m - p.n; ++j)
    assign(static_cast<std::size_t>(p.n + j), Rational(p.k1));
  for (int i = 0; i < p.n; ++i)
    assign(static_cast<std::size_t>(p.m + p.n - 1 - i),
           khat - nu[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace bcjack
