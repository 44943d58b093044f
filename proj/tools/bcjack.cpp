// Command-line front end: exact Jack data, branching multiplicities, and the
// numerical radial checks, with JSON/text output and a disk cache for the
// expensive exact computations.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bcjack/battery.hpp"
#include "bcjack/cache.hpp"
#include "bcjack/jack.hpp"
#include "bcjack/json_io.hpp"
#include "bcjack/lr.hpp"
#include "bcjack/radial.hpp"

namespace {

using bcjack::Rational;
using bcjack::Weight;
using nlohmann::json;

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) parts.push_back(token);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& token : split_commas(text)) {
    int value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
      throw std::invalid_argument("bad integer list: " + text);
    out.push_back(value);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

bcjack::MultiplicityVector parse_multiplicities(const std::string& text) {
  const auto parts = split_commas(text);
  if (parts.size() != 3)
    throw std::invalid_argument("expected three comma-separated rationals: " +
                                text);
  return {bcjack::parse_rational(parts[0]), bcjack::parse_rational(parts[1]),
          bcjack::parse_rational(parts[2])};
}

bcjack::TwistParams parse_varkappa(int m, int n, const std::string& text) {
  const auto values = parse_int_list(text);
  if (values.size() != 4)
    throw std::invalid_argument("expected k1,k2,kt1,kv: " + text);
  if (m < 1 || n < 1 || m < n)
    throw std::invalid_argument("need m >= n >= 1");
  return {m, n, values[0], values[1], values[2], values[3]};
}

std::string weight_str(const Weight& w) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ',';
    out << w[i];
  }
  out << ')';
  return out.str();
}

std::string r_str(const bcjack::MultiplicityVector& r) {
  return "(" + bcjack::to_string(r.p1) + "," + bcjack::to_string(r.p2) + "," +
         bcjack::to_string(r.p3) + ")";
}

Weight dominant_weight(const std::string& text, const char* what) {
  const Weight w = parse_int_list(text);
  if (!bcjack::is_gl_dominant(w))
    throw std::invalid_argument(std::string(what) +
                                " must be weakly decreasing: " + text);
  return w;
}

// Shared CLI state; callbacks fill `exit_code`.
struct Options {
  std::string format = "json";
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  int exit_code = 0;
};

void emit(const json& j) { std::cout << j.dump() << '\n'; }

// --- jack ------------------------------------------------------------------

void run_jack(Options& opt, const std::string& mu_text,
              const std::string& r_text, int n_flag) {
  Weight mu = parse_int_list(mu_text);
  if (n_flag > 0) {
    if (static_cast<int>(mu.size()) > n_flag)
      throw std::invalid_argument("mu has more than n parts");
    mu.resize(static_cast<std::size_t>(n_flag), 0);
  }
  if (!bcjack::is_bc_dominant(mu))
    throw std::invalid_argument("mu must be a partition: " + mu_text);
  const auto r = parse_multiplicities(r_text);

  const std::string key = std::string("jack|") + bcjack::kSchemaTag +
                          "|n=" + std::to_string(mu.size()) +
                          "|mu=" + weight_str(mu) + "|r=" + r_str(r);
  std::string payload;
  if (auto hit = bcjack::cache_load(key)) {
    payload = *hit;
  } else {
    payload = bcjack::jack_to_json(
        bcjack::jack_polynomial(mu, r, opt.jobs));
    bcjack::cache_store(key, payload);
  }
  if (opt.format == "json") {
    std::cout << payload << '\n';
    return;
  }
  const auto jack = bcjack::jack_from_json(payload);
  std::cout << "J" << weight_str(jack.mu) << "  n=" << jack.rank
            << "  r=" << r_str(jack.r) << '\n'
            << "eigenvalue = " << bcjack::to_string(jack.eigenvalue) << '\n';
  for (std::size_t i = 0; i < jack.cone.size(); ++i)
    std::cout << "  m" << weight_str(jack.cone[i]) << "  "
              << bcjack::to_string(jack.coeffs[i]) << '\n';
}

// --- operator-matrix --------------------------------------------------------

void run_operator_matrix(Options& opt, const std::string& mu_text,
                         const std::string& r_text, int n_flag) {
  Weight mu = parse_int_list(mu_text);
  if (n_flag > 0) {
    if (static_cast<int>(mu.size()) > n_flag)
      throw std::invalid_argument("mu has more than n parts");
    mu.resize(static_cast<std::size_t>(n_flag), 0);
  }
  if (!bcjack::is_bc_dominant(mu))
    throw std::invalid_argument("mu must be a partition: " + mu_text);
  const auto r = parse_multiplicities(r_text);

  const std::string key = std::string("opmat|") + bcjack::kSchemaTag +
                          "|n=" + std::to_string(mu.size()) +
                          "|mu=" + weight_str(mu) + "|r=" + r_str(r);
  std::string payload;
  if (auto hit = bcjack::cache_load(key)) {
    payload = *hit;
  } else {
    payload = bcjack::operator_matrix_to_json(
        bcjack::operator_matrix(mu, r, opt.jobs));
    bcjack::cache_store(key, payload);
  }
  if (opt.format == "json") {
    std::cout << payload << '\n';
    return;
  }
  const json j = json::parse(payload);
  std::cout << "operator action on the cone below " << weight_str(mu)
            << "  r=" << r_str(r) << '\n';
  const auto& cone = j.at("cone");
  const auto& diag = j.at("diag");
  for (std::size_t i = 0; i < cone.size(); ++i)
    std::cout << "  diag m" << weight_str(cone[i].get<Weight>()) << " = "
              << diag[i].get<std::string>() << '\n';
  for (const auto& entry : j.at("offdiag"))
    std::cout << "  [" << entry.at("row").get<std::size_t>() << " -> "
              << entry.at("col").get<std::size_t>() << "] "
              << entry.at("c").get<std::string>() << '\n';
}

// --- lr ----------------------------------------------------------------------

void run_lr(Options& opt, const std::string& lambda_text,
            const std::string& mu_text, const std::string& nu_text) {
  const Weight lambda = dominant_weight(lambda_text, "lambda");
  const Weight mu = dominant_weight(mu_text, "mu");
  const Weight nu = dominant_weight(nu_text, "nu");
  const long c = bcjack::lr_coefficient_shifted(lambda, mu, nu);
  if (opt.format == "json") {
    emit(json{{"c", c}, {"schema", bcjack::kSchemaTag}});
  } else {
    std::cout << "c = " << c << '\n';
  }
}

// --- branch -------------------------------------------------------------------

void run_branch(Options& opt, const std::string& lambda_text, int m, int n) {
  const Weight lambda = dominant_weight(lambda_text, "lambda");
  if (m < 1 || n < 1 ||
      static_cast<int>(lambda.size()) != m + n)
    throw std::invalid_argument("need len(lambda) == m + n with m, n >= 1");
  const auto terms = bcjack::branch_to_levi(lambda, m, n);
  if (opt.format == "json") {
    json out = json::array();
    for (const auto& term : terms)
      out.push_back(json{
          {"zeta", term.zeta}, {"tau", term.tau}, {"mult", term.mult}});
    emit(json{{"schema", bcjack::kSchemaTag}, {"terms", std::move(out)}});
  } else {
    for (const auto& term : terms)
      std::cout << "zeta=" << weight_str(term.zeta)
                << "  tau=" << weight_str(term.tau)
                << "  mult=" << term.mult << '\n';
    std::cout << terms.size() << " summand(s)" << '\n';
  }
}

// --- spherical -----------------------------------------------------------------

void run_spherical(Options& opt, int m, int n, const std::string& varkappa,
                   const std::string& lambda_text,
                   const std::string& mu_text) {
  const auto p = parse_varkappa(m, n, varkappa);
  if (!bcjack::check_restrk(bcjack::kappa_of(p)))
    throw std::invalid_argument("varkappa violates k2 <= k1 <= kt1");
  if (lambda_text.empty() == mu_text.empty())
    throw std::invalid_argument("pass exactly one of --lambda or --mu");

  if (!lambda_text.empty()) {
    const Weight lambda = dominant_weight(lambda_text, "lambda");
    if (static_cast<int>(lambda.size()) != m + n)
      throw std::invalid_argument("lambda must have m + n entries");
    const long mult = bcjack::spherical_multiplicity(lambda, p);
    const bool closed = bcjack::is_spherical_closed_form(lambda, p);
    if (opt.format == "json") {
      emit(json{{"closed_form", closed},
                {"multiplicity", mult},
                {"schema", bcjack::kSchemaTag}});
    } else {
      std::cout << "multiplicity = " << mult << '\n'
                << "closed_form = " << (closed ? "true" : "false") << '\n';
    }
    return;
  }

  const Weight mu = parse_int_list(mu_text);
  if (!bcjack::is_bc_dominant(mu) || static_cast<int>(mu.size()) != n)
    throw std::invalid_argument("mu must be a partition with n parts");
  const auto psi = bcjack::spherical_restriction(mu, p, opt.jobs);
  if (opt.format == "json") {
    emit(json{{"restriction", json::parse(bcjack::laurent_to_json(psi))},
              {"schema", bcjack::kSchemaTag}});
  } else {
    std::cout << psi.term_count() << " terms" << '\n';
    for (const auto& [e, c] : psi.terms())
      std::cout << "  u^" << weight_str(e) << "  " << bcjack::to_string(c) << '\n';
  }
}

// --- radial-check ----------------------------------------------------------------

void run_radial_check(Options& opt, int m, int n, const std::string& varkappa,
                      const std::string& mu_text, int points, double h,
                      double tol, unsigned long seed) {
  const auto p = parse_varkappa(m, n, varkappa);
  if (!bcjack::check_restrk(bcjack::kappa_of(p)))
    throw std::invalid_argument("varkappa violates k2 <= k1 <= kt1");
  if (points < 1) throw std::invalid_argument("points must be positive");
  if (!(h > 0)) throw std::invalid_argument("h must be positive");

  std::mt19937_64 rng(seed);
  const auto xs = bcjack::sample_chamber_points(n, points, rng);
  double max_rel = 0.0;
  const auto rel_gap = [](bcjack::Real a, bcjack::Real b) {
    return static_cast<double>(
        std::fabs(a - b) /
        std::max({std::fabs(a), std::fabs(b), (bcjack::Real)1e-9L}));
  };
  std::string mode;
  const bcjack::Real step = h;

  if (mu_text.empty()) {
    mode = "equivalence";
    const auto field = [](const std::vector<bcjack::Real>& x) {
      bcjack::Real s = 0.0L, t = 0.0L;
      for (std::size_t i = 0; i < x.size(); ++i) {
        s += (0.8L - 0.35L * static_cast<bcjack::Real>(i)) * x[i];
        t += (0.3L - 0.5L * static_cast<bcjack::Real>(i)) * x[i];
      }
      return std::exp(s) + std::exp(t);
    };
    for (const auto& x : xs)
      max_rel = std::max(
          max_rel,
          rel_gap(bcjack::apply_radial_casimir_fd(field, x, p, step),
                  bcjack::conjugated_radial_casimir_fd(field, x, p, step)));
  } else {
    mode = "eigenfunction";
    const Weight mu = parse_int_list(mu_text);
    if (!bcjack::is_bc_dominant(mu) || static_cast<int>(mu.size()) != n)
      throw std::invalid_argument("mu must be a partition with n parts");
    const auto r = bcjack::jack_multiplicities(p);
    const auto poly = bcjack::jack_polynomial(mu, r, opt.jobs).to_laurent();
    const auto rho = bcjack::rho_vector(r, n);
    Rational sum = 0;
    for (int i = 0; i < n; ++i) {
      const Rational s = Rational(mu[static_cast<std::size_t>(i)]) +
                         rho[static_cast<std::size_t>(i)];
      sum += s * s;
    }
    const bcjack::Real eigenvalue = bcjack::to_double(Rational(4) * sum);
    const auto field = [&](const std::vector<bcjack::Real>& x) {
      std::vector<std::complex<double>> point;
      point.reserve(x.size());
      for (bcjack::Real v : x)
        point.emplace_back(std::exp(static_cast<double>(v)), 0.0);
      return bcjack::weyl_denominator_value(x, r) *
             static_cast<bcjack::Real>(poly.evaluate(point).real());
    };
    for (const auto& x : xs)
      max_rel = std::max(max_rel,
                         rel_gap(bcjack::apply_cm_fd(field, x, r, step),
                                 eigenvalue * field(x)));
  }

  const bool pass = max_rel < tol;
  if (opt.format == "json") {
    emit(json{{"h", h},
              {"max_rel_err", max_rel},
              {"mode", mode},
              {"pass", pass},
              {"points", points},
              {"schema", bcjack::kSchemaTag},
              {"tol", tol}});
  } else {
    std::cout << mode << ": max relative error " << max_rel << " over "
              << points << " points (h=" << h << ", tol=" << tol << ") -> "
              << (pass ? "pass" : "FAIL") << '\n';
  }
  if (!pass) opt.exit_code = 1;
}

// --- ortho-check -------------------------------------------------------------------

void run_ortho_check(Options& opt, int m, int n, int grid, int max_degree,
                     double tol) {
  if (m < n || n < 1) throw std::invalid_argument("need m >= n >= 1");
  if (grid < 2) throw std::invalid_argument("grid must be at least 2");
  if (max_degree < 0) throw std::invalid_argument("max-degree negative");
  const auto r = bcjack::half_multiplicities(m, n);

  std::vector<Weight> mus;
  {
    Weight cur;
    const std::function<void(int)> rec = [&](int used) {
      if (static_cast<int>(cur.size()) == n) {
        mus.push_back(cur);
        return;
      }
      const int top = cur.empty() ? max_degree - used : cur.back();
      for (int v = std::min(top, max_degree - used); v >= 0; --v) {
        cur.push_back(v);
        rec(used + v);
        cur.pop_back();
      }
    };
    rec(0);
  }

  std::vector<bcjack::LaurentPoly> polys;
  polys.reserve(mus.size());
  for (const auto& mu : mus)
    polys.push_back(bcjack::jack_polynomial(mu, r, opt.jobs).to_laurent());

  std::vector<double> norms(mus.size());
  for (std::size_t i = 0; i < mus.size(); ++i)
    norms[i] =
        bcjack::inner_product_quadrature(polys[i], polys[i], r, grid, opt.jobs);

  double max_off = 0.0;
  std::string max_pair;
  long pairs = 0;
  for (std::size_t i = 0; i < mus.size(); ++i)
    for (std::size_t j = i + 1; j < mus.size(); ++j) {
      const double raw =
          bcjack::inner_product_quadrature(polys[i], polys[j], r, grid,
                                           opt.jobs);
      const double normalized = std::fabs(raw) / std::sqrt(norms[i] * norms[j]);
      ++pairs;
      if (normalized > max_off) {
        max_off = normalized;
        max_pair = weight_str(mus[i]) + "," + weight_str(mus[j]);
      }
    }

  const bool positive =
      std::all_of(norms.begin(), norms.end(), [](double v) { return v > 0; });
  const bool pass = positive && max_off < tol;
  if (opt.format == "json") {
    emit(json{{"grid", grid},
              {"max_offdiag", max_off},
              {"max_pair", max_pair},
              {"pairs", pairs},
              {"pass", pass},
              {"r", json::array({bcjack::to_string(r.p1), bcjack::to_string(r.p2),
                                 bcjack::to_string(r.p3)})},
              {"schema", bcjack::kSchemaTag},
              {"tol", tol}});
  } else {
    std::cout << "r=" << r_str(r) << "  grid=" << grid << "^" << n << '\n'
              << "max normalized off-diagonal " << max_off << " at "
              << max_pair << " over " << pairs << " pairs -> "
              << (pass ? "pass" : "FAIL") << '\n';
  }
  if (!pass) opt.exit_code = 1;
}

// --- battery ------------------------------------------------------------------------

void run_battery_cmd(Options& opt, const std::string& suite) {
  const auto results = bcjack::run_battery(suite, opt.jobs);
  const bool all_pass =
      std::all_of(results.begin(), results.end(),
                  [](const bcjack::CheckResult& r) { return r.pass; });
  if (opt.format == "json") {
    json out = json::array();
    for (const auto& r : results)
      out.push_back(json{{"checks", r.checks},
                         {"detail", r.detail},
                         {"name", r.name},
                         {"pass", r.pass}});
    emit(json{{"pass", all_pass},
              {"results", std::move(out)},
              {"schema", bcjack::kSchemaTag},
              {"suite", suite}});
  } else {
    long total = 0;
    for (const auto& r : results) {
      total += r.checks;
      std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  ("
                << r.checks << " checks)";
      if (!r.detail.empty()) std::cout << "  " << r.detail;
      std::cout << '\n';
    }
    std::cout << (all_pass ? "all " : "FAILURES with ") << total
              << " checks total" << '\n';
  }
  if (!all_pass) opt.exit_code = 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact BC Jack polynomials, branching data and radial checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "bcjack 1.0.0");

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", opt.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);

  // jack / operator-matrix
  std::string mu_text, r_text;
  int n_flag = 0;
  auto* jack = app.add_subcommand("jack", "Monic Jack eigenvector");
  jack->add_option("--mu", mu_text, "Partition, comma separated")->required();
  jack->add_option("--r", r_text, "Multiplicities r1,r2,r3")->required();
  jack->add_option("--n", n_flag, "Rank (pads mu with zeros)");
  jack->callback([&] { run_jack(opt, mu_text, r_text, n_flag); });

  auto* opmat =
      app.add_subcommand("operator-matrix", "Triangular operator action");
  opmat->add_option("--mu", mu_text, "Partition, comma separated")->required();
  opmat->add_option("--r", r_text, "Multiplicities r1,r2,r3")->required();
  opmat->add_option("--n", n_flag, "Rank (pads mu with zeros)");
  opmat->callback([&] { run_operator_matrix(opt, mu_text, r_text, n_flag); });

  // lr
  std::string lambda_text, nu_text;
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
  lr->add_option("--lambda", lambda_text)->required();
  lr->add_option("--mu", mu_text)->required();
  lr->add_option("--nu", nu_text)->required();
  lr->callback([&] { run_lr(opt, lambda_text, mu_text, nu_text); });

  // branch
  int m_flag = 1;
  auto* branch =
      app.add_subcommand("branch", "Restriction to the block Levi subgroup");
  branch->add_option("--lambda", lambda_text)->required();
  branch->add_option("--m", m_flag)->required();
  branch->add_option("--n", n_flag)->required();
  branch->callback([&] { run_branch(opt, lambda_text, m_flag, n_flag); });

  // spherical
  std::string varkappa_text;
  auto* spherical = app.add_subcommand(
      "spherical", "Twisted spherical multiplicity or torus restriction");
  spherical->add_option("--m", m_flag)->required();
  spherical->add_option("--n", n_flag)->required();
  spherical->add_option("--varkappa", varkappa_text, "k1,k2,kt1,kv")
      ->required();
  spherical->add_option("--lambda", lambda_text);
  spherical->add_option("--mu", mu_text);
  spherical->callback([&] {
    run_spherical(opt, m_flag, n_flag, varkappa_text, lambda_text, mu_text);
  });

  // radial-check
  int points = 100;
  double h = 1e-4;
  double tol = 0.0;
  unsigned long seed = 20240611UL;
  auto* radial = app.add_subcommand(
      "radial-check", "Finite-difference radial Casimir verification");
  // The step option is spelled --h, so this subcommand keeps only the long
  // help flag.
  radial->set_help_flag("--help", "Print this help message and exit");
  radial->add_option("--m", m_flag)->required();
  radial->add_option("--n", n_flag)->required();
  radial->add_option("--varkappa", varkappa_text, "k1,k2,kt1,kv")->required();
  radial->add_option("--mu", mu_text, "Eigenfunction label (optional)");
  radial->add_option("--points", points);
  radial->add_option("--h", h);
  radial->add_option("--tol", tol);
  radial->add_option("--seed", seed);
  radial->callback([&] {
    const double effective_tol =
        tol > 0 ? tol : (mu_text.empty() ? 1e-6 : 1e-5);
    run_radial_check(opt, m_flag, n_flag, varkappa_text, mu_text, points, h,
                     effective_tol, seed);
  });

  // ortho-check
  int grid = 400;
  int max_degree = 3;
  auto* ortho = app.add_subcommand(
      "ortho-check", "Quadrature Gram matrix of the Jack family");
  ortho->add_option("--m", m_flag)->required();
  ortho->add_option("--n", n_flag)->required();
  ortho->add_option("--grid", grid);
  ortho->add_option("--max-degree", max_degree);
  ortho->add_option("--tol", tol);
  ortho->callback([&] {
    const double effective_tol = tol > 0 ? tol : 1e-6;
    run_ortho_check(opt, m_flag, n_flag, grid, max_degree, effective_tol);
  });

  // battery
  std::string suite = "all";
  auto* battery =
      app.add_subcommand("battery", "Module verification suites");
  battery->add_option("suite", suite, "operator|lr|radial|ortho|all");
  battery->callback([&] { run_battery_cmd(opt, suite); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const bcjack::ComputationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return opt.exit_code;
}
