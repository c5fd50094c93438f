#include "biprabhakar/kinetic.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <limits>

#include "biprabhakar/errors.hpp"
#include "biprabhakar/quadrature.hpp"
#include "biprabhakar/transforms.hpp"
#include "json.hpp"

namespace biprab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Complex real_power(double t, Complex w) {
  if (t == 0.0) return w == 0.0 ? Complex(1.0) : Complex(0.0);
  return std::exp(w * std::log(t));
}

void require_positive(const Hyperbolic& a, const std::string& name) {
  if (!(a.p1() > 0.0 && a.p2() > 0.0)) throw DomainError(name + "1 > |" + name + "4| violated");
}

std::vector<Complex> component_values(const GridFunction& f, int r) {
  std::vector<Complex> out(f.values.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = f.values[i].component(r);
  return out;
}

// ∫_0^{t_n} f(v) K(t_n − v) dv for piecewise-linear f, given the first and
// second antiderivatives K1, K2 of K on the grid (K2(0) = 0).
std::vector<Complex> product_convolution(const std::vector<Complex>& f, const std::vector<Complex>& K1,
                                         const std::vector<Complex>& K2, double h) {
  const size_t N = f.size();
  std::vector<Complex> w(N, 0.0), out(N, 0.0);
  for (size_t m = 1; m + 1 < N; ++m) w[m] = (K2[m + 1] - 2.0 * K2[m] + K2[m - 1]) / h;
  const Complex w_end = K2[1] / h;
  out[0] = f[0] * K1[0];
  for (size_t n = 1; n < N; ++n) {
    Complex acc = f[0] * (K1[n] - (K2[n] - K2[n - 1]) / h) + f[n] * w_end;
    for (size_t j = 1; j < n; ++j) acc += w[n - j] * f[j];
    out[n] = acc;
  }
  return out;
}

// ∫_0^T |u^{τ−1} E_{ς,τ}(−a u^ς)| du
double kernel_l1(Complex sigma, Complex tau, double a, double T, const SeriesPolicy& policy) {
  ScalarPrabhakar E(sigma, tau, 1.0, widened_policy(policy, sigma, a * std::pow(T, sigma.real())));
  const double b = std::min(1.0, tau.real());
  auto f = [&](double v) {
    double u = std::pow(v, 1.0 / b);
    Complex val = real_power(u, tau - b) * E.evaluate(-a * real_power(u, sigma), 1e-12).value / b;
    return Complex(std::abs(val));
  };
  return integrate(f, 0.0, std::pow(T, b), 1e-10, 1e-7, 4000).value.real();
}

void enumerate_compositions(int parts, int total, std::vector<int>& cur, const std::function<void()>& visit) {
  if (parts == 0) {
    if (total == 0) visit();
    return;
  }
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(total);
    visit();
    cur.pop_back();
    return;
  }
  for (int k = total; k >= 0; --k) {
    cur.push_back(k);
    enumerate_compositions(parts, total - k, cur, visit);
    cur.pop_back();
  }
}

double sup_norm(const GridFunction& f, int r) {
  double m = 0.0;
  for (const auto& v : f.values) m = std::max(m, std::abs(v.component(r)));
  return m;
}

}  // namespace

void KineticProblem::validate() const {
  if (!(N0 > 0.0) || !std::isfinite(N0)) throw DomainError("N0 > 0 violated");
  if (a.empty()) throw DomainError("at least one coefficient a_i required");
  if (a.size() != nu.size()) throw DomainError("coefficient and order lists differ in length");
  for (size_t i = 0; i < a.size(); ++i) {
    require_positive(a[i], "a_i");
    if (!nu[i].is_finite() || !param_domain_ok(nu[i])) throw DomainError("|Im_j(nu_i)| < Re(nu_i) violated");
  }
  if (f.grid.n_points < 2 || static_cast<int>(f.values.size()) != f.grid.n_points) {
    throw GridError("source must be sampled on a grid with at least 2 points");
  }
  if (!f.nonfinite_nodes().empty()) {
    throw DomainError("source f has non-finite samples (node " + std::to_string(f.nonfinite_nodes().front()) + ")");
  }
}

GridFunction prabhakar_source(const PrabhakarSource& src, const TimeGrid& grid, const SeriesPolicy& policy) {
  require_positive(src.a, "a_");
  const auto& p = src.params;
  GridFunction out(grid);
  std::vector<Complex> vals[2];
  for (int r = 1; r <= 2; ++r) {
    try {
      const Complex s = p.sigma_c(r), tau = p.tau_c(r);
      const double ar = r == 1 ? src.a.p1() : src.a.p2();
      const Complex log_a = std::log(ar);
      const double top = std::abs(std::exp(s * (log_a + std::log(grid.t_end()))));
      ScalarPrabhakar E(s, tau, p.delta_c(r), widened_policy(policy, s, top));
      auto& v = vals[r - 1];
      v.resize(static_cast<size_t>(grid.n_points));
      if (tau.real() > 1.0) {
        v[0] = 0.0;
      } else if (tau == 1.0) {
        v[0] = E.evaluate(0.0).value;
      } else {
        v[0] = kNaN;
      }
      for (int i = 1; i < grid.n_points; ++i) {
        const double t = grid.t(i);
        const Complex arg = -std::exp(s * (log_a + std::log(t)));
        v[i] = real_power(t, tau - 1.0) * E.evaluate(arg).value;
      }
    } catch (const Error& e) {
      rethrow_with_component(e, r);
    }
  }
  for (int i = 0; i < grid.n_points; ++i) out.values[i] = Bicomplex::from_idempotent(vals[0][i], vals[1][i]);
  return out;
}

GridFunction solve_special(double N0, const PrabhakarParams& params, const Hyperbolic& a, int n,
                           const TimeGrid& grid, const SeriesPolicy& policy) {
  if (n < 1) throw DomainError("n >= 1 required");
  if (!(N0 > 0.0) || !std::isfinite(N0)) throw DomainError("N0 > 0 violated");
  PrabhakarParams shifted = PrabhakarParams::make(params.sigma, params.tau, params.delta + Bicomplex(double(n)));
  GridFunction out = prabhakar_source({shifted, a}, grid, policy);
  for (auto& v : out.values) v = v * Bicomplex(N0);
  return out;
}

KineticProblem binomial_problem(double N0, const PrabhakarParams& params, const Hyperbolic& a, int n,
                                const TimeGrid& grid, const SeriesPolicy& policy) {
  if (n < 1) throw DomainError("n >= 1 required");
  require_positive(a, "a_");
  const Complex s1 = params.sigma.z1(), s2 = params.sigma.z2();
  if (s1.imag() != 0.0 || s2.imag() != 0.0) {
    throw DomainError("binomial problem requires sigma with real idempotent components");
  }
  KineticProblem prob;
  prob.N0 = N0;
  double binom = 1.0;
  for (int i = 1; i <= n; ++i) {
    binom = binom * (n - i + 1) / i;
    double p1 = binom * std::pow(a.p1(), i * s1.real());
    double p2 = binom * std::pow(a.p2(), i * s2.real());
    prob.a.push_back(Hyperbolic::from_idempotent(p1, p2));
    prob.nu.push_back(Bicomplex(double(i)) * params.sigma);
  }
  prob.source = PrabhakarSource{params, a};
  prob.f = prabhakar_source(*prob.source, grid, policy);
  return prob;
}

namespace {

struct Power {
  Complex coef, exponent;
};

constexpr double kSingularCut = 1.0;

// Terms c t^p of the source expansion with Re p < 1.
std::vector<Power> source_singular_terms(const PrabhakarSource& src, int r) {
  const Complex s = src.params.sigma_c(r), tau = src.params.tau_c(r), d = src.params.delta_c(r);
  const Complex log_as = s * std::log(r == 1 ? src.a.p1() : src.a.p2());
  std::vector<Power> out;
  Complex poch = 1.0;
  for (int k = 0; (tau - 1.0 + double(k) * s).real() < kSingularCut; ++k) {
    if (k > 0) poch *= -(d + double(k - 1)) / double(k);
    if (poch == 0.0) break;
    out.push_back({poch * std::exp(double(k) * log_as) * recip_gamma(double(k) * s + tau), tau - 1.0 + double(k) * s});
  }
  return out;
}

// Terms c t^p (Re p < 1) of the solution for a Prabhakar source, by Picard
// iteration on the source expansion.
std::vector<Power> singular_part(const KineticProblem& problem, int r) {
  const double cut = kSingularCut;
  std::vector<Power> source = source_singular_terms(*problem.source, r);
  for (auto& term : source) term.coef *= problem.N0;
  std::vector<Power> S = source;
  for (int it = 0; it < 64; ++it) {
    std::vector<Power> next = source;
    for (size_t i = 0; i < problem.a.size(); ++i) {
      const double ai = r == 1 ? problem.a[i].p1() : problem.a[i].p2();
      const Complex nu = problem.nu[i].component(r);
      for (const auto& term : S) {
        Complex p = term.exponent + nu;
        if (p.real() >= cut) continue;
        next.push_back({-ai * term.coef * gamma(term.exponent + 1.0) * recip_gamma(p + 1.0), p});
      }
    }
    bool done = next.size() == S.size();
    S = std::move(next);
    if (done) break;
  }
  return S;
}

Complex eval_powers(const std::vector<Power>& terms, Complex shift, double t) {
  Complex acc = 0.0;
  for (const auto& term : terms) {
    acc += term.coef * gamma(term.exponent + 1.0) * recip_gamma(term.exponent + shift + 1.0) *
           real_power(t, term.exponent + shift);
  }
  return acc;
}

}  // namespace

SeriesSolution solve_general(const KineticProblem& problem, int L_max, const SeriesPolicy& policy, double tail_tol,
                             KernelIndex index) {
  problem.validate();
  policy.validate();
  if (L_max < 0) throw DomainError("L_max >= 0 required");
  if (!(tail_tol > 0.0)) throw DomainError("tail tolerance must be > 0");
  const TimeGrid& grid = problem.grid();
  const double T = grid.t_end(), h = grid.h;
  const int N = grid.n_points;
  const size_t n_coef = problem.a.size();

  SeriesSolution sol;
  sol.L_max = L_max;
  sol.values = GridFunction(grid);
  std::vector<Complex> out[2];
  int L_used[2] = {0, 0};
  double bound[2] = {0.0, 0.0};

  for (int r = 1; r <= 2; ++r) {
    try {
      std::vector<double> ar(n_coef);
      std::vector<Complex> nu(n_coef);
      for (size_t i = 0; i < n_coef; ++i) {
        ar[i] = r == 1 ? problem.a[i].p1() : problem.a[i].p2();
        nu[i] = problem.nu[i].component(r);
      }
      // Geometric control: ‖term_l‖ ≤ ‖R‖ r^l ‖f‖ with R the resolvent of
      // 1 + a_1 RL^{ν_1} and r the norm of Σ_{j≥2} a_j RL^{ν_j} R.
      const double normR = 1.0 + ar[0] * kernel_l1(nu[0], nu[0], ar[0], T, policy);
      double ratio = 0.0;
      for (size_t j = 1; j < n_coef; ++j) ratio += ar[j] * kernel_l1(nu[0], nu[j], ar[0], T, policy);
      sol.ratio = std::max(sol.ratio, ratio);
      if (ratio >= 1.0) {
        throw SeriesDivergence("geometric ratio r(T_end) = " + std::to_string(ratio) +
                               " >= 1; the series in l does not converge on [0, " + std::to_string(T) + "]");
      }
      int L = 0;
      if (n_coef > 1) {
        while (normR * std::pow(ratio, L + 1) / (1.0 - ratio) > tail_tol) {
          if (L >= L_max) {
            throw SeriesDivergence("tail bound " + std::to_string(normR * std::pow(ratio, L + 1) / (1.0 - ratio)) +
                                   " above tolerance at L_max = " + std::to_string(L_max));
          }
          ++L;
        }
      }
      L_used[r - 1] = L;
      bound[r - 1] = problem.N0 * sup_norm(problem.f, r) * normR *
                     (n_coef > 1 ? std::pow(ratio, L + 1) / (1.0 - ratio) : 0.0);

      // Σ over (l, s) of the kernel antiderivatives, then one convolution.
      // Algebraic source terms with Re p < 1 are convolved in closed form:
      // t^p ⋆ K_{l,s} = Γ(p+1) t^{c+p} E^{l+1}_{ν_1,c+p+1}(−a_1 t^{ν_1}).
      std::vector<Power> sing;
      if (problem.source) sing = source_singular_terms(*problem.source, r);
      std::vector<Complex> fr = component_values(problem.f, r);
      for (const auto& term : sing) {
        for (int m = 0; m < N; ++m) fr[m] -= term.coef * real_power(m * h, term.exponent);
      }
      std::vector<Complex> direct(static_cast<size_t>(N), 0.0);

      std::vector<Complex> K1(static_cast<size_t>(N), 0.0), K2(static_cast<size_t>(N), 0.0);
      const double top = ar[0] * std::pow(T, nu[0].real());
      std::vector<int> s;
      for (int l = 0; l <= L; ++l) {
        enumerate_compositions(static_cast<int>(n_coef) - 1, l, s, [&] {
          Complex c = 0.0;
          double log_coef = std::lgamma(l + 1.0);
          for (size_t m = 0; m + 1 < n_coef && m < s.size(); ++m) {
            c += (index == KernelIndex::weighted ? double(s[m]) : 1.0) * nu[m + 1];
            log_coef += s[m] * std::log(ar[m + 1]) - std::lgamma(s[m] + 1.0);
          }
          const double coef = (l % 2 ? -1.0 : 1.0) * std::exp(log_coef);
          SeriesPolicy wide = widened_policy(policy, nu[0], top);
          ScalarPrabhakar E1(nu[0], c + 1.0, l + 1.0, wide), E2(nu[0], c + 2.0, l + 1.0, wide);
          for (int m = 0; m < N; ++m) {
            const double u = m * h;
            const Complex arg = -ar[0] * real_power(u, nu[0]);
            const Complex p1 = coef * real_power(u, c), p2 = p1 * u;
            if (p1 != 0.0) K1[m] += p1 * E1.evaluate(arg, 1e-16 / std::abs(p1)).value;
            if (p2 != 0.0) K2[m] += p2 * E2.evaluate(arg, 1e-16 / std::abs(p2)).value;
          }
          for (const auto& term : sing) {
            ScalarPrabhakar Es(nu[0], c + term.exponent + 1.0, l + 1.0, wide);
            const Complex w = coef * term.coef * gamma(term.exponent + 1.0);
            for (int m = 0; m < N; ++m) {
              const Complex pw = w * real_power(m * h, c + term.exponent);
              if (pw != 0.0) direct[m] += pw * Es.evaluate(-ar[0] * real_power(m * h, nu[0]), 1e-16 / std::abs(pw)).value;
            }
          }
        });
        if (n_coef == 1) break;
      }
      std::vector<Complex> conv = product_convolution(fr, K1, K2, h);
      for (int m = 0; m < N; ++m) conv[m] = problem.N0 * (conv[m] + direct[m]);
      out[r - 1] = std::move(conv);
    } catch (const Error& e) {
      rethrow_with_component(e, r);
    }
  }
  for (int i = 0; i < N; ++i) sol.values.values[i] = Bicomplex::from_idempotent(out[0][i], out[1][i]);
  sol.terms_used = std::max(L_used[0], L_used[1]);
  sol.achieved_tail_bound = std::max(bound[0], bound[1]);
  return sol;
}

double volterra_residual(const GridFunction& N, const KineticProblem& problem) {
  problem.validate();
  if (!(N.grid == problem.grid())) throw GridError("solution and source grids differ");
  if (!N.nonfinite_nodes().empty()) {
    throw DomainError("solution has non-finite samples (node " + std::to_string(N.nonfinite_nodes().front()) + ")");
  }
  const TimeGrid& g = N.grid;
  // With a Prabhakar source the algebraic onset of N is integrated exactly;
  // the grid rule only sees the smoother remainder.
  std::vector<Power> sing[2];
  if (problem.source) {
    sing[0] = singular_part(problem, 1);
    sing[1] = singular_part(problem, 2);
  }
  auto onset = [&](Complex shift1, Complex shift2, double t) {
    return Bicomplex::from_idempotent(eval_powers(sing[0], shift1, t), eval_powers(sing[1], shift2, t));
  };
  GridFunction rest = N;
  if (problem.source) {
    for (int i = 0; i < g.n_points; ++i) rest.values[i] -= onset(0.0, 0.0, g.t(i));
  }
  std::vector<Bicomplex> acc(N.values.size());
  for (size_t i = 0; i < acc.size(); ++i) acc[i] = N.values[i] - Bicomplex(problem.N0) * problem.f.values[i];
  for (size_t k = 0; k < problem.a.size(); ++k) {
    GridFunction I = rl_fractional_integral(rest, problem.nu[k]);
    Bicomplex ak(problem.a[k]);
    for (int i = 0; i < g.n_points; ++i) {
      Bicomplex v = I.values[i];
      if (problem.source) v += onset(problem.nu[k].z1(), problem.nu[k].z2(), g.t(i));
      acc[i] += ak * v;
    }
  }
  double worst = 0.0;
  for (const auto& v : acc) worst = std::max({worst, std::abs(v.z1()), std::abs(v.z2())});
  return worst;
}

// ---------------------------------------------------------------------------
// JSON problem files

namespace {

using nlohmann::json;

Bicomplex bicomplex_field(const json& j, const std::string& name) {
  if (j.is_string()) return parse_bicomplex(j.get<std::string>());
  if (j.is_number()) return Bicomplex(j.get<double>());
  if (j.is_array() && j.size() == 4) {
    return Bicomplex::from_components(j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
                                      j[3].get<double>());
  }
  throw DomainError("problem file: " + name + " must be a bicomplex string, number or [x0,x1,x2,x3]");
}

Hyperbolic hyperbolic_field(const json& j, const std::string& name) {
  if (j.is_array() && j.size() == 2) return Hyperbolic(j[0].get<double>(), j[1].get<double>());
  if (j.is_number()) return Hyperbolic(j.get<double>());
  if (j.is_string()) return parse_hyperbolic(j.get<std::string>());
  throw DomainError("problem file: " + name + " must be [u1,u4]");
}

}  // namespace

KineticProblem load_problem(const std::string& json_text, const std::string& base_dir, const SeriesPolicy& policy) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("problem file is not valid JSON: ") + e.what());
  }
  try {
    KineticProblem prob;
    prob.N0 = doc.at("N0").get<double>();
    for (const auto& a : doc.at("a")) prob.a.push_back(hyperbolic_field(a, "a"));
    for (const auto& v : doc.at("nu")) prob.nu.push_back(bicomplex_field(v, "nu"));
    const json& f = doc.at("f");
    const std::string kind = f.at("kind").get<std::string>();
    std::optional<TimeGrid> grid;
    if (doc.contains("grid")) {
      grid = TimeGrid::covering(doc["grid"].at("t_end").get<double>(), doc["grid"].at("h").get<double>());
    }
    if (kind == "prabhakar") {
      if (!grid) throw DomainError("problem file: grid is required for a prabhakar source");
      const json& p = f.at("params");
      PrabhakarSource src;
      src.params = PrabhakarParams::make(bicomplex_field(p.at("sigma"), "sigma"), bicomplex_field(p.at("tau"), "tau"),
                                         bicomplex_field(p.at("delta"), "delta"));
      if (p.contains("a")) src.a = hyperbolic_field(p["a"], "a");
      prob.source = src;
      prob.f = prabhakar_source(src, *grid, policy);
    } else if (kind == "csv") {
      std::filesystem::path path(f.at("path").get<std::string>());
      if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
      prob.f = read_csv_file(path.string());
      if (grid && (grid->n_points != prob.f.grid.n_points ||
                   std::fabs(grid->h - prob.f.grid.h) > 1e-9 * grid->h)) {
        throw GridError("CSV source grid does not match the grid block");
      }
    } else {
      throw DomainError("problem file: f.kind must be \"prabhakar\" or \"csv\"");
    }
    prob.validate();
    return prob;
  } catch (const json::exception& e) {
    throw DomainError(std::string("problem file: ") + e.what());
  }
}

}  // namespace biprab
