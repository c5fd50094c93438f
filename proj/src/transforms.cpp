#include "biprabhakar/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "biprabhakar/errors.hpp"
#include "componentwise.hpp"

namespace biprab {

using detail::componentwise;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
const Complex kI(0.0, 1.0);

Complex real_power(double t, Complex w) { return t == 0.0 ? Complex(0.0) : std::exp(w * std::log(t)); }

bool real_positive(const Bicomplex& s) {
  return s.z1() == s.z2() && s.z1().imag() == 0.0 && s.z1().real() > 0.0;
}

// Largest Re of the exponential rates of E_{ς}(λt^ς) in t, floored at 0 for
// the algebraic part.
double growth_rate(Complex lambda, Complex sigma) {
  if (lambda == 0.0) return 0.0;
  Complex L = std::log(lambda);
  double best = 0.0;
  int K = static_cast<int>(std::ceil(std::abs(sigma))) + 2;
  for (int k = -K; k <= K; ++k) {
    Complex w = (L + Complex(0.0, 2 * kPi * k)) / sigma;
    if (std::fabs(w.imag()) < kPi) best = std::max(best, std::exp(w).real());
  }
  return best;
}

double min_re(const Bicomplex& x) { return std::min(x.z1().real(), x.z2().real()); }

}  // namespace

void ContourSpec::validate() const {
  if (!(c >= 0.0) || !std::isfinite(c)) throw ContourError("contour abscissa c must be finite and >= 0");
  if (!(Y >= 0.0) || !std::isfinite(Y)) throw ContourError("contour height Y must be finite and >= 0");
  if (nodes < 64) throw ContourError("contour nodes >= 64 required");
  if (!(max_Y > 0.0) || !std::isfinite(max_Y)) throw ContourError("contour max_Y must be finite and > 0");
  if (!(abs_tol > 0.0)) throw ContourError("contour abs_tol must be > 0");
}

SeriesPolicy widened_policy(const SeriesPolicy& policy, Complex sigma, double modulus) {
  SeriesPolicy p = policy;
  if (!(modulus > 0.0)) return p;
  p.max_modulus = std::max(p.max_modulus, modulus * (1 + 1e-12));
  double a = sigma.real();
  if (a > 0.0) {
    double g = std::pow(modulus * std::exp(sigma.imag() * std::arg(sigma)), 1.0 / a);
    double k = 4.0 * g / std::abs(sigma) + 300.0;
    p.max_terms = std::max(p.max_terms, static_cast<int>(std::min(k, 2e5)));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Laplace

Bicomplex laplace_closed(const PrabhakarParams& params, const Bicomplex& lambda, const Bicomplex& zeta) {
  if (!param_domain_ok(zeta)) throw DomainError("|Im_j(zeta)| < Re(zeta) violated");
  if (!param_domain_ok(params.tau)) throw DomainError("|Im_j(tau)| < Re(tau) violated");
  Bicomplex w = lambda * power(zeta, -params.sigma);
  if (!hyperbolic_strictly_less(j_modulus(w), Hyperbolic(1.0))) {
    throw DomainError("|lambda zeta^-sigma|_j < 1 violated");
  }
  return componentwise([&](int r) {
    Complex z = zeta.component(r), wr = w.component(r);
    return std::exp(-params.tau_c(r) * std::log(z) - params.delta_c(r) * std::log(1.0 - wr));
  });
}

Bicomplex laplace_quadrature(const PrabhakarParams& params, const Bicomplex& lambda, const Bicomplex& zeta,
                             const QuadratureSpec& spec, const SeriesPolicy& policy) {
  spec.validate();
  policy.validate();
  return componentwise([&](int r) -> Complex {
    const Complex s = params.sigma_c(r), tau = params.tau_c(r), l = lambda.component(r), z = zeta.component(r);
    if (!(z.real() > 0.0)) throw DomainError("Re(zeta_r) > 0 required");
    if (!(tau.real() > 0.0)) throw DomainError("|Im_j(tau)| < Re(tau) violated");
    if (!(s.real() > 0.0)) throw DomainError("|Im_j(sigma)| < Re(sigma) violated");
    const double kappa = z.real() - growth_rate(l, s);
    if (!(kappa > 0.0)) throw QuadratureFailure("Laplace integrand does not decay: growth of E >= Re(zeta)", kInf);
    const double tol = spec.abs_tol;

    double T = spec.tail_cutoff;
    bool extend = T == 0.0;
    if (extend) {
      double T0 = std::max(1.0, std::log(1.0 / tol) / kappa);
      T = (std::log(1.0 / tol) + std::max(0.0, tau.real() - 1.0) * std::log(T0)) / kappa;
      T = std::max(T, 1.0);
    }
    const double T_cap = extend ? 8.0 * T : T;
    ScalarPrabhakar E(s, tau, params.delta_c(r),
                      widened_policy(policy, s, std::abs(l) * std::pow(T_cap, s.real())));

    // e^{−zt} t^{τ−1} E(λt^ς) with an error floor scaled to the weight.
    auto integrand = [&](double t, Complex pow_factor, double len) {
      Complex w = std::exp(-z * t) * pow_factor;
      double aw = std::abs(w);
      if (aw == 0.0) return Complex(0.0);
      Complex arg = l * real_power(t, s);
      return w * E.evaluate(arg, 0.01 * tol / (aw * len)).value;
    };
    if (extend) {
      for (int it = 0; it < 40 && T < T_cap; ++it) {
        Complex v = integrand(T, real_power(T, tau - 1.0), T);
        if (std::abs(v) / kappa < 0.01 * tol) break;
        T = std::min(T * 1.2, T_cap);
      }
    }

    const double a = tau.real();
    QuadratureResult q;
    if (a < 1.0) {
      double U = std::pow(T, a);
      q = integrate(
          [&](double u) {
            double t = std::pow(u, 1.0 / a);
            return integrand(t, real_power(t, tau - a), U) / a;
          },
          0.0, U, tol, spec.rel_tol, spec.max_subdivisions);
    } else {
      q = integrate([&](double t) { return integrand(t, real_power(t, tau - 1.0), T); }, 0.0, T, tol, spec.rel_tol,
                    spec.max_subdivisions);
    }
    return q.value;
  });
}

// ---------------------------------------------------------------------------
// Mellin

namespace {

void mellin_checks(const PrabhakarParams& params, const Bicomplex& lambda, const Bicomplex& zeta) {
  if (!real_positive(params.sigma)) throw DomainError("Mellin transform requires real positive sigma");
  if (!param_domain_ok(params.delta)) throw DomainError("|Im_j(delta)| < Re(delta) violated");
  for (int r = 1; r <= 2; ++r) {
    double zr = zeta.component(r).real();
    if (!(zr > 0.0 && zr < params.delta_c(r).real())) {
      throw DomainError("0 < Re(zeta_r) < Re(delta_r) violated", r);
    }
    if (params.tau_c(r) == 0.0) throw DomainError("tau != 0 violated (Re(tau) != |Im_j(tau)|)", r);
    if (lambda.component(r) == 0.0) throw DomainError("lambda components must be nonzero", r);
  }
}

}  // namespace

Bicomplex mellin_closed(const PrabhakarParams& params, const Bicomplex& lambda, const Bicomplex& zeta) {
  mellin_checks(params, lambda, zeta);
  const double s = params.sigma.z1().real();
  return componentwise([&](int r) {
    Complex z = zeta.component(r), d = params.delta_c(r);
    return gamma(z) * gamma(d - z) * std::exp(-z * std::log(lambda.component(r))) * recip_gamma(d) *
           recip_gamma(params.tau_c(r) - s * z);
  });
}

Bicomplex mellin_quadrature(const PrabhakarParams& params, const Bicomplex& lambda, const Bicomplex& zeta,
                            const QuadratureSpec& spec, const SeriesPolicy& policy) {
  spec.validate();
  policy.validate();
  mellin_checks(params, lambda, zeta);
  const double s = params.sigma.z1().real();
  return componentwise([&](int r) -> Complex {
    const Complex l = lambda.component(r), z = zeta.component(r), d = params.delta_c(r), tau = params.tau_c(r);
    const double theta = std::fabs(std::arg(l));
    if (!(s < 2.0) || !(theta < (1.0 - 0.5 * s) * kPi)) {
      throw QuadratureFailure("Mellin integrand does not decay: need sigma < 2 and |arg lambda| < (1 - sigma/2) pi",
                              kInf);
    }
    // The exponentially small part of E(−x) is below e^{−36} once
    // x^{1/ς} w ≥ 36.
    double phase = (kPi - theta) / s;
    double w = phase >= kPi ? 1.0 : std::min(1.0, -std::cos(phase));
    double x_c = std::pow(36.0 / w, s);
    double T = spec.tail_cutoff > 0.0 ? spec.tail_cutoff : std::max(1.0, x_c / std::abs(l));
    if (T * std::abs(l) > 1e4) throw QuadratureFailure("Mellin tail cutoff too large", kInf);
    ScalarPrabhakar E(s, tau, d, widened_policy(policy, s, std::abs(l) * T));
    const double tol = spec.abs_tol;

    auto integrand = [&](double t, Complex weight, double len) {
      double aw = std::abs(weight);
      if (aw == 0.0) return Complex(0.0);
      return weight * E.evaluate(-l * t, 0.01 * tol / (aw * len)).value;
    };
    const double a = z.real();
    QuadratureResult head;
    if (a < 1.0) {
      head = integrate(
          [&](double u) {
            double t = std::pow(u, 1.0 / a);
            return integrand(t, real_power(t, z - a) / a, 1.0);
          },
          0.0, 1.0, tol, spec.rel_tol, spec.max_subdivisions);
    } else {
      head = integrate([&](double t) { return integrand(t, real_power(t, z - 1.0), 1.0); }, 0.0, 1.0, tol,
                       spec.rel_tol, spec.max_subdivisions);
    }
    QuadratureResult body;
    if (T > 1.0) {
      body = integrate([&](double t) { return integrand(t, real_power(t, z - 1.0), T); }, 1.0, T, tol, spec.rel_tol,
                       spec.max_subdivisions);
    }

    // ∫_T^∞ t^{ζ−1} Σ_m (−1)^m (δ)_m/(m! Γ(τ−ς(δ+m))) (λt)^{−δ−m} dt. The
    // expansion diverges; cut where the envelope of three consecutive terms
    // is smallest and take that envelope as the error.
    Complex poch = 1.0;
    const Complex log_lT = std::log(l * T);
    std::vector<Complex> terms;
    for (int m = 0; m < 400; ++m) {
      if (m > 0) poch *= (d + double(m - 1)) / double(m);
      if (poch == 0.0) break;
      Complex dm = d + double(m);
      Complex term = poch * recip_gamma(tau - s * dm) * std::exp(-dm * log_lT) * real_power(T, z) / (dm - z);
      if (m % 2 == 1) term = -term;
      if (!std::isfinite(std::abs(term)) || std::abs(term) > 1e300) break;
      terms.push_back(term);
    }
    terms.resize(terms.size() + 2, 0.0);
    size_t cut = terms.size() - 2;
    double dropped = 0.0;
    bool seen = false;
    for (size_t m = 0; m + 2 < terms.size(); ++m) {
      double env = std::max({std::abs(terms[m]), std::abs(terms[m + 1]), std::abs(terms[m + 2])});
      if (!seen || env < dropped) {
        dropped = env;
        cut = m;
        seen = true;
      }
    }
    Complex tail = 0.0;
    for (size_t m = 0; m < cut; ++m) tail += terms[m];
    Complex total = head.value + body.value + tail;
    if (dropped > std::max(tol, spec.rel_tol * std::abs(total))) {
      throw QuadratureFailure("Mellin asymptotic tail not accurate at T", dropped);
    }
    return total;
  });
}

// ---------------------------------------------------------------------------
// Mellin–Barnes

BarnesResult mellin_barnes_eval(const PrabhakarParams& params, const Bicomplex& lambda, const ContourSpec& contour,
                                const SeriesPolicy& policy) {
  contour.validate();
  policy.validate();
  if (!real_positive(params.sigma)) throw ContourError("Mellin-Barnes form requires real positive sigma");
  const double sg = params.sigma.z1().real();
  const double dmin = min_re(params.delta);
  if (!(dmin > 0.0)) throw ContourError("Re(delta_r) > 0 violated");
  for (int r = 1; r <= 2; ++r) {
    Complex l = lambda.component(r);
    if (l.imag() == 0.0 && l.real() >= 0.0) {
      throw ContourError("|arg(-lambda_r)| < pi violated: lambda_r lies on [0, inf)", r);
    }
  }
  const double c = contour.c == 0.0 ? 0.5 * dmin : contour.c;
  if (!(c > 0.0 && c < dmin)) throw ContourError("0 < c < Re(delta_r) violated");

  BarnesResult out;
  Complex val[2];
  for (int r = 1; r <= 2; ++r) {
    try {
      const Complex d = params.delta_c(r), tau = params.tau_c(r);
      const Complex mlog = std::log(-lambda.component(r));
      const double margin = kPi * (1.0 - 0.5 * sg) - std::fabs(mlog.imag());
      const double beta = margin >= 1.0 ? 0.0 : 1.0;
      out.bend[r - 1] = beta;

      // Γ(s)Γ(δ−s)/Γ(τ−ςs) (−λ)^{−s} s'(y) / (2πi)
      auto F = [&](double y) -> Complex {
        double root = std::sqrt(1.0 + y * y);
        Complex s(c - beta * (root - 1.0), y);
        Complex ds(-beta * y / root, 1.0);
        Complex g = tau - sg * s;
        if (is_nonpositive_integer(g)) return 0.0;
        Complex lg = log_gamma(s) + log_gamma(d - s) - log_gamma(g) - s * mlog;
        return std::exp(lg) * ds / (2.0 * kPi * kI);
      };

      double Y = contour.Y > 0.0 ? contour.Y : 10.0;
      auto end_mag = [&](double y) { return std::max(std::abs(F(y)), std::abs(F(-y))); };
      double mag = end_mag(Y);
      while (mag > contour.abs_tol && Y < contour.max_Y) {
        Y = std::min(1.5 * Y, contour.max_Y);
        mag = end_mag(Y);
      }
      if (mag > contour.abs_tol) {
        out.truncated = true;
        out.tail_estimate = std::max(out.tail_estimate, mag * Y);
      }

      double dist = std::min(c, d.real() - c);
      if (beta > 0.0) dist = std::min(dist, 1.0);
      double h_target = std::min(2.0 * kPi * dist / 28.0, 2.0 * Y / contour.nodes);
      int n = std::max(contour.nodes, static_cast<int>(std::ceil(2.0 * Y / h_target)));
      double h = 2.0 * Y / n;
      Complex sum = 0.5 * (F(-Y) + F(Y));
      for (int k = 1; k < n; ++k) sum += F(-Y + k * h);
      Complex est = sum * h;
      int used = n + 1;
      for (int level = 0; level < 12; ++level) {
        Complex mid = 0.0;
        for (int k = 0; k < n; ++k) mid += F(-Y + (k + 0.5) * h);
        sum += mid;
        n *= 2;
        h *= 0.5;
        used += n / 2;
        Complex next = sum * h;
        double diff = std::abs(next - est);
        est = next;
        if (diff <= std::max(contour.abs_tol, 1e-14 * std::abs(est))) break;
        if (level == 11) throw NoConvergence("Mellin-Barnes trapezoid rule did not converge");
      }
      out.nodes[r - 1] = used;
      val[r - 1] = est * recip_gamma(d);
    } catch (const Error& e) {
      rethrow_with_component(e, r);
    }
  }
  out.value = Bicomplex::from_idempotent(val[0], val[1]);
  return out;
}

// ---------------------------------------------------------------------------
// Riemann–Liouville

GridFunction rl_fractional_integral(const GridFunction& f, const Bicomplex& mu) {
  if (!param_domain_ok(mu)) throw DomainError("|Im_j(mu)| < Re(mu) violated");
  const int N = f.grid.n_points;
  if (N < 2 || !(f.grid.h > 0.0)) throw GridError("uniform grid with at least 2 points required");
  if (static_cast<int>(f.values.size()) != N) throw GridError("sample count does not match grid");
  GridFunction out(f.grid);
  std::vector<Complex> res[2];
  for (int r = 1; r <= 2; ++r) {
    const Complex m = mu.component(r);
    std::vector<Complex> pw(static_cast<size_t>(N) + 1), pm(static_cast<size_t>(N) + 1);
    for (int k = 0; k <= N; ++k) {
      pw[k] = real_power(k, m + 1.0);
      pm[k] = real_power(k, m);
    }
    std::vector<Complex> b(static_cast<size_t>(N));
    for (int k = 1; k < N; ++k) b[k] = pw[k + 1] - 2.0 * pw[k] + pw[k - 1];
    std::vector<Complex> fv(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) fv[i] = f.values[i].component(r);
    const Complex scale = real_power(f.grid.h, m) * recip_gamma(m + 2.0);
    auto& o = res[r - 1];
    o.assign(static_cast<size_t>(N), 0.0);
    for (int n = 1; n < N; ++n) {
      Complex acc = (pw[n - 1] - (double(n) - 1.0 - m) * pm[n]) * fv[0] + fv[n];
      for (int j = 1; j < n; ++j) acc += b[n - j] * fv[j];
      o[n] = scale * acc;
    }
  }
  for (int i = 0; i < N; ++i) out.values[i] = Bicomplex::from_idempotent(res[0][i], res[1][i]);
  return out;
}

// ---------------------------------------------------------------------------
// Integral relation

Bicomplex kernel_integral_quadrature(const PrabhakarParams& params, const Bicomplex& lambda, const Bicomplex& zeta,
                                     const QuadratureSpec& spec, const SeriesPolicy& policy) {
  spec.validate();
  policy.validate();
  return componentwise([&](int r) -> Complex {
    const Complex s = params.sigma_c(r), tau = params.tau_c(r), z = zeta.component(r);
    if (z == 0.0) return 0.0;
    if (!(tau.real() > 0.0)) throw DomainError("|Im_j(tau)| < Re(tau) violated");
    // ∫_0^ζ t^{τ−1}E(λt^ς) dt = ζ^τ ∫_0^1 u^{τ−1} E(λζ^ς u^ς) du
    const Complex pre = std::exp(tau * std::log(z));
    const Complex arg = lambda.component(r) * std::exp(s * std::log(z));
    ScalarPrabhakar E(s, tau, params.delta_c(r), widened_policy(policy, s, std::abs(arg)));
    const double tol = spec.abs_tol / std::max(std::abs(pre), 1e-300);
    auto integrand = [&](double u, Complex weight) {
      double aw = std::abs(weight);
      if (aw == 0.0) return Complex(0.0);
      return weight * E.evaluate(arg * real_power(u, s), 0.01 * tol / aw).value;
    };
    const double a = tau.real();
    QuadratureResult q;
    if (a < 1.0) {
      q = integrate(
          [&](double v) {
            double u = std::pow(v, 1.0 / a);
            return integrand(u, real_power(u, tau - a) / a);
          },
          0.0, 1.0, tol, spec.rel_tol, spec.max_subdivisions);
    } else {
      q = integrate([&](double u) { return integrand(u, real_power(u, tau - 1.0)); }, 0.0, 1.0, tol, spec.rel_tol,
                    spec.max_subdivisions);
    }
    return pre * q.value;
  });
}

Bicomplex grid_laplace(const GridFunction& f, const Bicomplex& zeta) {
  const int N = f.grid.n_points;
  if (N < 2 || static_cast<int>(f.values.size()) != N) throw GridError("uniform grid with at least 2 points required");
  return componentwise([&](int r) {
    Complex z = zeta.component(r), acc = 0.0;
    for (int i = 0; i < N; ++i) {
      Complex v = std::exp(-z * f.grid.t(i)) * f.values[i].component(r);
      acc += (i == 0 || i == N - 1) ? 0.5 * v : v;
    }
    return acc * f.grid.h;
  });
}

}  // namespace biprab
