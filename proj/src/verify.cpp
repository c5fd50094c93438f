#include "biprabhakar/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "biprabhakar/errors.hpp"
#include "biprabhakar/kinetic.hpp"
#include "biprabhakar/prabhakar.hpp"
#include "biprabhakar/transforms.hpp"
#include "json.hpp"

namespace biprab::verify {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr size_t kMaxFailures = 5;

using Rng = std::mt19937_64;

double ulp(double x) {
  x = std::fabs(x);
  if (x < std::numeric_limits<double>::min()) return std::numeric_limits<double>::denorm_min();
  return std::nextafter(x, HUGE_VAL) - x;
}

double rel_err(Complex got, Complex want) {
  double d = std::abs(got - want);
  return want == 0.0 ? d : d / std::abs(want);
}

double mixed_err(Complex got, Complex want) { return std::abs(got - want) / (1.0 + std::abs(want)); }

double worst_of(const Bicomplex& got, const Bicomplex& want, double (*err)(Complex, Complex)) {
  return std::max(err(got.z1(), want.z1()), err(got.z2(), want.z2()));
}

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Complex draw_c(Rng& rng, double re_lo, double re_hi, double im) {
  double a = uniform(rng, re_lo, re_hi);
  return {a, uniform(rng, -im, im)};
}

Bicomplex draw_b(Rng& rng, double re_lo, double re_hi, double im) {
  Complex a = draw_c(rng, re_lo, re_hi, im);
  Complex b = draw_c(rng, re_lo, re_hi, im);
  return Bicomplex::from_idempotent(a, b);
}

PrabhakarParams draw_params(Rng& rng, double tau_lo = 0.2) {
  Bicomplex s = draw_b(rng, 0.2, 3, 1);
  Bicomplex t = draw_b(rng, tau_lo, 3, 1);
  Bicomplex d = draw_b(rng, 0.2, 3, 1);
  return PrabhakarParams::make(s, t, d);
}

// Radius keeping the peak series term of E_{ς}(z) below about e^30.
double safe_radius(Complex sigma) {
  double a = sigma.real();
  return std::pow(30.0 * std::abs(sigma) / a, a) * std::exp(-sigma.imag() * std::arg(sigma));
}

Bicomplex draw_arg(Rng& rng, const PrabhakarParams& p, double radius) {
  Complex out[2];
  for (int r = 1; r <= 2; ++r) {
    double rad = uniform(rng, 0.0, 1.0) * std::min(radius, safe_radius(p.sigma_c(r)));
    out[r - 1] = std::polar(rad, uniform(rng, -kPi, kPi));
  }
  return Bicomplex::from_idempotent(out[0], out[1]);
}

std::string text(const Bicomplex& b) {
  std::ostringstream os;
  os.precision(17);
  os << "[" << b.z1().real() << "," << b.z1().imag() << ";" << b.z2().real() << "," << b.z2().imag() << "]";
  return os.str();
}

std::string text(const PrabhakarParams& p) {
  return "sigma=" + text(p.sigma) + " tau=" + text(p.tau) + " delta=" + text(p.delta);
}

class Recorder {
 public:
  Recorder(std::string suite, const SuiteOptions& opt) {
    report_.suite = std::move(suite);
    report_.seed = opt.seed;
    report_.draws = opt.draws > 0 ? opt.draws : default_draws(report_.suite);
  }

  int draws() const { return report_.draws; }

  size_t check(const std::string& name, double tolerance, bool informational = false) {
    for (size_t i = 0; i < report_.checks.size(); ++i) {
      if (report_.checks[i].name == name) return i;
    }
    Check c;
    c.name = name;
    c.tolerance = tolerance;
    c.informational = informational;
    report_.checks.push_back(c);
    return report_.checks.size() - 1;
  }

  void observe(size_t id, double metric, const std::function<std::string()>& describe) {
    Check& c = report_.checks[id];
    ++c.count;
    bool bad = !(metric <= c.tolerance);
    if (std::isnan(metric)) metric = kInf;
    c.worst = std::max(c.worst, metric);
    if (bad && !c.informational) {
      c.passed = false;
      note(c.name + ": " + describe());
    }
  }

  void error(size_t id, const std::string& what, const std::function<std::string()>& describe) {
    Check& c = report_.checks[id];
    ++c.count;
    c.worst = kInf;
    if (!c.informational) {
      c.passed = false;
      note(c.name + ": " + describe() + " raised: " + what);
    }
  }

  // Evaluates `metric` and records it; library errors count as failures.
  void run(size_t id, const std::function<double()>& metric, const std::function<std::string()>& describe) {
    try {
      observe(id, metric(), describe);
    } catch (const Error& e) {
      error(id, e.what(), describe);
    }
  }

  SuiteReport finish() {
    for (const auto& c : report_.checks) {
      if (!c.informational && !c.passed) report_.passed = false;
    }
    return std::move(report_);
  }

 private:
  void note(std::string msg) {
    if (report_.failures.size() < kMaxFailures) report_.failures.push_back(std::move(msg));
  }

  SuiteReport report_;
};

std::function<std::string()> draw_label(int i, std::string extra = {}) {
  return [i, extra] { return "draw " + std::to_string(i) + (extra.empty() ? "" : " " + extra); };
}

// ---------------------------------------------------------------------------

std::array<double, 4> table_product(const std::array<double, 4>& x, const std::array<double, 4>& y) {
  return {x[0] * y[0] - x[1] * y[1] - x[2] * y[2] + x[3] * y[3],
          x[0] * y[1] + x[1] * y[0] - x[2] * y[3] - x[3] * y[2],
          x[0] * y[2] + x[2] * y[0] - x[1] * y[3] - x[3] * y[1],
          x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1]};
}

SuiteReport suite_algebra(const SuiteOptions& opt) {
  Recorder rec("algebra", opt);
  Rng rng(opt.seed);
  std::uniform_int_distribution<int> grid(-4096, 4096);
  auto random_b = [&] {
    return Bicomplex::from_components(uniform(rng, -10, 10), uniform(rng, -10, 10), uniform(rng, -10, 10),
                                      uniform(rng, -10, 10));
  };
  const size_t exact = rec.check("roundtrip_exact_dyadic", 0.0);
  const size_t rt = rec.check("roundtrip_ulps", 4.0);
  const size_t comp = rec.check("product_componentwise_exact", 0.0);
  const size_t prod = rec.check("product_table_ulps", 4.0);
  const size_t null = rec.check("null_cone_division_raises", 0.0);
  const size_t jmod = rec.check("j_modulus_multiplicative_ulps", 4.0);
  for (int i = 0; i < rec.draws(); ++i) {
    std::array<double, 4> x{grid(rng) / 64.0, grid(rng) / 64.0, grid(rng) / 64.0, grid(rng) / 64.0};
    auto z = Bicomplex::from_components(x[0], x[1], x[2], x[3]);
    rec.observe(exact, compose(split(z)).real_components() == x ? 0.0 : 1.0, draw_label(i));

    auto a = random_b(), b = random_b();
    auto ax = a.real_components();
    auto back = Bicomplex::from_components(ax[0], ax[1], ax[2], ax[3]);
    double scale = std::max(std::abs(a.z1()), std::abs(a.z2()));
    double u = ulp(scale);
    rec.observe(rt, std::max(std::abs(back.z1() - a.z1()), std::abs(back.z2() - a.z2())) / u, draw_label(i));

    auto p = a * b;
    rec.observe(comp, split(p) == ComplexPair{a.z1() * b.z1(), a.z2() * b.z2()} ? 0.0 : 1.0, draw_label(i));
    auto want = table_product(ax, b.real_components());
    auto got = p.real_components();
    double sa = 0.0, sb = 0.0;
    for (double v : ax) sa += std::fabs(v);
    for (double v : b.real_components()) sb += std::fabs(v);
    double e = 0.0;
    for (int k = 0; k < 4; ++k) e = std::max(e, std::fabs(got[k] - want[k]));
    rec.observe(prod, e / ulp(sa * sb), draw_label(i));

    auto zd = Bicomplex::from_idempotent(i % 2 ? Complex(0.0) : a.z1(), i % 2 ? a.z2() : Complex(0.0));
    double raised = 1.0;
    try {
      (void)inverse(zd);
    } catch (const NullConeError&) {
      raised = 0.0;
    }
    rec.observe(null, raised, draw_label(i));

    auto lhs = j_modulus(a * b);
    auto ma = j_modulus(a), mb = j_modulus(b);
    double e1 = std::fabs(lhs.p1() - ma.p1() * mb.p1()) / ulp(lhs.p1());
    double e2 = std::fabs(lhs.p2() - ma.p2() * mb.p2()) / ulp(lhs.p2());
    rec.observe(jmod, std::max(e1, e2), draw_label(i));
  }
  return rec.finish();
}

SuiteReport suite_scalar(const SuiteOptions& opt) {
  Recorder rec("scalar", opt);
  Rng rng(opt.seed);
  const size_t ex = rec.check("exp_reduction_rel", 1e-13);
  const size_t co = rec.check("cos_reduction", 1e-12);
  const size_t ml = rec.check("two_parameter_reduction", 1e-13);
  ScalarPrabhakar e(1.0, 1.0, 1.0, opt.policy), c(2.0, 1.0, 1.0, opt.policy);
  for (int i = 0; i < rec.draws(); ++i) {
    Complex z = std::polar(uniform(rng, 0, 20), uniform(rng, -kPi, kPi));
    rec.run(ex, [&] { return rel_err(e(z), std::exp(z)); }, draw_label(i));
    Complex w = std::polar(uniform(rng, 0, 5), uniform(rng, -kPi, kPi));
    rec.run(co, [&] { return mixed_err(c(-w * w), std::cos(w)); }, draw_label(i));
    Complex s = draw_c(rng, 0.3, 2.5, 0.5), t = draw_c(rng, 0.3, 2.5, 0.5);
    double rad = uniform(rng, 0, 1) * std::min(4.0, safe_radius(s));
    Complex x = std::polar(rad, uniform(rng, -kPi, kPi));
    rec.run(ml, [&] { return mixed_err(prabhakar_complex({s, t, 1.0, x}, opt.policy), ml_two_param(s, t, x)); },
            draw_label(i));
  }
  return rec.finish();
}

SuiteReport suite_recurrence(const SuiteOptions& opt) {
  Recorder rec("recurrence", opt);
  Rng rng(opt.seed);
  const size_t first = rec.check("first_recurrence", 1e-10);
  const size_t second = rec.check("second_recurrence", 1e-10);
  for (int i = 0; i < rec.draws(); ++i) {
    auto p = draw_params(rng, 1.2);
    Bicomplex z = draw_arg(rng, p, 5);
    auto label = draw_label(i, text(p) + " z=" + text(z));
    try {
      auto res = recurrence_residuals(p, z, opt.policy);
      double m1 = 0.0, m2 = 0.0;
      for (int r = 1; r <= 2; ++r) {
        double scale = 1 + std::abs(res.value.component(r));
        m1 = std::max(m1, std::abs(res.first.component(r)) / scale);
        m2 = std::max(m2, res.second ? std::abs(res.second->component(r)) / scale : kInf);
      }
      rec.observe(first, m1, label);
      rec.observe(second, m2, label);
    } catch (const Error& e) {
      rec.error(first, e.what(), label);
      rec.error(second, e.what(), label);
    }
  }
  return rec.finish();
}

SuiteReport suite_differential(const SuiteOptions& opt) {
  Recorder rec("differential", opt);
  Rng rng(opt.seed);
  const size_t der = rec.check("derivative_vs_central_difference", 1e-6);
  const size_t eul = rec.check("euler_operator", 1e-10);
  const size_t ker = rec.check("kernel_derivative_vs_central_difference", 1e-6);
  const double h = 1e-5;
  for (int i = 0; i < rec.draws(); ++i) {
    auto p = draw_params(rng);
    Bicomplex z = draw_arg(rng, p, 4);
    auto label = draw_label(i, text(p) + " z=" + text(z));
    rec.run(der, [&] {
      Bicomplex fd = (prabhakar(p, z + h, opt.policy) - prabhakar(p, z - h, opt.policy)) * Bicomplex(0.5 / h);
      return worst_of(derivative(p, z, 1, opt.policy), fd, mixed_err);
    }, label);
    rec.run(eul, [&] {
      Bicomplex res = euler_operator_residual(p, z, opt.policy);
      Bicomplex up = prabhakar(PrabhakarParams::unchecked(p.sigma, p.tau, p.delta + Bicomplex(1.0)), z, opt.policy);
      double m = 0.0;
      for (int r = 1; r <= 2; ++r) {
        m = std::max(m, std::abs(res.component(r)) / (1 + std::abs(p.delta_c(r) * up.component(r))));
      }
      return m;
    }, label);

    auto q = PrabhakarParams::make(draw_b(rng, 0.3, 2.5, 0.5), draw_b(rng, 1.3, 3, 0.25), draw_b(rng, 0.3, 2.5, 0.5));
    Bicomplex lam = Bicomplex::from_idempotent(std::polar(uniform(rng, 0, 1.5), uniform(rng, -kPi, kPi)),
                                               std::polar(uniform(rng, 0, 1.5), uniform(rng, -kPi, kPi)));
    Bicomplex x = draw_b(rng, 0.4, 2, 1);
    rec.run(ker, [&] {
      auto g = [&](const Bicomplex& y) { return kernel_derivative(q, lam, y, 0, opt.policy); };
      Bicomplex fd = (g(x + h) - g(x - h)) * Bicomplex(0.5 / h);
      return worst_of(kernel_derivative(q, lam, x, 1, opt.policy), fd, mixed_err);
    }, draw_label(i, text(q) + " lambda=" + text(lam) + " zeta=" + text(x)));
  }
  return rec.finish();
}

SuiteReport suite_integral(const SuiteOptions& opt) {
  Recorder rec("integral", opt);
  Rng rng(opt.seed);
  const size_t id = rec.check("segment_quadrature_vs_closed_form", 1e-7);
  for (int i = 0; i < rec.draws(); ++i) {
    auto p = draw_params(rng);
    Bicomplex lam = Bicomplex::from_idempotent(std::polar(uniform(rng, 0, 1), uniform(rng, -kPi, kPi)),
                                               std::polar(uniform(rng, 0, 1), uniform(rng, -kPi, kPi)));
    Bicomplex z = Bicomplex::from_idempotent(std::polar(uniform(rng, 0.1, 2), uniform(rng, -3, 3)),
                                             std::polar(uniform(rng, 0.1, 2), uniform(rng, -3, 3)));
    // Keep |λ_r ζ_r^{ς_r}| inside the growth-limited radius.
    Complex lc[2] = {lam.z1(), lam.z2()};
    for (int r = 1; r <= 2; ++r) {
      double top = std::abs(lc[r - 1] * std::exp(p.sigma_c(r) * std::log(z.component(r))));
      double cap = std::min(5.0, safe_radius(p.sigma_c(r)));
      if (top > cap) lc[r - 1] *= cap / top;
    }
    lam = Bicomplex::from_idempotent(lc[0], lc[1]);
    rec.run(id, [&] {
      return worst_of(kernel_integral_quadrature(p, lam, z, {}, opt.policy), kernel_integral(p, lam, z, opt.policy),
                      mixed_err);
    }, draw_label(i, text(p) + " lambda=" + text(lam) + " zeta=" + text(z)));
  }
  return rec.finish();
}

SuiteReport suite_laplace(const SuiteOptions& opt) {
  Recorder rec("laplace", opt);
  Rng rng(opt.seed);
  const size_t id = rec.check("closed_form_vs_quadrature_rel", 1e-7);
  const size_t guard = rec.check("guard_rejects_divergent_region", 0.0);
  for (int i = 0; i < rec.draws(); ++i) {
    Bicomplex s = draw_b(rng, 0.6, 1.6, 0.2), t = draw_b(rng, 0.4, 2.4, 0.5), d = draw_b(rng, 0.3, 2.3, 0.5);
    Bicomplex z = draw_b(rng, 1.0, 3.0, 0.5);
    Bicomplex lam = Bicomplex::from_idempotent(std::polar(uniform(rng, 0, 0.8), uniform(rng, -kPi, kPi)),
                                               std::polar(uniform(rng, 0, 0.8), uniform(rng, -kPi, kPi)));
    auto p = PrabhakarParams::make(s, t, d);
    auto label = draw_label(i, text(p) + " lambda=" + text(lam) + " zeta=" + text(z));
    rec.run(id, [&] {
      return worst_of(laplace_quadrature(p, lam, z, {}, opt.policy), laplace_closed(p, lam, z), rel_err);
    }, label);

    // λ = w ζ^ς with |w_r| ≥ 1 in one component.
    Bicomplex zs = power(z, s);
    int bad = 1 + i % 2;
    Complex w[2] = {std::polar(uniform(rng, 0, 0.9), uniform(rng, -kPi, kPi)),
                    std::polar(uniform(rng, 0, 0.9), uniform(rng, -kPi, kPi))};
    w[bad - 1] = std::polar(uniform(rng, 1.0, 3.0), uniform(rng, -kPi, kPi));
    Bicomplex outside = Bicomplex::from_idempotent(w[0], w[1]) * zs;
    double raised = 1.0;
    try {
      (void)laplace_closed(p, outside, z);
    } catch (const DomainError&) {
      raised = 0.0;
    }
    rec.observe(guard, raised, label);
  }
  return rec.finish();
}

SuiteReport suite_mellin(const SuiteOptions& opt) {
  Recorder rec("mellin", opt);
  Rng rng(opt.seed);
  const size_t id = rec.check("closed_form_vs_quadrature", 1e-6);
  const size_t gam = rec.check("gamma_reduction", 1e-10);
  auto unit = PrabhakarParams::make(1.0, 1.0, 1.0);
  for (int i = 0; i < rec.draws(); ++i) {
    double s = uniform(rng, 0.3, 1.5);
    Bicomplex d = draw_b(rng, 0.8, 3.0, 0.3);
    Bicomplex t = draw_b(rng, 0.5, 2.5, 0.5);
    Complex lz[2], lamc[2];
    for (int r = 1; r <= 2; ++r) {
      double dr = d.component(r).real();
      lz[r - 1] = Complex(uniform(rng, 0.1 * dr, 0.9 * dr), uniform(rng, -0.5, 0.5));
      double theta_max = 0.5 * (1.0 - 0.5 * s) * kPi;
      lamc[r - 1] = std::polar(uniform(rng, 0.5, 2.0), uniform(rng, -theta_max, theta_max));
    }
    Bicomplex z = Bicomplex::from_idempotent(lz[0], lz[1]), lam = Bicomplex::from_idempotent(lamc[0], lamc[1]);
    auto p = PrabhakarParams::make(s, t, d);
    rec.run(id, [&] {
      return worst_of(mellin_quadrature(p, lam, z, {}, opt.policy), mellin_closed(p, lam, z), mixed_err);
    }, draw_label(i, text(p) + " lambda=" + text(lam) + " zeta=" + text(z)));

    Bicomplex g = Bicomplex::from_idempotent({uniform(rng, 0.05, 0.95), uniform(rng, -2, 2)},
                                             {uniform(rng, 0.05, 0.95), uniform(rng, -2, 2)});
    rec.run(gam, [&] { return worst_of(mellin_closed(unit, 1.0, g), gamma_bicomplex(g), rel_err); },
            draw_label(i, "zeta=" + text(g)));
  }
  return rec.finish();
}

SuiteReport suite_barnes(const SuiteOptions& opt) {
  Recorder rec("barnes", opt);
  Rng rng(opt.seed);
  const size_t id = rec.check("contour_vs_series_abs", 1e-6);
  const size_t trunc = rec.check("contour_not_truncated", 0.0);
  for (int i = 0; i < rec.draws(); ++i) {
    double s = uniform(rng, 0.3, 1.7);
    Bicomplex d = draw_b(rng, 0.5, 2.5, 0.5);
    Bicomplex t = draw_b(rng, 0.5, 2.5, 0.5);
    Complex lc[2];
    for (auto& l : lc) {
      double ang = uniform(rng, 0.05, 2 * kPi - 0.05);
      l = std::polar(uniform(rng, 0.05, 2.0), ang);
    }
    Bicomplex lam = Bicomplex::from_idempotent(lc[0], lc[1]);
    auto p = PrabhakarParams::make(s, t, d);
    auto label = draw_label(i, text(p) + " lambda=" + text(lam));
    try {
      BarnesResult b = mellin_barnes_eval(p, lam, {}, opt.policy);
      Bicomplex want = prabhakar(p, lam, opt.policy);
      rec.observe(id, std::max(std::abs(b.value.z1() - want.z1()), std::abs(b.value.z2() - want.z2())), label);
      rec.observe(trunc, b.truncated ? 1.0 : 0.0, label);
    } catch (const Error& e) {
      rec.error(id, e.what(), label);
      rec.error(trunc, e.what(), label);
    }
  }
  return rec.finish();
}

SuiteReport suite_cauchy_riemann(const SuiteOptions& opt) {
  Recorder rec("cauchy-riemann", opt);
  Rng rng(opt.seed);
  const size_t id = rec.check("finite_difference_residual_scaled", 1e-6);
  for (int i = 0; i < rec.draws(); ++i) {
    auto p = draw_params(rng);
    Complex z1 = draw_c(rng, -1, 1, 1), z2 = draw_c(rng, -1, 1, 1);
    rec.run(id, [&] {
      Bicomplex v = prabhakar(p, Bicomplex::from_components(z1.real(), z1.imag(), z2.real(), z2.imag()), opt.policy);
      double scale = 1.0 + std::max(std::abs(v.z1()), std::abs(v.z2()));
      return cauchy_riemann_residual(p, z1, z2, 1e-5, opt.policy) / scale;
    }, draw_label(i, text(p)));
  }
  return rec.finish();
}

SuiteReport suite_kinetic_special(const SuiteOptions& opt) {
  Recorder rec("kinetic-special", opt);
  Rng rng(opt.seed);
  const size_t analytic = rec.check("analytic_case_pointwise", 1e-10);
  const size_t res = rec.check("volterra_residual_over_N0", 1e-4);
  TimeGrid g = TimeGrid::covering(2.0, 1e-3);
  rec.run(analytic, [&] {
    const double N0 = 1.7;
    GridFunction N = solve_special(N0, PrabhakarParams::make(1, 1, 1), 1.0, 1, g, opt.policy);
    double e = 0.0;
    for (int i = 0; i < g.n_points; ++i) {
      double t = g.t(i), want = N0 * (1 - t) * std::exp(-t);
      e = std::max({e, std::abs(N.values[i].z1() - want), std::abs(N.values[i].z2() - want)});
    }
    return e;
  }, [] { return std::string("N0 (1 - t) e^-t"); });
  for (int i = 0; i < rec.draws(); ++i) {
    double s = uniform(rng, 0.5, 2.0), t = uniform(rng, 1.0, 2.0), d = uniform(rng, 0.5, 2.0);
    double a = uniform(rng, 0.1, 2.0), N0 = uniform(rng, 0.5, 5.0);
    int n = 1 + i % 3;
    auto p = PrabhakarParams::make(s, t, d);
    rec.run(res, [&] {
      auto prob = binomial_problem(N0, p, a, n, g, opt.policy);
      return volterra_residual(solve_special(N0, p, a, n, g, opt.policy), prob) / N0;
    }, draw_label(i, text(p) + " a=" + std::to_string(a) + " n=" + std::to_string(n)));
  }
  return rec.finish();
}

SuiteReport suite_kinetic_general(const SuiteOptions& opt) {
  Recorder rec("kinetic-general", opt);
  Rng rng(opt.seed);
  const size_t match = rec.check("general_vs_special_over_N0", 1e-5);
  const size_t refuse = rec.check("refuses_divergent_series", 0.0);
  const size_t weighted = rec.check("residual_weighted_kernel_index", kInf, true);
  const size_t unweighted = rec.check("residual_unweighted_kernel_index", kInf, true);
  TimeGrid g = TimeGrid::covering(1.0, 1e-3);
  for (int i = 0; i < rec.draws(); ++i) {
    double s = uniform(rng, 0.5, 2.0), t = uniform(rng, 1.0, 2.0), d = uniform(rng, 0.5, 2.0);
    double a = uniform(rng, 0.1, 0.6), N0 = uniform(rng, 0.5, 5.0);
    int n = 2 + i % 2;
    auto p = PrabhakarParams::make(s, t, d);
    auto label = draw_label(i, text(p) + " a=" + std::to_string(a) + " n=" + std::to_string(n));
    try {
      auto prob = binomial_problem(N0, p, a, n, g, opt.policy);
      SeriesSolution sol = solve_general(prob, 200, opt.policy);
      GridFunction want = solve_special(N0, p, a, n, g, opt.policy);
      double e = 0.0;
      for (int k = 0; k < g.n_points; ++k) {
        e = std::max({e, std::abs(sol.values.values[k].z1() - want.values[k].z1()),
                      std::abs(sol.values.values[k].z2() - want.values[k].z2())});
      }
      rec.observe(match, e / N0, label);
      if (i < 3) {
        rec.observe(weighted, volterra_residual(sol.values, prob) / N0, label);
        SeriesSolution alt = solve_general(prob, 200, opt.policy, 1e-9, KernelIndex::unweighted);
        rec.observe(unweighted, volterra_residual(alt.values, prob) / N0, label);
      }
    } catch (const Error& e) {
      rec.error(match, e.what(), label);
    }

    // A dominant secondary term makes r(T_end) ≥ 1.
    KineticProblem div;
    TimeGrid coarse = TimeGrid::covering(3.0, 1e-2);
    div.N0 = 1.0;
    div.a = {Hyperbolic(uniform(rng, 0.05, 0.2)), Hyperbolic(uniform(rng, 3.0, 6.0))};
    div.nu = {Bicomplex(uniform(rng, 0.8, 1.2)), Bicomplex(uniform(rng, 0.3, 0.7))};
    div.f = GridFunction(coarse);
    for (auto& v : div.f.values) v = Bicomplex(1.0);
    double raised = 1.0;
    std::string other;
    try {
      (void)solve_general(div, 200, opt.policy);
    } catch (const SeriesDivergence&) {
      raised = 0.0;
    } catch (const Error& e) {
      other = e.what();
    }
    rec.observe(refuse, raised, draw_label(i, other));
  }
  return rec.finish();
}

SuiteReport suite_euler_gamma(const SuiteOptions& opt) {
  Recorder rec("euler-gamma", opt);
  Rng rng(opt.seed);
  const size_t id = rec.check("truncated_product_rel", 1e-4);
  constexpr int kFactors = 100000;
  for (int i = 0; i < rec.draws(); ++i) {
    Bicomplex z = draw_b(rng, 0.5, 3.0, 1.0);
    rec.run(id, [&] {
      // Γ(ζ) = (1/ζ) Π (1 + 1/n)^ζ / (1 + ζ/n), componentwise
      Complex out[2];
      for (int r = 1; r <= 2; ++r) {
        Complex x = z.component(r), log_p = -std::log(x);
        for (int n = 1; n <= kFactors; ++n) log_p += x * std::log1p(1.0 / n) - std::log(1.0 + x / double(n));
        out[r - 1] = std::exp(log_p);
      }
      return worst_of(Bicomplex::from_idempotent(out[0], out[1]), gamma_bicomplex(z), rel_err);
    }, draw_label(i, "zeta=" + text(z)));
  }
  return rec.finish();
}

SuiteReport suite_rl(const SuiteOptions& opt) {
  Recorder rec("rl", opt);
  Rng rng(opt.seed);
  const size_t power_id = rec.check("power_function_exact", 1e-5);
  const size_t semi = rec.check("semigroup", 1e-4);
  const size_t split_id = rec.check("componentwise_split_exact", 0.0);
  const size_t lap = rec.check("laplace_rule", 1e-5);
  TimeGrid g = TimeGrid::covering(1.0, 1e-3);
  auto sample = [&](auto f) {
    GridFunction out(g);
    for (int i = 0; i < g.n_points; ++i) out.values[i] = f(g.t(i));
    return out;
  };
  for (int i = 0; i < rec.draws(); ++i) {
    Bicomplex mu = draw_b(rng, 0.3, 2.0, 0.3);
    Complex pw[2] = {draw_c(rng, 1.0, 3.0, 0.5), draw_c(rng, 1.0, 3.0, 0.5)};
    auto label = draw_label(i, "mu=" + text(mu));
    auto real_pow = [](double t, Complex e) { return t == 0.0 ? Complex(0.0) : std::exp(e * std::log(t)); };
    rec.run(power_id, [&] {
      auto f = sample([&](double t) { return Bicomplex::from_idempotent(real_pow(t, pw[0]), real_pow(t, pw[1])); });
      auto I = rl_fractional_integral(f, mu);
      double e = 0.0;
      for (int k = 0; k < g.n_points; ++k) {
        for (int r = 1; r <= 2; ++r) {
          Complex p = pw[r - 1], m = mu.component(r);
          Complex want = gamma(p + 1.0) * recip_gamma(p + m + 1.0) * real_pow(g.t(k), p + m);
          e = std::max(e, std::abs(I.values[k].component(r) - want));
        }
      }
      return e;
    }, label);
    rec.run(semi, [&] {
      Bicomplex nu = draw_b(rng, 0.3, 1.5, 0.2);
      auto lin = sample([](double t) { return Bicomplex(t); });
      auto lhs = rl_fractional_integral(rl_fractional_integral(lin, mu), nu);
      auto rhs = rl_fractional_integral(lin, mu + nu);
      double e = 0.0;
      for (int k = 0; k < g.n_points; ++k) {
        e = std::max({e, std::abs(lhs.values[k].z1() - rhs.values[k].z1()),
                      std::abs(lhs.values[k].z2() - rhs.values[k].z2())});
      }
      return e;
    }, label);
    rec.run(split_id, [&] {
      auto f = sample([](double t) { return Bicomplex::from_idempotent(std::cos(t), {t, 1.0}); });
      auto both = rl_fractional_integral(f, mu);
      auto f1 = sample([](double t) { return Bicomplex(std::cos(t)); });
      auto f2 = sample([](double t) { return Bicomplex(Complex(t, 1.0)); });
      auto s1 = rl_fractional_integral(f1, Bicomplex(mu.z1()));
      auto s2 = rl_fractional_integral(f2, Bicomplex(mu.z2()));
      double bad = 0.0;
      for (int k = 0; k < g.n_points; ++k) {
        if (both.values[k].z1() != s1.values[k].z1() || both.values[k].z2() != s2.values[k].z2()) bad = 1.0;
      }
      return bad;
    }, label);
  }
  // ∫ e^{−ζt} RL^μ f = ζ^{−μ} f̂ with f = e^{−t}; the t^μ onset is transformed exactly.
  TimeGrid lg = TimeGrid::covering(14.0, 2e-3);
  GridFunction f(lg);
  for (int k = 0; k < lg.n_points; ++k) f.values[k] = Bicomplex(std::exp(-lg.t(k)));
  for (double mu : {0.25, 0.5, 1.0}) {
    rec.run(lap, [&] {
      auto I = rl_fractional_integral(f, mu);
      for (int k = 0; k < lg.n_points; ++k) I.values[k] -= Bicomplex(std::pow(lg.t(k), mu) / std::tgamma(mu + 1));
      double got = grid_laplace(I, 2.0).re() + std::pow(2.0, -mu - 1);
      return std::fabs(got - std::pow(2.0, -mu) / 3.0);
    }, [mu] { return "mu=" + std::to_string(mu); });
  }
  return rec.finish();
}

using SuiteFn = SuiteReport (*)(const SuiteOptions&);

struct Entry {
  const char* name;
  SuiteFn fn;
  int draws;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = {
      {"algebra", suite_algebra, 10000},
      {"scalar", suite_scalar, 100},
      {"recurrence", suite_recurrence, 1000},
      {"differential", suite_differential, 200},
      {"integral", suite_integral, 100},
      {"laplace", suite_laplace, 200},
      {"mellin", suite_mellin, 100},
      {"barnes", suite_barnes, 50},
      {"cauchy-riemann", suite_cauchy_riemann, 100},
      {"kinetic-special", suite_kinetic_special, 50},
      {"kinetic-general", suite_kinetic_general, 20},
      {"euler-gamma", suite_euler_gamma, 50},
      {"rl", suite_rl, 20},
  };
  return r;
}

const Entry& lookup(const std::string& name) {
  for (const auto& e : registry()) {
    if (name == e.name) return e;
  }
  throw DomainError("unknown verify suite '" + name + "'");
}

nlohmann::ordered_json report_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["draws"] = r.draws;
  j["passed"] = r.passed;
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["count"] = c.count;
    cj["worst"] = std::isfinite(c.worst) ? nlohmann::ordered_json(c.worst) : nlohmann::ordered_json("inf");
    if (c.informational) {
      cj["informational"] = true;
    } else {
      cj["tolerance"] = c.tolerance;
      cj["passed"] = c.passed;
    }
    checks.push_back(cj);
  }
  j["failures"] = r.failures;
  return j;
}

}  // namespace

const Check* SuiteReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

int default_draws(const std::string& suite) { return lookup(suite).draws; }

SuiteReport run_suite(const std::string& suite, const SuiteOptions& options) {
  const Entry& e = lookup(suite);
  if (options.draws < 0) throw DomainError("draws must be >= 0");
  options.policy.validate();
  auto start = std::chrono::steady_clock::now();
  SuiteReport r = e.fn(options);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<SuiteReport> run(const std::string& suite, const SuiteOptions& options) {
  std::vector<SuiteReport> out;
  if (suite == "all") {
    for (const auto& name : suite_names()) out.push_back(run_suite(name, options));
  } else {
    out.push_back(run_suite(suite, options));
  }
  return out;
}

std::string to_json(const SuiteReport& report) { return report_json(report).dump(2); }

std::string to_json(const std::vector<SuiteReport>& reports) {
  if (reports.size() == 1) return to_json(reports.front());
  nlohmann::ordered_json j;
  bool passed = true;
  auto& arr = j["suites"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    passed = passed && r.passed;
    arr.push_back(report_json(r));
  }
  j["passed"] = passed;
  return j.dump(2);
}

}  // namespace biprab::verify
