#include <cmath>
#include <numbers>
#include <random>

#include "biprabhakar/errors.hpp"
#include "biprabhakar/prabhakar.hpp"
#include "doctest.h"
#include "support/approx.hpp"

using namespace biprab;
using testing::mixed_err;
using testing::rel_err;

namespace {

constexpr double kE = std::numbers::e;

Complex draw_c(std::mt19937_64& rng, double re_lo, double re_hi, double im) {
  std::uniform_real_distribution<double> re(re_lo, re_hi), ii(-im, im);
  double a = re(rng);
  return {a, ii(rng)};
}

Bicomplex draw_b(std::mt19937_64& rng, double re_lo, double re_hi, double im) {
  Complex a = draw_c(rng, re_lo, re_hi, im);
  Complex b = draw_c(rng, re_lo, re_hi, im);
  return Bicomplex::from_idempotent(a, b);
}

Bicomplex draw_disc(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> r(0.0, radius), th(-std::numbers::pi, std::numbers::pi);
  return Bicomplex::from_idempotent(std::polar(r(rng), th(rng)), std::polar(r(rng), th(rng)));
}

// Radius keeping the peak series term of E_{ς}(z) below about e^30.
double safe_radius(Complex sigma) {
  double a = sigma.real();
  return std::pow(30.0 * std::abs(sigma) / a, a) * std::exp(-sigma.imag() * std::arg(sigma));
}

Bicomplex draw_arg(std::mt19937_64& rng, const PrabhakarParams& p, double radius) {
  std::uniform_real_distribution<double> th(-std::numbers::pi, std::numbers::pi), u(0.0, 1.0);
  Complex out[2];
  for (int r = 1; r <= 2; ++r) out[r - 1] = std::polar(u(rng) * std::min(radius, safe_radius(p.sigma_c(r))), th(rng));
  return Bicomplex::from_idempotent(out[0], out[1]);
}

double worst(const Bicomplex& got, const Bicomplex& want) {
  return std::max(rel_err(got.z1(), want.z1()), rel_err(got.z2(), want.z2()));
}

PrabhakarParams real_params(double s, double t, double d) { return PrabhakarParams::make(s, t, d); }

}  // namespace

TEST_CASE("prabhakar examples") {
  auto p = real_params(1, 1, 1);
  Bicomplex v = prabhakar(p, 1.0);
  CHECK(std::fabs(v.re() - kE) < 1e-14);
  CHECK(v.z1() == v.z2());

  Bicomplex z = Bicomplex::from_idempotent(std::log(2.0), std::log(3.0));
  Bicomplex w = prabhakar(p, z);
  CHECK(rel_err(w.z1(), 2.0) < 1e-14);
  CHECK(rel_err(w.z2(), 3.0) < 1e-14);

  auto q = PrabhakarParams::make(1.0, Bicomplex::from_idempotent(2.0, 3.5), 1.7);
  Bicomplex at0 = prabhakar(q, 0.0);
  CHECK(rel_err(at0.z1(), 1.0) < 1e-15);
  CHECK(rel_err(at0.z2(), recip_gamma(3.5)) < 1e-14);
}

TEST_CASE("prabhakar is the componentwise scalar series") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    auto p = PrabhakarParams::make(draw_b(rng, 0.2, 3, 1), draw_b(rng, 0.2, 3, 1), draw_b(rng, 0.2, 3, 1));
    Bicomplex z = draw_arg(rng, p, 5);
    Bicomplex v = prabhakar(p, z);
    for (int r = 1; r <= 2; ++r) {
      Complex s = prabhakar_complex({p.sigma_c(r), p.tau_c(r), p.delta_c(r), z.component(r)}, {});
      CHECK(v.component(r) == s);
    }
  }
}

TEST_CASE("parameter validation") {
  Bicomplex bad = Bicomplex::from_components(0.5, 0, 0, 1);
  CHECK_THROWS_WITH_AS(PrabhakarParams::make(bad, 1.0, 1.0), "|Im_j(sigma)| < Re(sigma) violated", DomainError);
  CHECK_THROWS_WITH_AS(PrabhakarParams::make(1.0, bad, 1.0), "|Im_j(tau)| < Re(tau) violated", DomainError);
  CHECK_NOTHROW(PrabhakarParams::make(1.0, 1.0, bad));
}

TEST_CASE("errors carry the failing component") {
  Bicomplex z = Bicomplex::from_idempotent(1.0, 80.0);
  try {
    prabhakar(real_params(1, 1, 1), z);
    FAIL("expected NoConvergence");
  } catch (const NoConvergence& e) {
    CHECK(e.component() == std::optional<int>(2));
  }
  try {
    gamma_bicomplex(Bicomplex::from_idempotent(-3.0, 2.0));
    FAIL("expected PoleError");
  } catch (const PoleError& e) {
    CHECK(e.component() == std::optional<int>(1));
  }
}

TEST_CASE("gamma_bicomplex") {
  CHECK(rel_err(gamma_bicomplex(1.0).z1(), 1.0) < 1e-15);
  Bicomplex g = gamma_bicomplex(Bicomplex::from_idempotent(2.0, 3.0));
  CHECK(rel_err(g.z1(), 1.0) < 1e-14);
  CHECK(rel_err(g.z2(), 2.0) < 1e-14);
}

TEST_CASE("Euler product agrees with gamma") {
  std::mt19937_64 rng(5);
  constexpr int kFactors = 100000;
  for (int i = 0; i < 5; ++i) {
    Complex z = draw_c(rng, 1, 3, 1);
    // Γ(z) = (1/z) Π (1 + 1/n)^z / (1 + z/n)
    Complex log_p = -std::log(z);
    for (int n = 1; n <= kFactors; ++n) log_p += z * std::log1p(1.0 / n) - std::log(1.0 + z / double(n));
    CHECK(rel_err(std::exp(log_p), gamma(z)) < 1e-4);
  }
}

TEST_CASE("pochhammer and derivative") {
  CHECK(pochhammer(2.0, 3).re() == 24.0);
  CHECK(pochhammer(Bicomplex::from_idempotent(1.0, -2.0), 3) == Bicomplex::from_idempotent(6.0, 0.0));
  auto p = real_params(1, 1, 1);
  CHECK(derivative(p, 0.4, 0, {}) == prabhakar(p, 0.4));
  CHECK(std::fabs(derivative(p, 1.0, 1).re() - kE) < 1e-14);
  CHECK_THROWS_AS(derivative(p, 1.0, -1), DomainError);
}

TEST_CASE("derivative matches central differences") {
  std::mt19937_64 rng(21);
  const double h = 1e-5;
  for (int i = 0; i < 40; ++i) {
    auto p = PrabhakarParams::make(draw_b(rng, 0.2, 3, 1), draw_b(rng, 0.2, 3, 1), draw_b(rng, 0.2, 3, 1));
    Bicomplex z = draw_arg(rng, p, 4);
    Bicomplex fd = (prabhakar(p, z + h) - prabhakar(p, z - h)) * Bicomplex(0.5 / h);
    Bicomplex d = derivative(p, z, 1);
    for (int r = 1; r <= 2; ++r) CHECK(mixed_err(d.component(r), fd.component(r)) < 1e-6);
  }
}

TEST_CASE("kernel_derivative") {
  auto p = real_params(1, 2, 1);
  // t E_{1,2}(t) = e^t − 1
  for (double t : {0.3, 1.0, 2.5}) {
    Bicomplex k = kernel_derivative(p, 1.0, t, 1);
    CHECK(std::fabs(k.re() - std::exp(t)) < 1e-13 * std::exp(t));
  }
  Bicomplex lam = Bicomplex::from_idempotent({-0.7, 0.2}, {0.4, -0.5});
  Bicomplex z = Bicomplex::from_idempotent({0.8, 0.3}, {1.4, -0.2});
  auto q = PrabhakarParams::make(Bicomplex::from_idempotent(0.8, 1.3), Bicomplex::from_idempotent({2.4, 0.3}, 1.9),
                                 Bicomplex::from_idempotent(1.2, {0.7, 0.4}));
  Bicomplex k0 = kernel_derivative(q, lam, z, 0);
  Bicomplex want0 = power(z, q.tau - Bicomplex(1.0)) * prabhakar(q, lam * power(z, q.sigma));
  CHECK(worst(k0, want0) < 1e-14);
  const double h = 1e-5;
  auto g = [&](const Bicomplex& x) { return kernel_derivative(q, lam, x, 0); };
  Bicomplex fd = (g(z + h) - g(z - h)) * Bicomplex(0.5 / h);
  CHECK(worst(kernel_derivative(q, lam, z, 1), fd) < 1e-6);

  CHECK_THROWS_AS(kernel_derivative(real_params(1, 0.8, 1), 1.0, 1.0, 1), DomainError);
  CHECK_THROWS_AS(kernel_derivative(p, 1.0, Bicomplex::e1(), 1), NullConeError);
}

TEST_CASE("recurrence residuals") {
  auto at0 = recurrence_residuals(real_params(1.3, 0.7, 2.0), 0.0);
  CHECK(at0.first.is_zero());
  CHECK_FALSE(at0.second.has_value());

  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    auto p = PrabhakarParams::make(draw_b(rng, 0.2, 3, 1), draw_b(rng, 1.2, 3, 1), draw_b(rng, 0.2, 3, 1));
    Bicomplex z = draw_arg(rng, p, 5);
    auto res = recurrence_residuals(p, z);
    REQUIRE(res.second.has_value());
    for (int r = 1; r <= 2; ++r) {
      double scale = 1 + std::abs(res.value.component(r));
      CHECK(std::abs(res.first.component(r)) <= 1e-10 * scale);
      CHECK(std::abs(res.second->component(r)) <= 1e-10 * scale);
    }
  }
  // δ = 1 makes E^{δ−1} the constant 1/Γ(τ).
  auto one = recurrence_residuals(real_params(0.6, 1.4, 1.0), Bicomplex::from_idempotent(-2.0, {1.0, 1.5}));
  CHECK(std::abs(one.first.z1()) < 1e-11);
  CHECK(std::abs(one.first.z2()) < 1e-11);
}

TEST_CASE("Euler operator identity") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 30; ++i) {
    auto p = PrabhakarParams::make(draw_b(rng, 0.2, 3, 1), draw_b(rng, 0.2, 3, 1), draw_b(rng, 0.2, 3, 1));
    Bicomplex z = draw_arg(rng, p, 5);
    Bicomplex res = euler_operator_residual(p, z);
    Bicomplex up = prabhakar(PrabhakarParams::unchecked(p.sigma, p.tau, p.delta + Bicomplex(1.0)), z);
    for (int r = 1; r <= 2; ++r) {
      CHECK(std::abs(res.component(r)) <= 1e-10 * (1 + std::abs(p.delta_c(r) * up.component(r))));
    }
  }
}

TEST_CASE("Cauchy-Riemann residual") {
  auto p = real_params(1, 1, 1);
  CHECK(cauchy_riemann_residual(p, 0.3, 0.2) < 1e-7);
  CHECK(cauchy_riemann_residual(p, {0.3, 0.4}, 0.0) < 1e-7);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    auto q = PrabhakarParams::make(draw_b(rng, 0.2, 3, 1), draw_b(rng, 0.2, 3, 1), draw_b(rng, 0.2, 3, 1));
    Complex z1 = draw_c(rng, -1, 1, 1), z2 = draw_c(rng, -1, 1, 1);
    CHECK(cauchy_riemann_residual(q, z1, z2) < 1e-6);
  }
  CHECK_THROWS_AS(cauchy_riemann_residual(p, 0.3, 0.2, 0.0), DomainError);
}

TEST_CASE("kernel_integral") {
  auto p = real_params(1, 1, 1);
  for (double t : {0.5, 1.0, 3.0}) {
    CHECK(std::fabs(kernel_integral(p, 1.0, t).re() - std::expm1(t)) < 1e-13 * std::exp(t));
  }
  auto q = PrabhakarParams::make(0.7, 1.5, 1.0);
  Bicomplex z = Bicomplex::from_idempotent({0.5, 0.2}, 1.1);
  Bicomplex lam = Bicomplex::from_idempotent(-1.0, {0.3, 0.3});
  Bicomplex got = kernel_integral(q, lam, z);
  for (int r = 1; r <= 2; ++r) {
    Complex zr = z.component(r);
    Complex want = std::pow(zr, 1.5) * ml_two_param(0.7, 2.5, lam.component(r) * std::pow(zr, 0.7));
    CHECK(rel_err(got.component(r), want) < 1e-13);
  }
  CHECK(kernel_integral(real_params(1, 1.5, 1), 1.0, 1e-300).is_zero());
  CHECK_THROWS_AS(kernel_integral(PrabhakarParams::make(1.0, 1.0, Bicomplex::from_components(0.2, 0, 0, 1)), 1.0, 1.0),
                  DomainError);
}

TEST_CASE("reduction chain") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 40; ++i) {
    Bicomplex s = draw_b(rng, 0.3, 2.5, 0.5), t = draw_b(rng, 0.3, 2.5, 0.5);
    Bicomplex z = draw_arg(rng, PrabhakarParams::make(s, t, 1.0), 4);
    Bicomplex v = prabhakar(PrabhakarParams::make(s, t, 1.0), z);
    Bicomplex one = prabhakar(PrabhakarParams::make(s, 1.0, 1.0), z);
    for (int r = 1; r <= 2; ++r) {
      CHECK(mixed_err(v.component(r), ml_two_param(s.component(r), t.component(r), z.component(r))) < 1e-13);
      CHECK(mixed_err(one.component(r), ml_two_param(s.component(r), 1.0, z.component(r))) < 1e-13);
    }
  }
}
