#include "biprabhakar/prabhakar.hpp"

#include <algorithm>
#include <cmath>

#include "biprabhakar/errors.hpp"
#include "componentwise.hpp"

namespace biprab {

using detail::componentwise;

namespace {

bool finite(const Bicomplex& z) { return z.is_finite(); }

Complex scalar(const Complex& sigma, const Complex& tau, const Complex& delta, const Complex& z,
               const SeriesPolicy& policy) {
  return ScalarPrabhakar(sigma, tau, delta, policy).evaluate(z).value;
}

// E^{δ+dd}_{ς,τ+dt}(ζ) per component.
Bicomplex shifted(const PrabhakarParams& p, const Bicomplex& dtau, const Bicomplex& ddelta, const Bicomplex& zeta,
                  const SeriesPolicy& policy) {
  return componentwise([&](int r) {
    return scalar(p.sigma_c(r), p.tau_c(r) + dtau.component(r), p.delta_c(r) + ddelta.component(r),
                  zeta.component(r), policy);
  });
}

void require_shift(const Bicomplex& tau, int n, const char* what) {
  if (!(tau.z1().real() > n && tau.z2().real() > n)) {
    throw DomainError(std::string(what) + ": |Im_j(tau)| < Re(tau) - " + std::to_string(n) + " violated");
  }
}

}  // namespace

PrabhakarParams PrabhakarParams::make(const Bicomplex& sigma, const Bicomplex& tau, const Bicomplex& delta) {
  if (!finite(sigma) || !finite(tau) || !finite(delta)) throw DomainError("parameters must be finite");
  if (!param_domain_ok(sigma)) throw DomainError("|Im_j(sigma)| < Re(sigma) violated");
  if (!param_domain_ok(tau)) throw DomainError("|Im_j(tau)| < Re(tau) violated");
  return {sigma, tau, delta};
}

BicomplexPrabhakar::BicomplexPrabhakar(const PrabhakarParams& p, const SeriesPolicy& policy)
    : comp_{ScalarPrabhakar(p.sigma_c(1), p.tau_c(1), p.delta_c(1), policy),
            ScalarPrabhakar(p.sigma_c(2), p.tau_c(2), p.delta_c(2), policy)} {}

Bicomplex BicomplexPrabhakar::operator()(const Bicomplex& zeta) const {
  return componentwise([&](int r) { return comp_[r - 1].evaluate(zeta.component(r)).value; });
}

Bicomplex prabhakar(const PrabhakarParams& params, const Bicomplex& zeta, const SeriesPolicy& policy) {
  return componentwise([&](int r) {
    return scalar(params.sigma_c(r), params.tau_c(r), params.delta_c(r), zeta.component(r), policy);
  });
}

Bicomplex gamma_bicomplex(const Bicomplex& zeta) {
  return componentwise([&](int r) { return gamma(zeta.component(r)); });
}

Bicomplex pochhammer(const Bicomplex& delta, int n) {
  if (n < 0) throw DomainError("pochhammer: n >= 0 required");
  Bicomplex out(1.0);
  for (int k = 0; k < n; ++k) out *= delta + Bicomplex(static_cast<double>(k));
  return out;
}

Bicomplex derivative(const PrabhakarParams& params, const Bicomplex& zeta, int n, const SeriesPolicy& policy) {
  if (n < 0) throw DomainError("derivative: n >= 0 required");
  if (n == 0) return prabhakar(params, zeta, policy);
  Bicomplex nd(static_cast<double>(n));
  return pochhammer(params.delta, n) * shifted(params, params.sigma * nd, nd, zeta, policy);
}

Bicomplex kernel_derivative(const PrabhakarParams& params, const Bicomplex& lambda, const Bicomplex& zeta, int n,
                            const SeriesPolicy& policy) {
  if (n < 0) throw DomainError("kernel_derivative: n >= 0 required");
  require_shift(params.tau, n, "kernel_derivative");
  if (zeta.in_null_cone()) throw NullConeError("kernel_derivative: zeta must be invertible");
  Bicomplex arg = lambda * power(zeta, params.sigma);
  Bicomplex nd(static_cast<double>(n));
  Bicomplex e = shifted(params, -nd, 0.0, arg, policy);
  return power(zeta, params.tau - nd - Bicomplex(1.0)) * e;
}

RecurrenceResiduals recurrence_residuals(const PrabhakarParams& params, const Bicomplex& zeta,
                                         const SeriesPolicy& policy) {
  const Bicomplex one(1.0);
  RecurrenceResiduals out;
  out.value = prabhakar(params, zeta, policy);
  Bicomplex lower = shifted(params, 0.0, -one, zeta, policy);
  Bicomplex up_tau = shifted(params, params.sigma, 0.0, zeta, policy);
  out.first = zeta * up_tau - (out.value - lower);
  if (params.tau.z1().real() > 1.0 && params.tau.z2().real() > 1.0) {
    Bicomplex tau_down = shifted(params, -one, 0.0, zeta, policy);
    Bicomplex delta_up = shifted(params, 0.0, one, zeta, policy);
    Bicomplex sd = params.sigma * params.delta;
    out.second = (params.tau - sd - one) * out.value - (tau_down - sd * delta_up);
  }
  return out;
}

Bicomplex euler_operator_residual(const PrabhakarParams& params, const Bicomplex& zeta, const SeriesPolicy& policy) {
  Bicomplex d1 = derivative(params, zeta, 1, policy);
  Bicomplex e = prabhakar(params, zeta, policy);
  Bicomplex up = shifted(params, 0.0, 1.0, zeta, policy);
  return zeta * d1 + params.delta * e - params.delta * up;
}

double cauchy_riemann_residual(const PrabhakarParams& params, Complex z1, Complex z2, double h,
                               const SeriesPolicy& policy) {
  if (!(h > 0.0)) throw DomainError("cauchy_riemann_residual: h > 0 required");
  BicomplexPrabhakar f(params, policy);
  const Complex i(0.0, 1.0);
  // f(z1 + i2 z2) split into f1 + i2 f2.
  auto parts = [&](Complex a, Complex b) {
    Bicomplex zeta = Bicomplex::from_idempotent(a - i * b, a + i * b);
    Bicomplex v = f(zeta);
    return std::pair{0.5 * (v.z1() + v.z2()), (v.z2() - v.z1()) / (2.0 * i)};
  };
  auto [f1p, f2p] = parts(z1 + h, z2);
  auto [f1m, f2m] = parts(z1 - h, z2);
  auto [g1p, g2p] = parts(z1, z2 + h);
  auto [g1m, g2m] = parts(z1, z2 - h);
  Complex df1_dz1 = (f1p - f1m) / (2 * h), df2_dz1 = (f2p - f2m) / (2 * h);
  Complex df1_dz2 = (g1p - g1m) / (2 * h), df2_dz2 = (g2p - g2m) / (2 * h);
  return std::max(std::abs(df1_dz1 - df2_dz2), std::abs(df2_dz1 + df1_dz2));
}

Bicomplex kernel_integral(const PrabhakarParams& params, const Bicomplex& lambda, const Bicomplex& zeta,
                          const SeriesPolicy& policy) {
  if (!param_domain_ok(params.delta)) throw DomainError("|Im_j(delta)| < Re(delta) violated");
  if (!param_domain_ok(params.tau)) throw DomainError("|Im_j(tau)| < Re(tau) violated");
  Bicomplex arg = lambda * power(zeta, params.sigma);
  return power(zeta, params.tau) * shifted(params, 1.0, 0.0, arg, policy);
}

}  // namespace biprab
