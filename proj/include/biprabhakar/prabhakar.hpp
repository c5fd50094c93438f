#pragma once

#include <array>
#include <optional>

#include "biprabhakar/bicomplex.hpp"
#include "biprabhakar/special.hpp"

namespace biprab {

/// Parameter triple (ς, τ, δ) of the bicomplex Prabhakar function.
struct PrabhakarParams {
  Bicomplex sigma{1.0};
  Bicomplex tau{1.0};
  Bicomplex delta{1.0};

  /// Checks |Im_j(ς)| < Re(ς), |Im_j(τ)| < Re(τ) and finiteness of δ.
  /// Throws DomainError naming the violated condition.
  static PrabhakarParams make(const Bicomplex& sigma, const Bicomplex& tau, const Bicomplex& delta);
  /// No checks beyond Re(ς_r) > 0, which the series itself enforces.
  static PrabhakarParams unchecked(const Bicomplex& sigma, const Bicomplex& tau, const Bicomplex& delta) {
    return {sigma, tau, delta};
  }

  Complex sigma_c(int r) const { return sigma.component(r); }
  Complex tau_c(int r) const { return tau.component(r); }
  Complex delta_c(int r) const { return delta.component(r); }
  /// δ_r = 0: that component reduces to the constant 1/Γ(τ_r).
  bool constant_component(int r) const { return delta.component(r) == 0.0; }
};

/// Both idempotent evaluators for one parameter triple, for repeated use.
/// Not safe for concurrent use (see ScalarPrabhakar).
class BicomplexPrabhakar {
 public:
  explicit BicomplexPrabhakar(const PrabhakarParams& p, const SeriesPolicy& policy = {});

  Bicomplex operator()(const Bicomplex& zeta) const;
  const ScalarPrabhakar& component(int r) const { return comp_[r - 1]; }

 private:
  std::array<ScalarPrabhakar, 2> comp_;
};

/// E^δ_{ς,τ}(ζ) = E^{δ1}_{ς1,τ1}(ζ1) e1 + E^{δ2}_{ς2,τ2}(ζ2) e2.
Bicomplex prabhakar(const PrabhakarParams& params, const Bicomplex& zeta, const SeriesPolicy& policy = {});

/// Γ(ζ1) e1 + Γ(ζ2) e2. PoleError carries the component index.
Bicomplex gamma_bicomplex(const Bicomplex& zeta);

/// (δ)_n componentwise.
Bicomplex pochhammer(const Bicomplex& delta, int n);

/// n-th derivative d^n/dζ^n E^δ_{ς,τ}(ζ) = (δ)_n E^{δ+n}_{ς,τ+nς}(ζ).
Bicomplex derivative(const PrabhakarParams& params, const Bicomplex& zeta, int n,
                     const SeriesPolicy& policy = {});

/// d^n/dζ^n [ζ^{τ−1} E^δ_{ς,τ}(λζ^ς)] = ζ^{τ−n−1} E^δ_{ς,τ−n}(λζ^ς).
/// Requires |Im_j(τ)| < Re(τ) − n and an invertible ζ.
Bicomplex kernel_derivative(const PrabhakarParams& params, const Bicomplex& lambda, const Bicomplex& zeta,
                            int n, const SeriesPolicy& policy = {});

struct RecurrenceResiduals {
  /// ζ E^δ_{ς,ς+τ}(ζ) − [E^δ_{ς,τ}(ζ) − E^{δ−1}_{ς,τ}(ζ)]
  Bicomplex first;
  /// (τ − ςδ − 1) E^δ_{ς,τ}(ζ) − [E^δ_{ς,τ−1}(ζ) − ςδ E^{δ+1}_{ς,τ}(ζ)];
  /// empty unless |Im_j(τ)| < Re(τ) − 1.
  std::optional<Bicomplex> second;
  /// E^δ_{ς,τ}(ζ), the natural scale of both residuals.
  Bicomplex value;
};

RecurrenceResiduals recurrence_residuals(const PrabhakarParams& params, const Bicomplex& zeta,
                                         const SeriesPolicy& policy = {});

/// (ζ d/dζ + δ) E^δ_{ς,τ}(ζ) − δ E^{δ+1}_{ς,τ}(ζ), with the derivative from
/// the parameter-shift form.
Bicomplex euler_operator_residual(const PrabhakarParams& params, const Bicomplex& zeta,
                                  const SeriesPolicy& policy = {});

/// Splits f(z1 + i2 z2) = f1 + i2 f2 and returns the larger of
/// |∂f1/∂z1 − ∂f2/∂z2| and |∂f2/∂z1 + ∂f1/∂z2| by central differences.
double cauchy_riemann_residual(const PrabhakarParams& params, Complex z1, Complex z2, double h = 1e-5,
                               const SeriesPolicy& policy = {});

/// ∫_0^ζ t^{τ−1} E^δ_{ς,τ}(λ t^ς) dt = ζ^τ E^δ_{ς,τ+1}(λ ζ^ς), integrated
/// along the componentwise segments 0 → ζ_r.
Bicomplex kernel_integral(const PrabhakarParams& params, const Bicomplex& lambda, const Bicomplex& zeta,
                          const SeriesPolicy& policy = {});

}  // namespace biprab
