#pragma once

#include "biprabhakar/grid.hpp"
#include "biprabhakar/prabhakar.hpp"
#include "biprabhakar/quadrature.hpp"

namespace biprab {

/// Vertical-line contour for the Mellin–Barnes evaluator.
struct ContourSpec {
  /// Abscissa, 0 < c < min Re(δ_r). 0 selects min Re(δ_r)/2.
  double c = 0.0;
  /// Starting truncation height; grown until the end panels are negligible.
  /// 0 selects it automatically.
  double Y = 0.0;
  /// Minimum number of trapezoid nodes on [−Y, Y].
  int nodes = 64;
  /// Cap on Y; reaching it flags the result as truncated.
  double max_Y = 2000.0;
  double abs_tol = 1e-12;

  void validate() const;
};

struct BarnesResult {
  Bicomplex value;
  /// Set when Y hit max_Y with the end panels still above abs_tol.
  bool truncated = false;
  /// Magnitude estimate of the dropped tails (max over components).
  double tail_estimate = 0.0;
  /// Trapezoid nodes used per component.
  int nodes[2] = {0, 0};
  /// Contour bend β per component (0 for a straight line).
  double bend[2] = {0.0, 0.0};
};

/// ζ^{ςδ−τ}(ζ^ς − λ)^{−δ}, evaluated as ζ^{−τ}(1 − λζ^{−ς})^{−δ} with
/// principal componentwise powers.
/// Requires |Im_j(ζ)| < Re(ζ), |Im_j(τ)| < Re(τ) and |λζ^{−ς}|_j ≺ 1.
Bicomplex laplace_closed(const PrabhakarParams& params, const Bicomplex& lambda, const Bicomplex& zeta);

/// ∫_0^∞ e^{−ζt} t^{τ−1} E^δ_{ς,τ}(λt^ς) dt by adaptive quadrature on each
/// idempotent component. Throws QuadratureFailure when the integrand does not
/// decay (growth of E at least Re ζ_r) or the quadrature does not converge.
Bicomplex laplace_quadrature(const PrabhakarParams& params, const Bicomplex& lambda, const Bicomplex& zeta,
                             const QuadratureSpec& spec = {}, const SeriesPolicy& policy = {});

/// Γ(ζ)Γ(δ−ζ)λ^{−ζ} / (Γ(δ)Γ(τ−ςζ)) componentwise, the Mellin transform of
/// E^δ_{ς,τ}(−λt). Requires a real positive ς, |Im_j(δ)| < Re(δ),
/// 0 < Re(ζ_r) < Re(δ_r) and nonzero τ components.
Bicomplex mellin_closed(const PrabhakarParams& params, const Bicomplex& lambda, const Bicomplex& zeta);

/// ∫_0^∞ t^{ζ−1} E^δ_{ς,τ}(−λt) dt: quadrature on [0, 1] and [1, T] plus the
/// algebraic asymptotic tail beyond T. Supports 0 < ς < 2 and
/// |arg λ_r| < (1 − ς/2)π.
Bicomplex mellin_quadrature(const PrabhakarParams& params, const Bicomplex& lambda, const Bicomplex& zeta,
                            const QuadratureSpec& spec = {}, const SeriesPolicy& policy = {});

/// E^δ_{ς,τ}(λ) from (1/(2πi Γ(δ))) ∫ Γ(s)Γ(δ−s)/Γ(τ−ςs) (−λ)^{−s} ds along
/// Re s = c. When the vertical line converges slowly the contour is bent
/// to the left, s(y) = c − β(√(1+y²) − 1) + iy, which crosses no pole.
/// ContourError unless ς is real positive, λ_r ∉ [0, ∞) and 0 < c < Re(δ_r).
BarnesResult mellin_barnes_eval(const PrabhakarParams& params, const Bicomplex& lambda,
                                const ContourSpec& contour = {}, const SeriesPolicy& policy = {});

/// (1/Γ(μ)) ∫_0^t (t−s)^{μ−1} f(s) ds on each component by product
/// integration with piecewise-linear f. Requires |Im_j(μ)| < Re(μ).
GridFunction rl_fractional_integral(const GridFunction& f, const Bicomplex& mu);

/// ∫ t^{τ−1} E^δ_{ς,τ}(λt^ς) dt along the segments 0 → ζ_r, by quadrature.
Bicomplex kernel_integral_quadrature(const PrabhakarParams& params, const Bicomplex& lambda,
                                     const Bicomplex& zeta, const QuadratureSpec& spec = {},
                                     const SeriesPolicy& policy = {});

/// ∫_0^T e^{−ζt} f(t) dt by the trapezoid rule on the samples (T = t_end).
Bicomplex grid_laplace(const GridFunction& f, const Bicomplex& zeta);

/// Copy of `policy` with max_modulus and max_terms raised so that
/// E_{ς,·}(z) is computable for |z| ≤ modulus.
SeriesPolicy widened_policy(const SeriesPolicy& policy, Complex sigma, double modulus);

}  // namespace biprab
