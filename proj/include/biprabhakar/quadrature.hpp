#pragma once

#include <complex>
#include <functional>

namespace biprab {

using Complex = std::complex<double>;

/// Tolerances for the quadrature oracles.
struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  int max_subdivisions = 2000;
  /// Upper limit used for [0, ∞) integrals; 0 selects it from the decay rate.
  double tail_cutoff = 0.0;

  void validate() const;
};

struct QuadratureResult {
  Complex value;
  double error = 0.0;
  int subdivisions = 0;
  int evaluations = 0;
};

/// Globally adaptive Gauss–Kronrod (7/15) quadrature of a complex integrand
/// on [a, b]. Throws QuadratureFailure with the achieved error estimate when
/// `max_subdivisions` is exhausted.
QuadratureResult integrate(const std::function<Complex(double)>& f, double a, double b, double abs_tol,
                           double rel_tol, int max_subdivisions = 2000);

}  // namespace biprab
