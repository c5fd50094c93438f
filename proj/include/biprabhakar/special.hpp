#pragma once

#include <complex>
#include <map>
#include <memory>
#include <vector>

namespace biprab {

using Complex = std::complex<double>;

/// Truncation and accuracy controls shared by every series evaluation.
struct SeriesPolicy {
  double rel_tol = 1e-15;
  int max_terms = 2000;
  /// Consecutive negligible terms required before the series is cut.
  int stagnation_window = 3;
  /// Arguments with |z| above this raise NoConvergence.
  double max_modulus = 50.0;
  /// Relative error the evaluator aims for before it stops escalating.
  double accuracy_target = 5e-14;
  /// Allow re-evaluation in multiprecision when cancellation eats the
  /// double-precision result.
  bool extended_precision = true;
  /// Upper bound on the multiprecision working precision, in bits.
  int max_precision_bits = 1024;

  /// Throws DomainError on nonsensical settings.
  void validate() const;
};

/// Principal branch of log Γ(z). PoleError at 0, −1, −2, ...
Complex log_gamma(Complex z);
/// 1/Γ(z); entire, exactly 0 at nonpositive integers.
Complex recip_gamma(Complex z);
/// Γ(z). PoleError at 0, −1, −2, ...
Complex gamma(Complex z);
/// log sin(πz) modulo 2πi, accurate for large |Im z|. Not for use at integers.
Complex log_sin_pi(Complex z);
/// True for 0, −1, −2, ... on the real axis.
bool is_nonpositive_integer(Complex z);

struct ComplexPrabhakarArgs {
  Complex sigma;
  Complex tau;
  Complex delta;
  Complex z;
};

/// Outcome of one series evaluation.
struct SeriesResult {
  Complex value;
  int terms = 0;
  /// Estimated absolute rounding error of `value`.
  double error_estimate = 0.0;
  /// 53 for the double path, otherwise the multiprecision working precision.
  int precision_bits = 53;
  /// False when the estimate exceeds both the relative target and the
  /// caller's absolute floor (e.g. results that cancel to exactly zero).
  bool accuracy_met = true;
};

namespace detail {
struct MpCoefficients;
}

/// E^δ_{ς,τ} bound to one parameter triple.
///
/// Series coefficients (δ)_k/(k! Γ(ςk+τ)) are cached as they are needed, in
/// double and, when cancellation demands it, in multiprecision. An instance
/// is not safe for concurrent use; give each thread its own.
class ScalarPrabhakar {
 public:
  ScalarPrabhakar(Complex sigma, Complex tau, Complex delta, SeriesPolicy policy = {});
  ~ScalarPrabhakar();
  ScalarPrabhakar(ScalarPrabhakar&&) noexcept;
  ScalarPrabhakar& operator=(ScalarPrabhakar&&) noexcept;

  /// Errors below `abs_floor` are accepted even if they are large relative to
  /// the result.
  SeriesResult evaluate(Complex z, double abs_floor = 0.0) const;
  Complex operator()(Complex z) const { return evaluate(z).value; }

  /// k-th series term from the cached coefficients.
  Complex term(int k, Complex z) const;

  Complex sigma() const { return sigma_; }
  Complex tau() const { return tau_; }
  Complex delta() const { return delta_; }
  const SeriesPolicy& policy() const { return policy_; }

 private:
  struct Coef {
    Complex log_c;  // log of (δ)_k/(k! Γ(ςk+τ)), any branch
    bool zero;
    Complex c = 0.0;  // exp(log_c) when representable
    double abs_c = 0.0;
    bool direct = false;
  };

  void extend(int k) const;
  SeriesResult evaluate_mp(Complex z, const SeriesResult& dbl, double abs_floor) const;
  SeriesResult sum_mp(Complex z, int bits) const;

  Complex sigma_, tau_, delta_;
  SeriesPolicy policy_;
  mutable std::vector<Coef> coef_;
  mutable Complex log_poch_;  // log((δ)_k/k!) for k = coef_.size()
  mutable bool poch_zero_ = false;
  mutable std::map<int, std::unique_ptr<detail::MpCoefficients>> mp_;
};

Complex prabhakar_complex(const ComplexPrabhakarArgs& args, const SeriesPolicy& policy = {});
Complex prabhakar_complex(Complex sigma, Complex tau, Complex delta, Complex z,
                          const SeriesPolicy& policy = {});
/// E_{ς,τ}(z) = E^1_{ς,τ}(z).
Complex ml_two_param(Complex sigma, Complex tau, Complex z, const SeriesPolicy& policy = {});

}  // namespace biprab
