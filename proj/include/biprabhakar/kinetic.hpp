#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biprabhakar/grid.hpp"
#include "biprabhakar/prabhakar.hpp"

namespace biprab {

/// Source f(t) = t^{τ−1} E^δ_{ς,τ}(−(at)^ς).
struct PrabhakarSource {
  PrabhakarParams params;
  Hyperbolic a{1.0};
};

/// N(t) − N0 f(t) = −Σ a_i RL^{ν_i} N(t) on a uniform grid starting at 0.
struct KineticProblem {
  double N0 = 1.0;
  std::vector<Hyperbolic> a;
  std::vector<Bicomplex> nu;
  GridFunction f;
  /// Set when f was generated from a Prabhakar source.
  std::optional<PrabhakarSource> source;

  /// Throws DomainError (or GridError) naming the violated condition.
  void validate() const;
  const TimeGrid& grid() const { return f.grid; }
};

/// Second Prabhakar index of the kernel K_{l,s}.
enum class KernelIndex {
  /// c = Σ_μ s_μ ν_{μ+1}; the form that inverts the Laplace-domain expansion.
  weighted,
  /// c = Σ_μ ν_{μ+1} for every s; kept only for comparison reports.
  unweighted,
};

struct SeriesSolution {
  /// Term budget in l given by the caller.
  int L_max = 0;
  /// Highest l actually summed.
  int terms_used = 0;
  /// N0 ‖f‖ ‖R‖ r^{L+1}/(1 − r), a bound on the dropped terms on [0, T_end].
  double achieved_tail_bound = 0.0;
  /// Geometric ratio r(T_end) (max over components).
  double ratio = 0.0;
  GridFunction values;
};

/// Samples t^{τ−1} E^δ_{ς,τ}(−(at)^ς). The t = 0 node is the limit: 0 when
/// Re(τ_r) > 1, 1/Γ(τ_r) when τ_r = 1, NaN otherwise.
GridFunction prabhakar_source(const PrabhakarSource& src, const TimeGrid& grid, const SeriesPolicy& policy = {});

/// N0 t^{τ−1} E^{δ+n}_{ς,τ}(−(at)^ς) on the grid, the solution for the
/// binomial problem built by `binomial_problem`. Requires n ≥ 1 and
/// a_1 > |a_4| (both idempotent components of a positive).
GridFunction solve_special(double N0, const PrabhakarParams& params, const Hyperbolic& a, int n,
                           const TimeGrid& grid, const SeriesPolicy& policy = {});

/// The problem with a_i = C(n, i) a^{iς}, ν_i = iς and a Prabhakar source.
/// ς must have real idempotent components so that the a_i stay hyperbolic.
KineticProblem binomial_problem(double N0, const PrabhakarParams& params, const Hyperbolic& a, int n,
                                const TimeGrid& grid, const SeriesPolicy& policy = {});

/// N0 Σ_l (−1)^l Σ_{|s|=l} multinomial(l; s) Π a_{μ+1}^{s_μ} (f ⋆ K_{l,s})(t),
/// K_{l,s}(u) = u^{c−1} E^{l+1}_{ν_1,c}(−a_1 u^{ν_1}), c = Σ s_μ ν_{μ+1};
/// the l = 0 kernel carries the unit impulse. Convolutions use product
/// integration with piecewise-linear f. Throws SeriesDivergence when
/// r(T_end) ≥ 1 or the tail bound exceeds `tail_tol`·N0‖f‖ at L_max.
SeriesSolution solve_general(const KineticProblem& problem, int L_max, const SeriesPolicy& policy = {},
                             double tail_tol = 1e-9, KernelIndex index = KernelIndex::weighted);

/// max over nodes and components of |N − N0 f + Σ a_i RL^{ν_i} N|.
double volterra_residual(const GridFunction& N, const KineticProblem& problem);

/// Parses the JSON problem format. Relative CSV paths resolve against
/// `base_dir`.
KineticProblem load_problem(const std::string& json_text, const std::string& base_dir = ".",
                            const SeriesPolicy& policy = {});

}  // namespace biprab
