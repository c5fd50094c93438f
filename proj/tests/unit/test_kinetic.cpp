#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "biprabhakar/errors.hpp"
#include "biprabhakar/kinetic.hpp"
#include "doctest.h"

using namespace biprab;

namespace {

PrabhakarParams real_params(double s, double t, double d) { return PrabhakarParams::make(s, t, d); }

double max_diff(const GridFunction& a, const GridFunction& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.values.size(); ++i) {
    m = std::max({m, std::abs(a.values[i].z1() - b.values[i].z1()), std::abs(a.values[i].z2() - b.values[i].z2())});
  }
  return m;
}

KineticProblem single_term(double N0, Hyperbolic a, Bicomplex nu, GridFunction f) {
  KineticProblem p;
  p.N0 = N0;
  p.a = {a};
  p.nu = {nu};
  p.f = std::move(f);
  return p;
}

}  // namespace

TEST_CASE("solve_special analytic cases") {
  TimeGrid g = TimeGrid::covering(2.0, 1e-3);
  const double N0 = 2.5;
  GridFunction n1 = solve_special(N0, real_params(1, 1, 1), 1.0, 1, g);
  GridFunction n2 = solve_special(N0, real_params(1, 1, 1), 1.0, 2, g);
  double e1 = 0.0, e2 = 0.0;
  for (int i = 0; i < g.n_points; ++i) {
    double t = g.t(i);
    e1 = std::max(e1, std::abs(n1.values[i].z1() - N0 * (1 - t) * std::exp(-t)));
    e1 = std::max(e1, std::abs(n1.values[i].z2() - N0 * (1 - t) * std::exp(-t)));
    e2 = std::max(e2, std::abs(n2.values[i].z1() - N0 * (1 - 2 * t + t * t / 2) * std::exp(-t)));
  }
  CHECK(e1 < 1e-10);
  CHECK(e2 < 1e-10);
  CHECK(std::abs(n1.values[0].z1() - N0) < 1e-14);

  GridFunction late = solve_special(1.0, real_params(1, 1.5, 1), 1.0, 1, g);
  CHECK(late.values[0].z1() == 0.0);
  GridFunction early = solve_special(1.0, real_params(1, 0.5, 1), 1.0, 1, g);
  CHECK(early.nonfinite_nodes() == std::vector<int>{0});

  CHECK_THROWS_AS(solve_special(1.0, real_params(1, 1, 1), 1.0, 0, g), DomainError);
  CHECK_THROWS_AS(solve_special(1.0, real_params(1, 1, 1), Hyperbolic(1.0, 1.5), 1, g), DomainError);
  CHECK_THROWS_AS(solve_special(-1.0, real_params(1, 1, 1), 1.0, 1, g), DomainError);
}

TEST_CASE("volterra residual of analytic solution") {
  TimeGrid g = TimeGrid::covering(2.0, 1e-3);
  auto prob = binomial_problem(1.0, real_params(1, 1, 1), 1.0, 1, g);
  GridFunction N = solve_special(1.0, real_params(1, 1, 1), 1.0, 1, g);
  CHECK(volterra_residual(N, prob) < 1e-6);

  KineticProblem zero = single_term(1.0, 1.0, 1.0, GridFunction(g));
  CHECK(volterra_residual(GridFunction(g), zero) == 0.0);

  GridFunction bumped = N;
  for (auto& v : bumped.values) v += Bicomplex(1e-3);
  CHECK(volterra_residual(bumped, prob) > 1e-3);

  GridFunction other(TimeGrid::covering(1.0, 1e-3));
  CHECK_THROWS_AS(volterra_residual(other, prob), GridError);
}

TEST_CASE("special-case residual over random real parameters") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> par(0.5, 2.0), tau(1.0, 2.0), aa(0.1, 2.0);
  TimeGrid g = TimeGrid::covering(2.0, 1e-3);
  double worst = 0.0;
  for (int k = 0; k < 6; ++k) {
    auto p = real_params(par(rng), tau(rng), par(rng));
    int n = 1 + k % 3;
    double a = aa(rng), N0 = 0.5 + k;
    auto prob = binomial_problem(N0, p, a, n, g);
    worst = std::max(worst, volterra_residual(solve_special(N0, p, a, n, g), prob) / N0);
  }
  CHECK(worst <= 1e-4);
}

TEST_CASE("solve_general n = 1 matches special case") {
  TimeGrid g = TimeGrid::covering(2.0, 1e-3);
  auto p = real_params(1, 1, 1);
  auto prob = binomial_problem(1.0, p, 1.0, 1, g);
  SeriesSolution sol = solve_general(prob, 0);
  CHECK(sol.terms_used == 0);
  CHECK(sol.ratio == 0.0);
  CHECK(max_diff(sol.values, solve_special(1.0, p, 1.0, 1, g)) < 1e-6);
}

TEST_CASE("solve_general against special case on binomial problems") {
  TimeGrid g = TimeGrid::covering(1.0, 1e-3);
  struct Case {
    double s, t, d, a;
    int n;
  };
  for (Case c : {Case{1.0, 1.0, 1.0, 0.4, 2}, Case{0.8, 1.3, 0.7, 0.3, 2}, Case{1.2, 1.0, 1.5, 0.25, 3}}) {
    auto p = real_params(c.s, c.t, c.d);
    auto prob = binomial_problem(2.0, p, c.a, c.n, g);
    auto start = std::chrono::steady_clock::now();
    SeriesSolution sol = solve_general(prob, 60);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    double err = max_diff(sol.values, solve_special(2.0, p, c.a, c.n, g));
    MESSAGE("n=" << c.n << " L=" << sol.terms_used << " r=" << sol.ratio << " err=" << err << " t=" << secs);
    CHECK(err <= 1e-5 * 2.0);
    CHECK(sol.achieved_tail_bound < 1e-6);
  }
}

TEST_CASE("solve_general hyperbolic coefficients split into scalar runs") {
  TimeGrid g = TimeGrid::covering(1.0, 1e-2);
  KineticProblem prob;
  prob.N0 = 1.5;
  prob.a = {Hyperbolic(1.0, 0.3), Hyperbolic(0.2, 0.05)};
  prob.nu = {Bicomplex::from_idempotent(0.9, {1.1, 0.1}), Bicomplex::from_idempotent(1.4, 1.2)};
  prob.f = GridFunction(g);
  for (int i = 0; i < g.n_points; ++i) {
    double t = g.t(i);
    prob.f.values[i] = Bicomplex::from_idempotent(std::cos(t), {1.0, t});
  }
  SeriesSolution sol = solve_general(prob, 60);
  for (int r = 1; r <= 2; ++r) {
    KineticProblem scalar = prob;
    for (size_t i = 0; i < prob.a.size(); ++i) {
      double ar = r == 1 ? prob.a[i].p1() : prob.a[i].p2();
      scalar.a[i] = Hyperbolic(ar);
      scalar.nu[i] = Bicomplex(prob.nu[i].component(r));
    }
    for (auto& v : scalar.f.values) v = Bicomplex(v.component(r));
    SeriesSolution s = solve_general(scalar, 60);
    bool same = true;
    for (int i = 0; i < g.n_points; ++i) same = same && s.values.values[i].z1() == sol.values.values[i].component(r);
    CHECK(same);
  }
  CHECK(volterra_residual(sol.values, prob) < 1e-3);
}

TEST_CASE("solve_general linearity and zero source") {
  TimeGrid g = TimeGrid::covering(1.0, 1e-2);
  KineticProblem p1;
  p1.N0 = 1.0;
  p1.a = {Hyperbolic(1.0), Hyperbolic(0.3)};
  p1.nu = {Bicomplex(0.7), Bicomplex(1.3)};
  p1.f = GridFunction(g);
  KineticProblem p2 = p1, p12 = p1;
  for (int i = 0; i < g.n_points; ++i) {
    double t = g.t(i);
    p1.f.values[i] = Bicomplex(std::exp(-t));
    p2.f.values[i] = Bicomplex::from_idempotent(t * t, {0.0, t});
    p12.f.values[i] = p1.f.values[i] + p2.f.values[i] * Bicomplex(3.0);
  }
  auto s1 = solve_general(p1, 60).values, s2 = solve_general(p2, 60).values, s12 = solve_general(p12, 60).values;
  GridFunction combo = s1;
  for (int i = 0; i < g.n_points; ++i) combo.values[i] = s1.values[i] + s2.values[i] * Bicomplex(3.0);
  CHECK(max_diff(combo, s12) < 1e-12);

  KineticProblem scaled = p1;
  scaled.N0 = 4.0;
  GridFunction times4 = s1;
  for (auto& v : times4.values) v = v * Bicomplex(4.0);
  CHECK(max_diff(solve_general(scaled, 60).values, times4) < 1e-12);

  KineticProblem zero = p1;
  zero.f = GridFunction(g);
  auto z = solve_general(zero, 60).values;
  CHECK(max_diff(z, GridFunction(g)) == 0.0);
}

TEST_CASE("solve_general refuses divergent series") {
  TimeGrid g = TimeGrid::covering(3.0, 1e-2);
  KineticProblem p;
  p.N0 = 1.0;
  p.a = {Hyperbolic(0.1), Hyperbolic(5.0)};
  p.nu = {Bicomplex(1.0), Bicomplex(0.5)};
  p.f = GridFunction(g);
  for (auto& v : p.f.values) v = Bicomplex(1.0);
  CHECK_THROWS_AS(solve_general(p, 60), SeriesDivergence);

  p.a = {Hyperbolic(1.0), Hyperbolic(0.05)};
  CHECK_THROWS_AS(solve_general(p, 0), SeriesDivergence);
  CHECK_NOTHROW(solve_general(p, 60));
}

TEST_CASE("problem validation") {
  TimeGrid g = TimeGrid::covering(1.0, 0.1);
  KineticProblem p = single_term(1.0, Hyperbolic(1.0, 0.5), 1.0, GridFunction(g));
  CHECK_NOTHROW(p.validate());
  p.a[0] = Hyperbolic(1.0, 1.0);
  CHECK_THROWS_WITH_AS(p.validate(), "a_i1 > |a_i4| violated", DomainError);
  p.a[0] = Hyperbolic(1.0);
  p.nu[0] = Bicomplex::from_idempotent({1.0, 0.0}, {-0.5, 0.0});
  CHECK_THROWS_WITH_AS(p.validate(), "|Im_j(nu_i)| < Re(nu_i) violated", DomainError);
  p.nu[0] = 1.0;
  p.N0 = 0.0;
  CHECK_THROWS_WITH_AS(p.validate(), "N0 > 0 violated", DomainError);
  p.N0 = 1.0;
  p.f.values[3] = Bicomplex(std::nan(""));
  CHECK_THROWS_AS(p.validate(), DomainError);
  CHECK_THROWS_AS(binomial_problem(1.0, PrabhakarParams::make(Bicomplex::from_idempotent({1, 0.1}, 1.0), 1, 1), 1.0,
                                   2, g),
                  DomainError);
}

TEST_CASE("load_problem") {
  const std::string text = R"({"N0": 2, "a": [[1, 0.2]], "nu": ["1,0,0,0"],
    "f": {"kind": "prabhakar", "params": {"sigma": 1, "tau": "1,0,0,0", "delta": [1, 0, 0, 0]}},
    "grid": {"t_end": 1, "h": 0.01}})";
  KineticProblem p = load_problem(text);
  CHECK(p.N0 == 2.0);
  CHECK(p.a[0] == Hyperbolic(1.0, 0.2));
  CHECK(p.grid().n_points == 101);
  CHECK(p.source.has_value());
  CHECK(std::abs(p.f.values[100].z1() - std::exp(-1.0)) < 1e-14);

  auto dir = std::filesystem::temp_directory_path() / "biprab_kinetic_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream os(dir / "f.csv");
    write_csv(os, p.f);
  }
  KineticProblem q = load_problem(R"({"N0": 1, "a": [[1, 0]], "nu": [1], "f": {"kind": "csv", "path": "f.csv"}})",
                                  dir.string());
  CHECK(q.grid().n_points == 101);
  CHECK_THROWS_AS(load_problem(R"({"N0": 1, "a": [[1, 0]], "nu": [1], "f": {"kind": "csv", "path": "f.csv"},
                                   "grid": {"t_end": 1, "h": 0.02}})",
                               dir.string()),
                  GridError);
  std::filesystem::remove_all(dir);

  CHECK_THROWS_AS(load_problem("{not json"), DomainError);
  CHECK_THROWS_AS(load_problem(R"({"N0": 1})"), DomainError);
  CHECK_THROWS_AS(load_problem(R"({"N0": 1, "a": [[1, 0]], "nu": [1], "f": {"kind": "sine"}})"), DomainError);
}
