// Acceptance run: one PASS/FAIL line per criterion, fixed seed, pinned
// tolerances and runtime limits.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "biprabhakar/verify.hpp"

namespace {

struct Requirement {
  std::string check;
  double tolerance;
  int min_count;
};

struct Criterion {
  int id;
  std::string suite;
  int draws;
  double time_limit;
  std::vector<Requirement> requirements;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "algebra", 10000, 5.0,
       {{"roundtrip_exact_dyadic", 0.0, 10000},
        {"product_componentwise_exact", 0.0, 10000},
        {"product_table_ulps", 4.0, 10000},
        {"null_cone_division_raises", 0.0, 10000}}},
      {2, "scalar", 100, 5.0, {{"exp_reduction_rel", 1e-13, 100}, {"cos_reduction", 1e-12, 100}}},
      {3, "recurrence", 1000, 30.0, {{"first_recurrence", 1e-10, 1000}, {"second_recurrence", 1e-10, 1}}},
      {4, "differential", 200, 30.0,
       {{"derivative_vs_central_difference", 1e-6, 200},
        {"kernel_derivative_vs_central_difference", 1e-6, 200},
        {"euler_operator", 1e-10, 200}}},
      {5, "integral", 100, 60.0, {{"segment_quadrature_vs_closed_form", 1e-7, 100}}},
      {6, "laplace", 200, 120.0,
       {{"closed_form_vs_quadrature_rel", 1e-7, 200}, {"guard_rejects_divergent_region", 0.0, 1}}},
      {7, "mellin", 100, 120.0, {{"closed_form_vs_quadrature", 1e-6, 100}, {"gamma_reduction", 1e-10, 1}}},
      {8, "barnes", 50, 120.0, {{"contour_vs_series_abs", 1e-6, 50}, {"contour_not_truncated", 0.0, 50}}},
      {9, "cauchy-riemann", 100, 30.0, {{"finite_difference_residual_scaled", 1e-6, 100}}},
      {10, "kinetic-special", 50, 120.0,
       {{"volterra_residual_over_N0", 1e-4, 50}, {"analytic_case_pointwise", 1e-10, 1}}},
      {11, "kinetic-general", 20, 120.0,
       {{"general_vs_special_over_N0", 1e-5, 20}, {"refuses_divergent_series", 0.0, 1}}},
      {12, "euler-gamma", 50, 60.0, {{"truncated_product_rel", 1e-4, 50}}},
  };
  return list;
}

constexpr std::uint64_t kSeed = 0;

}  // namespace

int main(int argc, char** argv) {
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  int failed = 0;
  for (const auto& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    biprab::verify::SuiteOptions opts;
    opts.draws = c.draws;
    opts.seed = kSeed;
    std::string detail;
    bool ok = true;
    double seconds = 0.0;
    try {
      auto report = biprab::verify::run_suite(c.suite, opts);
      seconds = report.seconds;
      if (!report.passed) {
        ok = false;
        detail += " suite-failed";
      }
      for (const auto& req : c.requirements) {
        const auto* check = report.find(req.check);
        if (!check) {
          ok = false;
          detail += " " + req.check + "=missing";
          continue;
        }
        bool good = check->passed && check->worst <= req.tolerance && check->count >= req.min_count;
        ok = ok && good;
        char buf[160];
        std::snprintf(buf, sizeof buf, " %s=%.3g(<=%.3g,n=%d)%s", req.check.c_str(), check->worst, req.tolerance,
                      check->count, good ? "" : "!");
        detail += buf;
      }
      for (const auto& f : report.failures) std::fprintf(stderr, "  criterion %d: %s\n", c.id, f.c_str());
    } catch (const std::exception& e) {
      ok = false;
      detail += std::string(" error: ") + e.what();
    }
    bool in_time = seconds < c.time_limit;
    if (!in_time) detail += " over-time";
    ok = ok && in_time;
    std::printf("criterion %2d [%s] %s time=%.2fs(<%gs)%s\n", c.id, c.suite.c_str(), ok ? "PASS" : "FAIL", seconds,
                c.time_limit, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  std::printf("%s: %d criteria failed\n", failed == 0 ? "ACCEPTED" : "REJECTED", failed);
  return failed == 0 ? 0 : 1;
}
