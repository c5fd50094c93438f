#include "biprabhakar/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "biprabhakar/errors.hpp"
#include "biprabhakar/kinetic.hpp"
#include "biprabhakar/transforms.hpp"
#include "biprabhakar/verify.hpp"

namespace biprab::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

std::shared_ptr<spdlog::logger> g_log;

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_st>(err);
  auto log = std::make_shared<spdlog::logger>("biprabhakar", sink);
  log->set_pattern("[%l] %v");
  log->set_level(spdlog::level::err);
  if (const char* env = std::getenv("BIPRABHAKAR_LOG")) {
    std::string level = env;
    if (level == "info") log->set_level(spdlog::level::info);
    else if (level == "debug") log->set_level(spdlog::level::debug);
  }
  return log;
}

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ordered_json bic_json(const Bicomplex& z) {
  auto x = z.real_components();
  ordered_json j;
  j["x"] = {x[0], x[1], x[2], x[3]};
  j["e"] = {{z.z1().real(), z.z1().imag()}, {z.z2().real(), z.z2().imag()}};
  return j;
}

std::string bic_csv(const Bicomplex& z) {
  auto x = z.real_components();
  return num(x[0]) + "," + num(x[1]) + "," + num(x[2]) + "," + num(x[3]);
}

double max_abs_diff(const Bicomplex& a, const Bicomplex& b) {
  return std::max(std::abs(a.z1() - b.z1()), std::abs(a.z2() - b.z2()));
}

// Options shared by every subcommand.
struct Common {
  std::string out_path;
  std::string format;
  double tol = 0.0;
  int max_terms = 0;
  CLI::Option* tol_opt = nullptr;
  CLI::Option* max_terms_opt = nullptr;

  bool tol_set() const { return tol_opt && tol_opt->count() > 0; }

  SeriesPolicy policy(bool series_tol) const {
    SeriesPolicy p;
    if (max_terms_opt && max_terms_opt->count() > 0) p.max_terms = max_terms;
    if (series_tol && tol_set()) p.rel_tol = tol;
    p.validate();
    return p;
  }

  QuadratureSpec quadrature() const {
    QuadratureSpec q;
    if (tol_set()) q.abs_tol = tol;
    q.validate();
    return q;
  }
};

void add_common(CLI::App* sub, Common& c, const std::string& default_format) {
  c.format = default_format;
  sub->add_option("--out", c.out_path, "Write results to this file instead of stdout");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  c.tol_opt = sub->add_option("--tol", c.tol, "Tolerance override");
  c.max_terms_opt = sub->add_option("--max-terms", c.max_terms, "Series term cap");
}

struct ParamText {
  std::string sigma = "1,0,0,0";
  std::string tau = "1,0,0,0";
  std::string delta = "1,0,0,0";

  PrabhakarParams make() const {
    return PrabhakarParams::make(parse_bicomplex(sigma), parse_bicomplex(tau), parse_bicomplex(delta));
  }
};

void add_params(CLI::App* sub, ParamText& p) {
  sub->add_option("--sigma", p.sigma, "sigma (x0,x1,x2,x3 or [re1,im1;re2,im2])");
  sub->add_option("--tau", p.tau, "tau");
  sub->add_option("--delta", p.delta, "delta");
}

ordered_json params_json(const PrabhakarParams& p) {
  ordered_json j;
  j["sigma"] = bic_json(p.sigma);
  j["tau"] = bic_json(p.tau);
  j["delta"] = bic_json(p.delta);
  return j;
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) throw DomainError("cannot open output file '" + c.out_path + "'");
  f << text;
  if (!f) throw DomainError("failed writing '" + c.out_path + "'");
  g_log->info("wrote {}", c.out_path);
}

// E^δ_{ς,τ} on each idempotent component with the term budget widened to |z_r|.
Bicomplex evaluate(const PrabhakarParams& p, const Bicomplex& z, const SeriesPolicy& policy,
                   int terms[2] = nullptr, bool accurate[2] = nullptr) {
  Complex v[2];
  for (int r = 1; r <= 2; ++r) {
    Complex zr = z.component(r);
    auto pol = widened_policy(policy, p.sigma_c(r), std::abs(zr));
    ScalarPrabhakar sp(p.sigma_c(r), p.tau_c(r), p.delta_c(r), pol);
    try {
      auto res = sp.evaluate(zr);
      v[r - 1] = res.value;
      if (terms) terms[r - 1] = res.terms;
      if (accurate) accurate[r - 1] = res.accuracy_met;
    } catch (const Error& e) {
      rethrow_with_component(e, r);
    }
  }
  return Bicomplex::from_idempotent(v[0], v[1]);
}

// ---- eval ----------------------------------------------------------------

struct EvalArgs {
  Common common;
  ParamText params;
  std::string z = "0,0,0,0";
};

std::string cmd_eval(const EvalArgs& a) {
  auto params = a.params.make();
  auto z = parse_bicomplex(a.z);
  g_log->info("eval at z = {}", to_json_text(z));
  int terms[2] = {0, 0};
  bool accurate[2] = {true, true};
  auto value = evaluate(params, z, a.common.policy(true), terms, accurate);
  if (a.common.format == "csv") return "x0,x1,x2,x3\n" + bic_csv(value) + "\n";
  ordered_json j = params_json(params);
  j["z"] = bic_json(z);
  j["value"] = bic_json(value);
  j["terms"] = {terms[0], terms[1]};
  j["accuracy_met"] = accurate[0] && accurate[1];
  return j.dump(2) + "\n";
}

// ---- gamma ---------------------------------------------------------------

struct GammaArgs {
  Common common;
  std::string z = "1,0,0,0";
};

std::string cmd_gamma(const GammaArgs& a) {
  auto z = parse_bicomplex(a.z);
  auto value = gamma_bicomplex(z);
  if (a.common.format == "csv") return "x0,x1,x2,x3\n" + bic_csv(value) + "\n";
  ordered_json j;
  j["z"] = bic_json(z);
  j["value"] = bic_json(value);
  return j.dump(2) + "\n";
}

// ---- laplace / mellin ----------------------------------------------------

struct TransformArgs {
  Common common;
  ParamText params;
  std::string lambda = "1,0,0,0";
  std::string z = "1,0,0,0";
  std::string method = "closed";
};

template <class Closed, class Quad>
std::string cmd_transform(const TransformArgs& a, Closed closed_fn, Quad quad_fn) {
  auto params = a.params.make();
  auto lambda = parse_bicomplex(a.lambda);
  auto z = parse_bicomplex(a.z);
  std::optional<Bicomplex> closed, quad;
  if (a.method != "quadrature") closed = closed_fn(params, lambda, z);
  if (a.method != "closed") {
    g_log->info("quadrature with abs_tol {}", a.common.quadrature().abs_tol);
    quad = quad_fn(params, lambda, z, a.common.quadrature(), a.common.policy(false));
  }
  if (a.common.format == "csv") {
    std::string s = "method,x0,x1,x2,x3\n";
    if (closed) s += "closed," + bic_csv(*closed) + "\n";
    if (quad) s += "quadrature," + bic_csv(*quad) + "\n";
    return s;
  }
  ordered_json j = params_json(params);
  j["lambda"] = bic_json(lambda);
  j["z"] = bic_json(z);
  if (closed) j["closed"] = bic_json(*closed);
  if (quad) j["quadrature"] = bic_json(*quad);
  if (closed && quad) j["difference"] = max_abs_diff(*closed, *quad);
  return j.dump(2) + "\n";
}

// ---- barnes --------------------------------------------------------------

struct BarnesArgs {
  Common common;
  ParamText params;
  std::string lambda = "-1,0,0,0";
  ContourSpec contour;
};

std::string cmd_barnes(const BarnesArgs& a) {
  auto params = a.params.make();
  auto lambda = parse_bicomplex(a.lambda);
  auto contour = a.contour;
  if (a.common.tol_set()) contour.abs_tol = a.common.tol;
  auto res = mellin_barnes_eval(params, lambda, contour, a.common.policy(false));
  if (res.truncated) g_log->error("contour truncated at max_Y, tail estimate {}", res.tail_estimate);
  if (a.common.format == "csv") {
    return "x0,x1,x2,x3,truncated,tail_estimate\n" + bic_csv(res.value) + "," +
           (res.truncated ? "1" : "0") + "," + num(res.tail_estimate) + "\n";
  }
  ordered_json j = params_json(params);
  j["lambda"] = bic_json(lambda);
  j["value"] = bic_json(res.value);
  j["truncated"] = res.truncated;
  j["tail_estimate"] = res.tail_estimate;
  j["nodes"] = {res.nodes[0], res.nodes[1]};
  j["bend"] = {res.bend[0], res.bend[1]};
  return j.dump(2) + "\n";
}

// ---- kinetic -------------------------------------------------------------

struct KineticArgs {
  Common common;
  ParamText params;
  std::string problem_path;
  std::vector<std::string> a;
  std::vector<std::string> nu;
  std::string source_a = "1,0";
  int n = 1;
  double N0 = 1.0;
  double t_end = 1.0;
  double h = 1e-3;
  std::string method;
  int L_max = 200;
  std::string report_path;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string solution_csv(const GridFunction& N) { return to_csv(N); }

ordered_json solution_json(const GridFunction& N) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < N.grid.n_points; ++i) {
    auto x = N.values[i].real_components();
    rows.push_back({N.grid.t(i), x[0], x[1], x[2], x[3]});
  }
  return rows;
}

std::string cmd_kinetic(const KineticArgs& a, std::ostream& out, std::ostream& err) {
  auto policy = a.common.policy(false);
  double tail_tol = a.common.tol_set() ? a.common.tol : 1e-9;
  KineticProblem problem;
  std::string method = a.method;
  std::optional<PrabhakarParams> binomial;
  Hyperbolic binomial_a;

  if (!a.problem_path.empty()) {
    auto base = std::filesystem::path(a.problem_path).parent_path().string();
    problem = load_problem(read_file(a.problem_path), base.empty() ? "." : base, policy);
    if (method.empty()) method = "general";
    if (method != "general") throw DomainError("--method special requires the binomial form (--n), not --problem");
  } else {
    if (!(a.t_end > 0.0)) throw GridError("t_end > 0 violated");
    if (!(a.h > 0.0)) throw GridError("h > 0 violated");
    auto grid = TimeGrid::covering(a.t_end, a.h);
    auto params = a.params.make();
    if (!a.nu.empty()) {
      if (a.a.size() != a.nu.size()) throw DomainError("--a and --nu must be given the same number of times");
      PrabhakarSource src{params, parse_hyperbolic(a.source_a)};
      problem.N0 = a.N0;
      for (const auto& s : a.a) problem.a.push_back(parse_hyperbolic(s));
      for (const auto& s : a.nu) problem.nu.push_back(parse_bicomplex(s));
      problem.f = prabhakar_source(src, grid, policy);
      problem.source = src;
      if (method.empty()) method = "general";
      if (method != "general") throw DomainError("--method special requires the binomial form (--n), not --nu");
    } else {
      if (a.a.size() > 1) throw DomainError("the binomial form takes a single --a");
      binomial_a = a.a.empty() ? Hyperbolic(1.0) : parse_hyperbolic(a.a.front());
      binomial = params;
      problem = binomial_problem(a.N0, params, binomial_a, a.n, grid, policy);
      if (method.empty()) method = "special";
    }
  }
  problem.validate();
  g_log->info("kinetic: {} terms in the operator, {} nodes, method {}", problem.a.size(),
              problem.grid().n_points, method);

  GridFunction N;
  ordered_json report;
  report["method"] = method;
  report["N0"] = problem.N0;
  report["h"] = problem.grid().h;
  report["n_points"] = problem.grid().n_points;
  report["t_end"] = problem.grid().t_end();
  if (method == "special") {
    N = solve_special(problem.N0, *binomial, binomial_a, a.n, problem.grid(), policy);
    report["tail_bound"] = 0.0;
  } else {
    auto sol = solve_general(problem, a.L_max, policy, tail_tol);
    N = std::move(sol.values);
    report["L_max"] = sol.L_max;
    report["terms_used"] = sol.terms_used;
    report["ratio"] = sol.ratio;
    report["tail_bound"] = sol.achieved_tail_bound;
  }
  double residual = volterra_residual(N, problem);
  report["residual"] = residual;
  report["residual_over_N0"] = problem.N0 != 0.0 ? residual / std::abs(problem.N0) : residual;

  if (a.common.format == "json") {
    report["solution"] = solution_json(N);
    return report.dump(2) + "\n";
  }
  std::string report_text = report.dump(2) + "\n";
  if (!a.report_path.empty()) {
    Common c;
    c.out_path = a.report_path;
    emit(c, report_text, out);
  } else if (!a.common.out_path.empty()) {
    out << report_text;
  } else {
    err << report_text;
  }
  return solution_csv(N);
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  Common common;
  std::string suite = "all";
  int draws = 0;
  std::uint64_t seed = 0;
};

std::string cmd_verify(const VerifyArgs& a, bool& passed) {
  verify::SuiteOptions opts;
  opts.draws = a.draws;
  opts.seed = a.seed;
  opts.policy = a.common.policy(false);
  if (a.draws < 0) throw DomainError("draws >= 0 violated");
  auto reports = verify::run(a.suite, opts);
  passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
  for (const auto& r : reports) g_log->info("suite {}: {} ({:.2f} s)", r.suite, r.passed ? "pass" : "FAIL", r.seconds);
  if (a.common.format == "csv") {
    std::string s = "suite,check,count,worst,tolerance,informational,passed\n";
    for (const auto& r : reports) {
      for (const auto& c : r.checks) {
        s += r.suite + "," + c.name + "," + std::to_string(c.count) + "," + num(c.worst) + "," +
             num(c.tolerance) + "," + (c.informational ? "1" : "0") + "," + (c.passed ? "1" : "0") + "\n";
      }
    }
    return s;
  }
  if (a.suite == "all") return verify::to_json(reports) + "\n";
  return verify::to_json(reports.front()) + "\n";
}

// ---- table ---------------------------------------------------------------

struct TableArgs {
  Common common;
  ParamText params;
  std::string lambda = "1,0,0,0";
  std::string kind = "plain";
  double t_min = 0.0;
  double t_max = 1.0;
  int steps = 11;
};

// t^w on each component for real t ≥ 0 (0^w = 0 for Re w > 0).
Complex real_pow(double t, Complex w) {
  if (t == 0.0) return w == 0.0 ? Complex(1.0) : Complex(0.0);
  return std::exp(w * std::log(t));
}

std::string cmd_table(const TableArgs& a) {
  if (a.steps < 2) throw DomainError("steps >= 2 violated");
  if (!std::isfinite(a.t_min) || !std::isfinite(a.t_max)) throw DomainError("finite t range required");
  if (!(a.t_min >= 0.0)) throw DomainError("t_min >= 0 violated");
  if (!(a.t_max > a.t_min)) throw DomainError("t_max > t_min violated");
  auto params = a.params.make();
  auto lambda = parse_bicomplex(a.lambda);
  bool kernel = a.kind == "kernel";
  auto policy = a.common.policy(true);

  if (kernel && a.t_min == 0.0) {
    for (int r = 1; r <= 2; ++r) {
      Complex tau = params.tau_c(r);
      if (!(tau.real() > 1.0 || tau == 1.0)) {
        throw DomainError("t^(tau-1) is singular at t = 0: Re(tau) > 1 or tau = 1 required when t_min = 0",
                          r);
      }
    }
  }

  std::vector<double> ts(a.steps);
  std::vector<Bicomplex> vals(a.steps);
  for (int i = 0; i < a.steps; ++i) {
    double t = i + 1 == a.steps ? a.t_max : a.t_min + (a.t_max - a.t_min) * i / (a.steps - 1);
    ts[i] = t;
    Bicomplex tsig = Bicomplex::from_idempotent(real_pow(t, params.sigma_c(1)), real_pow(t, params.sigma_c(2)));
    Bicomplex e = evaluate(params, lambda * tsig, policy);
    if (kernel) {
      Bicomplex f = Bicomplex::from_idempotent(real_pow(t, params.tau_c(1) - 1.0), real_pow(t, params.tau_c(2) - 1.0));
      e = f * e;
    }
    vals[i] = e;
  }
  g_log->debug("table: {} rows", a.steps);

  if (a.common.format == "json") {
    ordered_json j = params_json(params);
    j["lambda"] = bic_json(lambda);
    j["kind"] = a.kind;
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < a.steps; ++i) {
      auto x = vals[i].real_components();
      rows.push_back({ts[i], x[0], x[1], x[2], x[3]});
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
  }
  std::string s = "t,x0,x1,x2,x3\n";
  for (int i = 0; i < a.steps; ++i) s += num(ts[i]) + "," + bic_csv(vals[i]) + "\n";
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  g_log = make_logger(err);

  CLI::App app{"Bicomplex Prabhakar functions, transforms and fractional kinetic equations", "biprabhakar"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", "biprabhakar 1.0.0");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate E^delta_{sigma,tau}(z)");
  add_common(eval, eval_args.common, "json");
  add_params(eval, eval_args.params);
  eval->add_option("--z", eval_args.z, "Argument");

  GammaArgs gamma_args;
  auto* gam = app.add_subcommand("gamma", "Bicomplex gamma function");
  add_common(gam, gamma_args.common, "json");
  gam->add_option("--z", gamma_args.z, "Argument");

  TransformArgs laplace_args, mellin_args;
  auto* lap = app.add_subcommand("laplace", "Laplace transform of t^{tau-1} E(lambda t^sigma) at z");
  auto* mel = app.add_subcommand("mellin", "Mellin transform of E(-lambda t) at z");
  for (auto [sub, ta] : {std::pair{lap, &laplace_args}, std::pair{mel, &mellin_args}}) {
    add_common(sub, ta->common, "json");
    add_params(sub, ta->params);
    sub->add_option("--lambda", ta->lambda, "lambda");
    sub->add_option("--z", ta->z, "Transform variable");
    sub->add_option("--method", ta->method, "closed, quadrature or both")
        ->check(CLI::IsMember({"closed", "quadrature", "both"}));
  }

  BarnesArgs barnes_args;
  auto* bar = app.add_subcommand("barnes", "E^delta_{sigma,tau}(lambda) by the Mellin-Barnes integral");
  add_common(bar, barnes_args.common, "json");
  add_params(bar, barnes_args.params);
  bar->add_option("--lambda", barnes_args.lambda, "Argument");
  bar->add_option("--c", barnes_args.contour.c, "Contour abscissa (0 = automatic)");
  bar->add_option("--Y", barnes_args.contour.Y, "Initial truncation height (0 = automatic)");
  bar->add_option("--nodes", barnes_args.contour.nodes, "Minimum trapezoid nodes");
  bar->add_option("--max-Y", barnes_args.contour.max_Y, "Truncation height cap");

  KineticArgs kin_args;
  auto* kin = app.add_subcommand("kinetic", "Solve the fractional kinetic equation");
  kin->set_help_flag("--help", "Print this help message and exit");
  add_common(kin, kin_args.common, "csv");
  add_params(kin, kin_args.params);
  kin->add_option("--problem", kin_args.problem_path, "JSON problem file");
  kin->add_option("--a", kin_args.a, "Hyperbolic coefficient u1,u4 (repeat for each term)");
  kin->add_option("--nu", kin_args.nu, "Integral order (repeat for each term)");
  kin->add_option("--source-a", kin_args.source_a, "Source scale a in E(-(a t)^sigma)");
  kin->add_option("--n", kin_args.n, "Binomial order");
  kin->add_option("--N0", kin_args.N0, "Initial amount");
  kin->add_option("--t-end", kin_args.t_end, "End of the time grid");
  kin->add_option("--h", kin_args.h, "Grid step");
  kin->add_option("--method", kin_args.method, "special or general")
      ->check(CLI::IsMember({"special", "general"}));
  kin->add_option("--L-max", kin_args.L_max, "Series term budget");
  kin->add_option("--report", kin_args.report_path, "Write the JSON report to this file");

  VerifyArgs ver_args;
  auto* ver = app.add_subcommand("verify", "Run property suites");
  add_common(ver, ver_args.common, "json");
  std::vector<std::string> suites = verify::suite_names();
  suites.push_back("all");
  ver->add_option("--suite", ver_args.suite, "Suite name or all")->check(CLI::IsMember(suites));
  ver->add_option("--draws", ver_args.draws, "Random draws (0 = suite default)");
  ver->add_option("--seed", ver_args.seed, "Random seed");

  TableArgs tab_args;
  auto* tab = app.add_subcommand("table", "Tabulate E(lambda t^sigma) or t^{tau-1} E(lambda t^sigma)");
  add_common(tab, tab_args.common, "csv");
  add_params(tab, tab_args.params);
  tab->add_option("--lambda", tab_args.lambda, "lambda");
  tab->add_option("--kind", tab_args.kind, "plain or kernel")->check(CLI::IsMember({"plain", "kernel"}));
  tab->add_option("--t-min", tab_args.t_min, "First t");
  tab->add_option("--t-max", tab_args.t_max, "Last t");
  tab->add_option("--steps", tab_args.steps, "Number of rows");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return domain_error;
  }

  try {
    std::string text;
    if (eval->parsed()) {
      text = cmd_eval(eval_args);
      emit(eval_args.common, text, out);
    } else if (gam->parsed()) {
      emit(gamma_args.common, cmd_gamma(gamma_args), out);
    } else if (lap->parsed()) {
      emit(laplace_args.common,
           cmd_transform(laplace_args, laplace_closed,
                         [](const auto& p, const auto& l, const auto& z, const auto& q, const auto& s) {
                           return laplace_quadrature(p, l, z, q, s);
                         }),
           out);
    } else if (mel->parsed()) {
      emit(mellin_args.common,
           cmd_transform(mellin_args, mellin_closed,
                         [](const auto& p, const auto& l, const auto& z, const auto& q, const auto& s) {
                           return mellin_quadrature(p, l, z, q, s);
                         }),
           out);
    } else if (bar->parsed()) {
      emit(barnes_args.common, cmd_barnes(barnes_args), out);
    } else if (kin->parsed()) {
      emit(kin_args.common, cmd_kinetic(kin_args, out, err), out);
    } else if (ver->parsed()) {
      bool passed = true;
      emit(ver_args.common, cmd_verify(ver_args, passed), out);
      if (!passed) {
        err << "error: verification failed\n";
        return verify_failed;
      }
    } else if (tab->parsed()) {
      emit(tab_args.common, cmd_table(tab_args), out);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return domain_error;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    return numerical_error;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return domain_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return numerical_error;
  }
  return ok;
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace biprab::cli
