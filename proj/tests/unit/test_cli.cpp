#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "biprabhakar/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = biprab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> parse_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) {
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "biprabhakar_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("eval at the exponential point") {
  auto r = run({"eval", "--sigma", "1,0,0,0", "--tau", "1,0,0,0", "--delta", "1,0,0,0", "--z", "1,0,0,0"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["value"]["x"][0].get<double>() - std::exp(1.0)) < 1e-14);
  for (int k = 1; k < 4; ++k) CHECK(j["value"]["x"][k].get<double>() == 0.0);
  CHECK(j["accuracy_met"].get<bool>());
}

TEST_CASE("eval accepts the idempotent form") {
  auto r = run({"eval", "--z", "[1,0;-1,0]", "--format", "csv"});
  REQUIRE(r.code == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 1);
  // e1 e + e2 e^{-1} = cosh(1) + j sinh(1)
  CHECK(std::abs(rows[0][0] - std::cosh(1.0)) < 1e-14);
  CHECK(std::abs(rows[0][3] - std::sinh(1.0)) < 1e-14);
}

TEST_CASE("domain errors exit 2 and name the condition") {
  auto r = run({"eval", "--sigma", "0.5,0,0,1", "--tau", "1,0,0,0", "--delta", "1,0,0,0", "--z", "1,0,0,0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("|Im_j(sigma)| < Re(sigma) violated") != std::string::npos);
  CHECK(run({"eval", "--tau", "1,0,0,2"}).err.find("|Im_j(tau)| < Re(tau) violated") != std::string::npos);
  CHECK(run({"eval", "--z", "1,2,3"}).code == 2);
  CHECK(run({"eval", "--z", "nan,0,0,0", "--sigma", "nan,0,0,0"}).code == 2);
  CHECK(run({"gamma", "--z", "0,0,0,0"}).code == 2);
}

TEST_CASE("flag handling") {
  CHECK(run({"eval", "--bogus", "1"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"eval", "gamma"}).code == 2);
  CHECK(run({"eval", "--format", "xml"}).code == 2);
  CHECK(run({"table", "--steps", "three"}).code == 2);
  CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("kinetic") != std::string::npos);
  CHECK(run({"kinetic", "--help"}).code == 0);
}

TEST_CASE("table of the exponential") {
  auto r = run({"table", "--kind", "plain", "--t-min", "0", "--t-max", "1", "--steps", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("t,x0,x1,x2,x3\n", 0) == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 3);
  const double want[3] = {1.0, std::exp(0.5), std::exp(1.0)};
  for (int i = 0; i < 3; ++i) {
    CHECK(rows[i][0] == doctest::Approx(0.5 * i));
    CHECK(std::abs(rows[i][1] - want[i]) < 1e-14);
  }
}

TEST_CASE("kernel table vanishes at the origin for tau = 2") {
  auto r = run({"table", "--kind", "kernel", "--tau", "2,0,0,0", "--steps", "5"});
  REQUIRE(r.code == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 5);
  for (int k = 1; k <= 4; ++k) CHECK(rows[0][k] == 0.0);
  // t E_{1,2}(t) = e^t − 1
  CHECK(std::abs(rows[4][1] - (std::exp(1.0) - 1.0)) < 1e-14);
}

TEST_CASE("table validation") {
  CHECK(run({"table", "--steps", "1"}).code == 2);
  CHECK(run({"table", "--t-min", "1", "--t-max", "0"}).code == 2);
  CHECK(run({"table", "--t-min", "-1"}).code == 2);
  CHECK(run({"table", "--kind", "kernel", "--tau", "0.5,0,0,0"}).code == 2);
  CHECK(run({"table", "--kind", "kernel", "--tau", "0.5,0,0,0", "--t-min", "0.1"}).code == 0);
}

TEST_CASE("output is deterministic and --out matches stdout") {
  std::vector<std::string> args = {"table", "--sigma", "0.7,0.1,0,0.2", "--lambda", "[0.5,0.2;-1,0.3]",
                                   "--steps", "7", "--kind", "kernel", "--tau", "1.5,0,0,0"};
  auto a = run(args);
  auto b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto path = (temp_dir() / "table.csv").string();
  args.insert(args.end(), {"--out", path});
  REQUIRE(run(args).code == 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == a.out);
}

TEST_CASE("transforms") {
  auto lap = run({"laplace", "--sigma", "0.8,0,0,0.1", "--tau", "1.5,0,0,0", "--lambda", "0.3,0,0,0", "--z",
                  "2,0,0,0", "--method", "both"});
  REQUIRE(lap.code == 0);
  CHECK(nlohmann::json::parse(lap.out)["difference"].get<double>() < 1e-8);
  // E_{1,1}(3t) = e^{3t} grows faster than e^{−t} decays.
  CHECK(run({"laplace", "--lambda", "3,0,0,0", "--z", "1,0,0,0", "--method", "quadrature"}).code == 3);
  CHECK(run({"laplace", "--lambda", "3,0,0,0", "--z", "1,0,0,0"}).code == 2);

  auto mel = run({"mellin", "--sigma", "0.7,0,0,0", "--delta", "2,0,0,0", "--lambda", "1,0,0,0", "--z",
                  "0.5,0,0,0", "--method", "both"});
  REQUIRE(mel.code == 0);
  CHECK(nlohmann::json::parse(mel.out)["difference"].get<double>() < 1e-6);

  auto bar = run({"barnes", "--sigma", "0.7,0,0,0", "--lambda", "-1,0,0,0"});
  auto ev = run({"eval", "--sigma", "0.7,0,0,0", "--z", "-1,0,0,0"});
  REQUIRE(bar.code == 0);
  REQUIRE(ev.code == 0);
  auto jb = nlohmann::json::parse(bar.out);
  CHECK_FALSE(jb["truncated"].get<bool>());
  CHECK(std::abs(jb["value"]["x"][0].get<double>() - nlohmann::json::parse(ev.out)["value"]["x"][0].get<double>()) <
        1e-8);
  CHECK(run({"barnes", "--lambda", "1,0,0,0"}).code == 2);
}

TEST_CASE("kinetic binomial and general") {
  auto sp = run({"kinetic", "--sigma", "0.8,0,0,0", "--tau", "1.3,0,0,0", "--a", "1,0.2", "--n", "2", "--t-end",
                 "1", "--h", "0.01"});
  REQUIRE(sp.code == 0);
  CHECK(sp.out.rfind("t,x0,x1,x2,x3\n", 0) == 0);
  CHECK(parse_csv(sp.out).size() == 101);
  auto report = nlohmann::json::parse(sp.err);
  CHECK(report["method"] == "special");
  CHECK(report["residual"].get<double>() < 1e-3);

  auto gen = run({"kinetic", "--sigma", "0.8,0,0,0", "--tau", "1.3,0,0,0", "--a", "1,0.2", "--n", "2", "--t-end",
                  "1", "--h", "0.01", "--method", "general", "--format", "json"});
  REQUIRE(gen.code == 0);
  auto jg = nlohmann::json::parse(gen.out);
  CHECK(jg["tail_bound"].get<double>() <= 1e-9);
  auto rows_s = parse_csv(sp.out);
  double worst = 0.0;
  for (size_t i = 0; i < rows_s.size(); ++i) {
    for (int k = 1; k <= 4; ++k) worst = std::max(worst, std::abs(rows_s[i][k] - jg["solution"][i][k].get<double>()));
  }
  CHECK(worst < 1e-4);

  auto listed = run({"kinetic", "--a", "0.3,0", "--a", "0.2,0", "--nu", "0.7,0,0,0", "--nu", "1.2,0,0,0", "--h",
                     "0.01", "--format", "json"});
  REQUIRE(listed.code == 0);
  CHECK(nlohmann::json::parse(listed.out)["residual"].get<double>() < 1e-4);
}

TEST_CASE("kinetic errors") {
  CHECK(run({"kinetic", "--a", "1,2"}).code == 2);
  CHECK(run({"kinetic", "--a", "1,0", "--nu", "1,0,0,0", "--method", "special"}).code == 2);
  CHECK(run({"kinetic", "--a", "1,0", "--a", "1,0", "--nu", "1,0,0,0"}).code == 2);
  CHECK(run({"kinetic", "--h", "0"}).code == 2);
  CHECK(run({"kinetic", "--problem", "/nonexistent/problem.json"}).code == 2);
  auto div = run({"kinetic", "--a", "0.1,0", "--a", "4,0", "--nu", "1,0,0,0", "--nu", "0.5,0,0,0", "--t-end", "3",
                  "--h", "0.05"});
  CHECK(div.code == 3);
}

TEST_CASE("kinetic problem file") {
  auto dir = temp_dir();
  {
    std::ofstream f(dir / "problem.json");
    f << R"({"N0": 2, "a": [[1, 0.2]], "nu": ["1,0,0,0"],
      "f": {"kind": "prabhakar", "params": {"sigma": 1, "tau": "1,0,0,0", "delta": 1}},
      "grid": {"t_end": 1, "h": 0.01}})";
  }
  auto csv = (dir / "solution.csv").string();
  auto r = run({"kinetic", "--problem", (dir / "problem.json").string(), "--out", csv});
  REQUIRE(r.code == 0);
  auto report = nlohmann::json::parse(r.out);
  CHECK(report["method"] == "general");
  CHECK(report["residual"].get<double>() < 1e-4);
  std::ifstream f(csv);
  std::stringstream ss;
  ss << f.rdbuf();
  auto rows = parse_csv(ss.str());
  REQUIRE(rows.size() == 101);
  // N(0) = N0 f(0)
  CHECK(std::abs(rows[0][1] - 2.0) < 1e-12);
}

TEST_CASE("verify subcommand") {
  auto r = run({"verify", "--suite", "recurrence", "--draws", "100", "--seed", "7"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["passed"].get<bool>());
  CHECK(j["seed"].get<int>() == 7);
  for (const auto& c : j["checks"]) {
    if (c["worst"].is_number()) CHECK(c["worst"].get<double>() < 1e-10);
  }
  CHECK(run({"verify", "--suite", "recurrence", "--draws", "100", "--seed", "7"}).out == r.out);
  auto csv = run({"verify", "--suite", "algebra", "--draws", "50", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("suite,check,", 0) == 0);
}
