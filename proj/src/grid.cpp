#include "biprabhakar/grid.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "biprabhakar/errors.hpp"

namespace biprab {

TimeGrid TimeGrid::make(double h, int n_points) {
  if (!(h > 0.0) || !std::isfinite(h)) throw GridError("grid step must be finite and > 0");
  if (n_points < 2) throw GridError("grid needs at least 2 points");
  return {h, n_points};
}

TimeGrid TimeGrid::covering(double t_end, double h) {
  if (!(t_end > 0.0) || !std::isfinite(t_end)) throw GridError("t_end must be finite and > 0");
  if (!(h > 0.0) || !std::isfinite(h)) throw GridError("grid step must be finite and > 0");
  double steps = std::ceil(t_end / h - 1e-9);
  if (steps > 1e8) throw GridError("grid too large");
  int n = static_cast<int>(steps);
  return make(t_end / n, n + 1);
}

std::vector<int> GridFunction::nonfinite_nodes() const {
  std::vector<int> out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (!values[i].is_finite()) out.push_back(static_cast<int>(i));
  }
  return out;
}

void write_csv(std::ostream& os, const GridFunction& f) {
  char buf[32];
  auto put = [&](double x) {
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    os.write(buf, end - buf);
  };
  os << "t,x0,x1,x2,x3\n";
  for (int i = 0; i < f.grid.n_points; ++i) {
    put(f.grid.t(i));
    for (double x : f.values[static_cast<size_t>(i)].real_components()) {
      os << ',';
      put(x);
    }
    os << '\n';
  }
}

std::string to_csv(const GridFunction& f) {
  std::ostringstream os;
  write_csv(os, f);
  return os.str();
}

namespace {

double parse_field(std::string_view s, int line) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw GridError("CSV line " + std::to_string(line) + ": bad number '" + std::string(s) + "'");
  }
  return x;
}

}  // namespace

GridFunction read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw GridError("CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t,x0,x1,x2,x3") throw GridError("CSV header must be t,x0,x1,x2,x3");
  std::vector<double> ts;
  std::vector<Bicomplex> vs;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    double f[5];
    std::string_view rest(line);
    for (int k = 0; k < 5; ++k) {
      size_t comma = rest.find(',');
      if ((k < 4) != (comma != std::string_view::npos)) {
        throw GridError("CSV line " + std::to_string(lineno) + ": expected 5 fields");
      }
      f[k] = parse_field(rest.substr(0, comma), lineno);
      if (k < 4) rest.remove_prefix(comma + 1);
    }
    ts.push_back(f[0]);
    vs.push_back(Bicomplex::from_components(f[1], f[2], f[3], f[4]));
  }
  if (ts.size() < 2) throw GridError("grid needs at least 2 points");
  if (ts[0] != 0.0) throw GridError("grid must start at t = 0");
  double h = ts.back() / static_cast<double>(ts.size() - 1);
  for (size_t i = 0; i < ts.size(); ++i) {
    if (std::fabs(ts[i] - h * static_cast<double>(i)) > 1e-9 * std::max(1.0, ts.back())) {
      throw GridError("grid is not uniform at node " + std::to_string(i));
    }
  }
  GridFunction out(TimeGrid::make(h, static_cast<int>(ts.size())));
  out.values = std::move(vs);
  return out;
}

GridFunction read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GridError("cannot open " + path);
  return read_csv(in);
}

}  // namespace biprab
