#include "biprabhakar/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "biprabhakar/errors.hpp"

namespace biprab {

namespace {

// 15-point Kronrod abscissae (positive half) and weights; the odd-indexed
// abscissae are the 7-point Gauss nodes.
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b;
  Complex value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<Complex(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  Complex fc = f(c);
  Complex kron = fc * kWgk[7];
  Complex gauss = fc * kWg[3];
  Complex fv[15];
  fv[7] = fc;
  for (int j = 0; j < 7; ++j) {
    double dx = h * kXgk[j];
    Complex f1 = f(c - dx), f2 = f(c + dx);
    fv[j] = f1;
    fv[14 - j] = f2;
    kron += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  // QUADPACK-style error scaling.
  Complex mean = 0.5 * kron;
  double resasc = kWgk[7] * std::abs(fc - mean);
  double resabs = kWgk[7] * std::abs(fc);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));
    resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
  }
  resasc *= std::fabs(h);
  resabs *= std::fabs(h);
  double err = std::abs((kron - gauss) * h);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50 * eps)) err = std::max(50 * eps * resabs, err);
  return {a, b, kron * h, err};
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw DomainError("quadrature tolerances must be > 0");
  if (max_subdivisions < 1) throw DomainError("max_subdivisions must be >= 1");
  if (!(tail_cutoff >= 0.0) || !std::isfinite(tail_cutoff)) throw DomainError("tail_cutoff must be finite and >= 0");
}

QuadratureResult integrate(const std::function<Complex(double)>& f, double a, double b, double abs_tol,
                           double rel_tol, int max_subdivisions) {
  QuadratureResult out;
  if (a == b) return out;
  std::priority_queue<Segment> heap;
  Segment first = gk15(f, a, b);
  heap.push(first);
  Complex total = first.value;
  double err = first.error;
  out.evaluations = 15;
  int subdivisions = 1;
  auto finite = [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  while (err > std::max(abs_tol, rel_tol * std::abs(total))) {
    if (!finite(total)) throw QuadratureFailure("integrand is not finite", HUGE_VAL);
    if (subdivisions >= max_subdivisions) {
      std::ostringstream os;
      os << "quadrature did not converge in " << max_subdivisions << " subdivisions (error estimate " << err << ")";
      throw QuadratureFailure(os.str(), err);
    }
    Segment s = heap.top();
    heap.pop();
    double mid = 0.5 * (s.a + s.b);
    Segment left = gk15(f, s.a, mid), right = gk15(f, mid, s.b);
    out.evaluations += 30;
    ++subdivisions;
    heap.push(left);
    heap.push(right);
    total += left.value + right.value - s.value;
    err += left.error + right.error - s.error;
    if (subdivisions % 64 == 0) {
      auto copy = heap;
      total = 0.0;
      err = 0.0;
      while (!copy.empty()) {
        total += copy.top().value;
        err += copy.top().error;
        copy.pop();
      }
    }
  }
  if (!finite(total)) throw QuadratureFailure("integrand is not finite", HUGE_VAL);
  out.value = total;
  out.error = err;
  out.subdivisions = subdivisions;
  return out;
}

}  // namespace biprab
