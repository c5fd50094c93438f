#include "biprabhakar/bicomplex.hpp"

#include <charconv>
#include <cmath>
#include <vector>

#include "json.hpp"

#include "biprabhakar/errors.hpp"

namespace biprab {

namespace {

bool is_zero_component(const Complex& z) { return std::abs(z) < kNullConeThreshold; }

Complex pow_component(const Complex& base, const Complex& w) {
  if (is_zero_component(base)) {
    if (w == 0.0) return 1.0;
    if (w.real() > 0.0) return 0.0;
    throw NullConeError("power: zero idempotent component raised to an exponent with Re <= 0");
  }
  if (w == 1.0) return base;
  return std::exp(w * std::log(base));
}

}  // namespace

Bicomplex::Bicomplex(const Hyperbolic& h) : z1_(h.p1()), z2_(h.p2()) {}

Bicomplex Bicomplex::from_components(double x0, double x1, double x2, double x3) {
  // w1 = x0 + i1 x1, w2 = x2 + i1 x3; z1 = w1 - i1 w2, z2 = w1 + i1 w2.
  return from_idempotent({x0 + x3, x1 - x2}, {x0 - x3, x1 + x2});
}

std::array<double, 4> Bicomplex::real_components() const {
  return {0.5 * (z1_.real() + z2_.real()), 0.5 * (z1_.imag() + z2_.imag()),
          0.5 * (z2_.imag() - z1_.imag()), 0.5 * (z1_.real() - z2_.real())};
}

bool Bicomplex::is_finite() const {
  return std::isfinite(z1_.real()) && std::isfinite(z1_.imag()) && std::isfinite(z2_.real()) &&
         std::isfinite(z2_.imag());
}

bool Bicomplex::in_null_cone() const { return is_zero_component(z1_) || is_zero_component(z2_); }

Bicomplex operator/(const Bicomplex& a, const Bicomplex& b) { return a * inverse(b); }

ComplexPair split(const Bicomplex& zeta) { return zeta.pair(); }

Bicomplex compose(const ComplexPair& p) { return Bicomplex::from_pair(p); }

Bicomplex mul(const Bicomplex& a, const Bicomplex& b) { return a * b; }

Bicomplex inverse(const Bicomplex& zeta) {
  if (zeta.in_null_cone()) {
    throw NullConeError("division by a zero divisor (an idempotent component is 0)");
  }
  return Bicomplex::from_idempotent(1.0 / zeta.z1(), 1.0 / zeta.z2());
}

Bicomplex power(const Bicomplex& zeta, const Bicomplex& w) {
  return Bicomplex::from_idempotent(pow_component(zeta.z1(), w.z1()), pow_component(zeta.z2(), w.z2()));
}

Bicomplex exp(const Bicomplex& zeta) {
  return Bicomplex::from_idempotent(std::exp(zeta.z1()), std::exp(zeta.z2()));
}

Bicomplex log(const Bicomplex& zeta) {
  if (zeta.in_null_cone()) throw NullConeError("log of a zero divisor");
  return Bicomplex::from_idempotent(std::log(zeta.z1()), std::log(zeta.z2()));
}

Hyperbolic j_modulus(const Bicomplex& zeta) {
  return Hyperbolic::from_idempotent(std::abs(zeta.z1()), std::abs(zeta.z2()));
}

bool hyperbolic_precedes(const Hyperbolic& p, const Hyperbolic& q) {
  return (q - p).nonnegative() && !(q == p);
}

bool hyperbolic_strictly_less(const Hyperbolic& p, const Hyperbolic& q) { return (q - p).positive(); }

bool param_domain_ok(const Bicomplex& zeta) { return zeta.z1().real() > 0.0 && zeta.z2().real() > 0.0; }

// ---------------------------------------------------------------------------
// Text forms

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<double> parse_reals(std::string_view text, char sep, std::string_view what) {
  std::vector<double> out;
  while (true) {
    auto pos = text.find(sep);
    auto field = trim(text.substr(0, pos));
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(value)) {
      throw DomainError("malformed " + std::string(what) + ": '" + std::string(field) + "'");
    }
    out.push_back(value);
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return out;
}

}  // namespace

Bicomplex parse_bicomplex(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw DomainError("idempotent form must end with ']'");
    auto body = text.substr(1, text.size() - 2);
    auto semi = body.find(';');
    if (semi == std::string_view::npos) throw DomainError("idempotent form needs ';' between components");
    auto c1 = parse_reals(body.substr(0, semi), ',', "idempotent component");
    auto c2 = parse_reals(body.substr(semi + 1), ',', "idempotent component");
    if (c1.size() != 2 || c2.size() != 2) {
      throw DomainError("idempotent form is [re1,im1;re2,im2]");
    }
    return Bicomplex::from_idempotent({c1[0], c1[1]}, {c2[0], c2[1]});
  }
  auto x = parse_reals(text, ',', "bicomplex component");
  if (x.size() != 4) throw DomainError("bicomplex text form is x0,x1,x2,x3 or [re1,im1;re2,im2]");
  return Bicomplex::from_components(x[0], x[1], x[2], x[3]);
}

Hyperbolic parse_hyperbolic(std::string_view text) {
  auto x = parse_reals(trim(text), ',', "hyperbolic component");
  if (x.size() != 2) throw DomainError("hyperbolic text form is u1,u4");
  return {x[0], x[1]};
}

std::string to_json_text(const Bicomplex& zeta) {
  auto x = zeta.real_components();
  nlohmann::json j;
  j["x"] = {x[0], x[1], x[2], x[3]};
  j["e"] = {{zeta.z1().real(), zeta.z1().imag()}, {zeta.z2().real(), zeta.z2().imag()}};
  return j.dump();
}

}  // namespace biprab
