#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>

namespace biprab {

using Complex = std::complex<double>;

/// Moduli below this are treated as zero by the null-cone tests.
inline constexpr double kNullConeThreshold = 1e-300;

/// The two idempotent projections (P1, P2) of a bicomplex number.
struct ComplexPair {
  Complex z1;
  Complex z2;

  friend bool operator==(const ComplexPair&, const ComplexPair&) = default;
};

class Hyperbolic;

/// Bicomplex number x0 + i1 x1 + i2 x2 + j x3 with j = i1 i2.
///
/// Stored in idempotent form z1 e1 + z2 e2, where e1 = (1 + j)/2 and
/// e2 = (1 - j)/2; every arithmetic operation acts componentwise on (z1, z2).
/// The four-real form is produced on demand by `real_components()`.
class Bicomplex {
 public:
  constexpr Bicomplex() = default;
  constexpr Bicomplex(double x) : z1_(x), z2_(x) {}  // NOLINT: real embedding
  constexpr Bicomplex(Complex c) : z1_(c), z2_(c) {}  // NOLINT: C(i1) embedding
  Bicomplex(const Hyperbolic& h);                     // NOLINT: D embedding

  static Bicomplex from_components(double x0, double x1, double x2, double x3);
  static constexpr Bicomplex from_idempotent(Complex z1, Complex z2) {
    Bicomplex b;
    b.z1_ = z1;
    b.z2_ = z2;
    return b;
  }
  static constexpr Bicomplex from_pair(const ComplexPair& p) { return from_idempotent(p.z1, p.z2); }

  static Bicomplex e1() { return from_idempotent(1.0, 0.0); }
  static Bicomplex e2() { return from_idempotent(0.0, 1.0); }
  static Bicomplex i1() { return from_components(0, 1, 0, 0); }
  static Bicomplex i2() { return from_components(0, 0, 1, 0); }
  static Bicomplex j() { return from_components(0, 0, 0, 1); }

  constexpr const Complex& z1() const noexcept { return z1_; }
  constexpr const Complex& z2() const noexcept { return z2_; }
  constexpr const Complex& component(int r) const noexcept { return r == 1 ? z1_ : z2_; }
  constexpr ComplexPair pair() const noexcept { return {z1_, z2_}; }

  /// (x0, x1, x2, x3).
  std::array<double, 4> real_components() const;

  double re() const { return 0.5 * (z1_.real() + z2_.real()); }
  double im_j() const { return 0.5 * (z1_.real() - z2_.real()); }

  bool is_zero() const { return z1_ == 0.0 && z2_ == 0.0; }
  bool is_finite() const;
  /// True when one idempotent component vanishes (zero divisors and zero).
  bool in_null_cone() const;

  Bicomplex& operator+=(const Bicomplex& o) {
    z1_ += o.z1_;
    z2_ += o.z2_;
    return *this;
  }
  Bicomplex& operator-=(const Bicomplex& o) {
    z1_ -= o.z1_;
    z2_ -= o.z2_;
    return *this;
  }
  Bicomplex& operator*=(const Bicomplex& o) {
    z1_ *= o.z1_;
    z2_ *= o.z2_;
    return *this;
  }

  friend Bicomplex operator+(Bicomplex a, const Bicomplex& b) { return a += b; }
  friend Bicomplex operator-(Bicomplex a, const Bicomplex& b) { return a -= b; }
  friend Bicomplex operator*(Bicomplex a, const Bicomplex& b) { return a *= b; }
  friend Bicomplex operator-(const Bicomplex& a) { return from_idempotent(-a.z1_, -a.z2_); }
  /// Throws NullConeError when `b` is a zero divisor.
  friend Bicomplex operator/(const Bicomplex& a, const Bicomplex& b);

  friend bool operator==(const Bicomplex&, const Bicomplex&) = default;

 private:
  Complex z1_{};
  Complex z2_{};
};

/// Hyperbolic number u + j v (the real subalgebra spanned by 1 and j).
///
/// Stored through its idempotent components p1 = u + v and p2 = u − v.
class Hyperbolic {
 public:
  constexpr Hyperbolic() = default;
  constexpr Hyperbolic(double u, double v = 0.0) : p1_(u + v), p2_(u - v) {}  // NOLINT

  static constexpr Hyperbolic from_idempotent(double p1, double p2) {
    Hyperbolic h;
    h.p1_ = p1;
    h.p2_ = p2;
    return h;
  }

  constexpr double u() const noexcept { return 0.5 * (p1_ + p2_); }
  constexpr double v() const noexcept { return 0.5 * (p1_ - p2_); }
  constexpr double p1() const noexcept { return p1_; }
  constexpr double p2() const noexcept { return p2_; }

  /// Membership in D+ (both idempotent components nonnegative).
  constexpr bool nonnegative() const noexcept { return p1_ >= 0.0 && p2_ >= 0.0; }
  /// Both idempotent components strictly positive.
  constexpr bool positive() const noexcept { return p1_ > 0.0 && p2_ > 0.0; }

  friend constexpr Hyperbolic operator+(Hyperbolic a, Hyperbolic b) {
    return from_idempotent(a.p1_ + b.p1_, a.p2_ + b.p2_);
  }
  friend constexpr Hyperbolic operator-(Hyperbolic a, Hyperbolic b) {
    return from_idempotent(a.p1_ - b.p1_, a.p2_ - b.p2_);
  }
  friend constexpr Hyperbolic operator*(Hyperbolic a, Hyperbolic b) {
    return from_idempotent(a.p1_ * b.p1_, a.p2_ * b.p2_);
  }
  friend constexpr bool operator==(const Hyperbolic&, const Hyperbolic&) = default;

 private:
  double p1_ = 0.0;
  double p2_ = 0.0;
};

// Idempotent decomposition.
ComplexPair split(const Bicomplex& zeta);
Bicomplex compose(const ComplexPair& p);

Bicomplex mul(const Bicomplex& a, const Bicomplex& b);
/// Multiplicative inverse; NullConeError on zero divisors.
Bicomplex inverse(const Bicomplex& zeta);
/// Principal componentwise power: split(result) = (z1^w1, z2^w2).
///
/// A zero component raised to an exponent with positive real part gives 0,
/// and 0^0 = 1; any other zero base raises NullConeError.
Bicomplex power(const Bicomplex& zeta, const Bicomplex& w);
Bicomplex exp(const Bicomplex& zeta);
/// Principal componentwise logarithm; NullConeError on zero divisors.
Bicomplex log(const Bicomplex& zeta);

/// |z1| e1 + |z2| e2.
Hyperbolic j_modulus(const Bicomplex& zeta);

/// p ≺ q: q - p lies in D+ and q != p.
bool hyperbolic_precedes(const Hyperbolic& p, const Hyperbolic& q);
/// Both idempotent components of q - p strictly positive (used by every
/// convergence guard written as "≺" on hyperbolic moduli).
bool hyperbolic_strictly_less(const Hyperbolic& p, const Hyperbolic& q);

/// |Im_j(zeta)| < Re(zeta), i.e. Re z1 > 0 and Re z2 > 0.
bool param_domain_ok(const Bicomplex& zeta);

/// Parses `x0,x1,x2,x3` or `[re1,im1;re2,im2]`. Throws DomainError.
Bicomplex parse_bicomplex(std::string_view text);
/// Parses `u1,u4` (u + j v). Throws DomainError.
Hyperbolic parse_hyperbolic(std::string_view text);
/// `{"x":[x0,x1,x2,x3],"e":[[re1,im1],[re2,im2]]}` (shortest round-trip decimals).
std::string to_json_text(const Bicomplex& zeta);

}  // namespace biprab
