// Thin RAII layer over MPFR for the complex arithmetic the series needs.
#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include <mpfr.h>

namespace biprab::mp {

class Real {
 public:
  explicit Real(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(mpfr_prec_t prec, double d) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, d, MPFR_RNDN);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  void set(double d) { mpfr_set_d(v_, d, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

struct Cplx {
  Real re, im;

  explicit Cplx(mpfr_prec_t prec) : re(prec), im(prec) {}
  Cplx(mpfr_prec_t prec, std::complex<double> z) : re(prec, z.real()), im(prec, z.imag()) {}

  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
  bool is_zero() const { return mpfr_zero_p(re.get()) && mpfr_zero_p(im.get()); }
};

/// log2 of |x|; −inf for zero.
inline double log2_abs(const Real& x) {
  if (mpfr_zero_p(x.get())) return -HUGE_VAL;
  long e = 0;
  double m = mpfr_get_d_2exp(&e, x.get(), MPFR_RNDN);
  return static_cast<double>(e) + std::log2(std::fabs(m));
}

inline double log2_abs(const Cplx& z) {
  double a = log2_abs(z.re), b = log2_abs(z.im);
  if (a < b) std::swap(a, b);
  if (a == -HUGE_VAL) return a;
  return a + 0.5 * std::log2(1.0 + std::exp2(2.0 * (b - a)));
}

/// Scratch registers reused across operations to avoid reallocation.
struct Scratch {
  Real t1, t2, t3, t4;
  explicit Scratch(mpfr_prec_t prec) : t1(prec), t2(prec), t3(prec), t4(prec) {}
};

inline void add(Cplx& r, const Cplx& a, const Cplx& b) {
  mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}

inline void sub(Cplx& r, const Cplx& a, const Cplx& b) {
  mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}

// r may alias a or b.
inline void mul(Cplx& r, const Cplx& a, const Cplx& b, Scratch& s) {
  mpfr_fmms(s.t1.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_fmma(s.t2.get(), a.re.get(), b.im.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_swap(r.re.get(), s.t1.get());
  mpfr_swap(r.im.get(), s.t2.get());
}

inline void mul(Cplx& r, const Cplx& a, const Real& b) {
  mpfr_mul(r.re.get(), a.re.get(), b.get(), MPFR_RNDN);
  mpfr_mul(r.im.get(), a.im.get(), b.get(), MPFR_RNDN);
}

// r = 1/a; r may alias a.
inline void inv(Cplx& r, const Cplx& a, Scratch& s) {
  mpfr_fmma(s.t1.get(), a.re.get(), a.re.get(), a.im.get(), a.im.get(), MPFR_RNDN);
  mpfr_div(r.re.get(), a.re.get(), s.t1.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), a.im.get(), s.t1.get(), MPFR_RNDN);
  mpfr_neg(r.im.get(), r.im.get(), MPFR_RNDN);
}

// r = a/b; r may alias a or b.
inline void div(Cplx& r, const Cplx& a, const Cplx& b, Scratch& s) {
  mpfr_fmma(s.t3.get(), b.re.get(), b.re.get(), b.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_fmma(s.t1.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_fmms(s.t2.get(), a.im.get(), b.re.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_div(r.re.get(), s.t1.get(), s.t3.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), s.t2.get(), s.t3.get(), MPFR_RNDN);
}

// Principal log; r may alias a.
inline void log(Cplx& r, const Cplx& a, Scratch& s) {
  mpfr_hypot(s.t1.get(), a.re.get(), a.im.get(), MPFR_RNDN);
  mpfr_atan2(s.t2.get(), a.im.get(), a.re.get(), MPFR_RNDN);
  mpfr_log(r.re.get(), s.t1.get(), MPFR_RNDN);
  mpfr_swap(r.im.get(), s.t2.get());
}

// r may alias a.
inline void exp(Cplx& r, const Cplx& a, Scratch& s) {
  mpfr_exp(s.t1.get(), a.re.get(), MPFR_RNDN);
  mpfr_sin_cos(s.t2.get(), s.t3.get(), a.im.get(), MPFR_RNDN);
  mpfr_mul(r.re.get(), s.t1.get(), s.t3.get(), MPFR_RNDN);
  mpfr_mul(r.im.get(), s.t1.get(), s.t2.get(), MPFR_RNDN);
}

// r = sin(pi a); r may alias a.
inline void sin_pi(Cplx& r, const Cplx& a, Scratch& s) {
  mpfr_const_pi(s.t4.get(), MPFR_RNDN);
  mpfr_mul(s.t1.get(), a.re.get(), s.t4.get(), MPFR_RNDN);
  mpfr_mul(s.t2.get(), a.im.get(), s.t4.get(), MPFR_RNDN);
  mpfr_sinh_cosh(s.t3.get(), s.t4.get(), s.t2.get(), MPFR_RNDN);
  mpfr_sin_cos(r.re.get(), r.im.get(), s.t1.get(), MPFR_RNDN);
  mpfr_mul(r.re.get(), r.re.get(), s.t4.get(), MPFR_RNDN);
  mpfr_mul(r.im.get(), r.im.get(), s.t3.get(), MPFR_RNDN);
}

/// 1/Γ(w) at the precision of `w`.
void recip_gamma(Cplx& r, const Cplx& w);

}  // namespace biprab::mp
