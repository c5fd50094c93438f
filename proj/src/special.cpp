#include "biprabhakar/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <sstream>

#include "biprabhakar/errors.hpp"
#include "multiprecision.hpp"

namespace biprab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;
const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);

// B_{2m} / (2m (2m-1)), m = 1..10.
constexpr double kStirling[10] = {
    1.0 / 12.0,           -1.0 / 360.0,        1.0 / 1260.0,         -1.0 / 1680.0,
    1.0 / 1188.0,         -691.0 / 360360.0,   1.0 / 156.0,          -3617.0 / 122400.0,
    43867.0 / 244188.0,   -174611.0 / 125400.0};

Complex stirling(Complex z) {
  Complex r = 1.0 / z;
  Complex r2 = r * r;
  Complex sum = kStirling[9];
  for (int m = 8; m >= 0; --m) sum = sum * r2 + kStirling[m];
  return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + sum * r;
}

std::string fmt_complex(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

// log(1/Γ(w)) up to a multiple of 2πi.
Complex log_recip_gamma_any(Complex w) {
  if (w.real() >= 0.5) return -log_gamma(w);
  return log_sin_pi(w) - std::log(kPi) + log_gamma(1.0 - w);
}

}  // namespace

void SeriesPolicy::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError("series policy: rel_tol must be > 0");
  if (max_terms < 1) throw DomainError("series policy: max_terms must be >= 1");
  if (stagnation_window < 1) throw DomainError("series policy: stagnation_window must be >= 1");
  if (!(max_modulus > 0.0)) throw DomainError("series policy: max_modulus must be > 0");
  if (!(accuracy_target > 0.0)) throw DomainError("series policy: accuracy_target must be > 0");
  if (max_precision_bits < 64) throw DomainError("series policy: max_precision_bits must be >= 64");
}

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("log_gamma: non-finite argument");
  }
  if (is_nonpositive_integer(z)) throw PoleError("log_gamma: pole at z = " + fmt_complex(z));
  // lgΓ(z) = lgΓ(z+n) − Σ log(z+j); summing principal logs keeps the
  // principal branch.
  Complex acc = 0.0;
  while (z.real() < 0.5 || std::abs(z) < 15.0) {
    acc += std::log(z);
    z += 1.0;
  }
  return stirling(z) - acc;
}

Complex log_sin_pi(Complex z) {
  double n = std::nearbyint(z.real());
  Complex w(z.real() - n, z.imag());
  bool odd = std::fmod(std::fabs(n), 2.0) == 1.0;
  Complex out;
  if (std::fabs(w.imag()) < 20.0) {
    double s = std::sin(kPi * w.real()), c = std::cos(kPi * w.real());
    double y = kPi * w.imag();
    out = std::log(Complex(s * std::cosh(y), c * std::sinh(y)));
  } else {
    const Complex i(0.0, 1.0);
    if (w.imag() > 0) {
      out = -i * kPi * w + std::log(1.0 - std::exp(2.0 * kPi * i * w)) + Complex(-std::log(2.0), kPi / 2);
    } else {
      out = i * kPi * w + std::log(1.0 - std::exp(-2.0 * kPi * i * w)) + Complex(-std::log(2.0), -kPi / 2);
    }
  }
  if (odd) out += Complex(0.0, kPi);
  return out;
}

Complex recip_gamma(Complex z) {
  if (is_nonpositive_integer(z)) return 0.0;
  return std::exp(log_recip_gamma_any(z));
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

// ---------------------------------------------------------------------------
// Multiprecision reciprocal gamma

namespace mp {

namespace {

struct StirlingTable {
  std::vector<Real> coef;  // B_{2m} / (2m (2m-1))
  Real half_log_2pi;
  explicit StirlingTable(mpfr_prec_t p) : half_log_2pi(p) {}
};

double shift_radius(mpfr_prec_t p) { return 0.12 * static_cast<double>(p) + 5.0; }

const StirlingTable& stirling_table(mpfr_prec_t p) {
  static std::mutex mu;
  static std::map<mpfr_prec_t, std::unique_ptr<StirlingTable>> tables;
  std::lock_guard lock(mu);
  auto& slot = tables[p];
  if (slot) return *slot;
  auto t = std::make_unique<StirlingTable>(p);
  mpfr_prec_t q = p + 32;
  int m_max = static_cast<int>(std::ceil(kPi * shift_radius(p))) + 4;
  Real two_pi(q), fac(q), z(q), num(q), den(q);
  mpfr_const_pi(two_pi.get(), MPFR_RNDN);
  mpfr_mul_2ui(two_pi.get(), two_pi.get(), 1, MPFR_RNDN);
  for (int m = 1; m <= m_max; ++m) {
    // B_{2m} = (−1)^{m+1} 2 (2m)! ζ(2m) / (2π)^{2m}
    mpfr_fac_ui(fac.get(), 2 * m, MPFR_RNDN);
    mpfr_zeta_ui(z.get(), 2 * m, MPFR_RNDN);
    mpfr_mul(num.get(), fac.get(), z.get(), MPFR_RNDN);
    mpfr_mul_2ui(num.get(), num.get(), 1, MPFR_RNDN);
    mpfr_pow_ui(den.get(), two_pi.get(), 2 * m, MPFR_RNDN);
    mpfr_div(num.get(), num.get(), den.get(), MPFR_RNDN);
    mpfr_div_ui(num.get(), num.get(), static_cast<unsigned long>(2 * m) * (2 * m - 1), MPFR_RNDN);
    if (m % 2 == 0) mpfr_neg(num.get(), num.get(), MPFR_RNDN);
    Real c(p);
    mpfr_set(c.get(), num.get(), MPFR_RNDN);
    t->coef.push_back(std::move(c));
  }
  mpfr_log(t->half_log_2pi.get(), two_pi.get(), MPFR_RNDN);
  mpfr_div_2ui(t->half_log_2pi.get(), t->half_log_2pi.get(), 1, MPFR_RNDN);
  slot = std::move(t);
  return *slot;
}

// out = log Γ(v) by Stirling; requires |v| large and Re v > 0.
void stirling(Cplx& out, const Cplx& v, Scratch& s) {
  mpfr_prec_t p = v.re.prec();
  const StirlingTable& tab = stirling_table(p);
  Cplx lv(p), r(p), r2(p), pw(p), term(p);
  log(lv, v, s);
  // (v − 1/2) log v − v + log(2π)/2
  Cplx vh(v);
  mpfr_sub_d(vh.re.get(), vh.re.get(), 0.5, MPFR_RNDN);
  mul(out, vh, lv, s);
  sub(out, out, v);
  mpfr_add(out.re.get(), out.re.get(), tab.half_log_2pi.get(), MPFR_RNDN);
  inv(r, v, s);
  mul(r2, r, r, s);
  pw = r;
  double cut = log2_abs(out) - static_cast<double>(p) - 4.0;
  double prev = HUGE_VAL;
  for (const Real& c : tab.coef) {
    mul(term, pw, c);
    double lt = log2_abs(term);
    if (lt > prev) break;  // asymptotic series started to diverge
    add(out, out, term);
    if (lt < cut) break;
    prev = lt;
    mul(pw, pw, r2, s);
  }
}

}  // namespace

void recip_gamma(Cplx& r, const Cplx& w) {
  mpfr_prec_t p = w.re.prec();
  if (mpfr_zero_p(w.im.get()) && mpfr_integer_p(w.re.get()) && mpfr_sgn(w.re.get()) <= 0) {
    mpfr_set_zero(r.re.get(), 1);
    mpfr_set_zero(r.im.get(), 1);
    return;
  }
  Scratch s(p);
  bool reflect = mpfr_cmp_d(w.re.get(), 0.5) < 0;
  Cplx v(w);
  if (reflect) {
    mpfr_d_sub(v.re.get(), 1.0, w.re.get(), MPFR_RNDN);
    mpfr_neg(v.im.get(), w.im.get(), MPFR_RNDN);
  }
  double vr = v.re.to_double(), vi = v.im.to_double();
  double R = shift_radius(p);
  double need = std::max(0.5 - vr, std::sqrt(std::max(0.0, R * R - vi * vi)) - vr);
  long n = need > 0 ? static_cast<long>(std::ceil(need)) : 0;
  Cplx prod(p, 1.0);
  for (long j = 0; j < n; ++j) {
    mul(prod, prod, v, s);
    mpfr_add_ui(v.re.get(), v.re.get(), 1, MPFR_RNDN);
  }
  Cplx lg(p);
  stirling(lg, v, s);  // log Γ(v + n); Γ(v) = exp(lg) / prod
  if (!reflect) {
    mpfr_neg(lg.re.get(), lg.re.get(), MPFR_RNDN);
    mpfr_neg(lg.im.get(), lg.im.get(), MPFR_RNDN);
    exp(r, lg, s);
    mul(r, r, prod, s);
    return;
  }
  // 1/Γ(w) = sin(πw) Γ(1−w) / π
  Cplx sw(p);
  sin_pi(sw, w, s);
  exp(r, lg, s);
  mul(r, r, sw, s);
  div(r, r, prod, s);
  Real pi(p);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  mpfr_div(r.re.get(), r.re.get(), pi.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), r.im.get(), pi.get(), MPFR_RNDN);
}

}  // namespace mp

// ---------------------------------------------------------------------------
// Series evaluator

namespace detail {

struct MpCoefficients {
  mpfr_prec_t bits;
  std::vector<mp::Cplx> c;
  mp::Cplx poch;  // (δ)_k / k! for k = c.size()
  bool poch_zero = false;

  explicit MpCoefficients(mpfr_prec_t b) : bits(b), poch(b, 1.0) {}
};

}  // namespace detail

ScalarPrabhakar::ScalarPrabhakar(Complex sigma, Complex tau, Complex delta, SeriesPolicy policy)
    : sigma_(sigma), tau_(tau), delta_(delta), policy_(policy), log_poch_(0.0) {
  policy_.validate();
  for (Complex v : {sigma, tau, delta}) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw DomainError("Prabhakar parameters must be finite");
    }
  }
  if (!(sigma.real() > 0.0)) throw DomainError("Re(sigma) > 0 violated");
}

ScalarPrabhakar::~ScalarPrabhakar() = default;
ScalarPrabhakar::ScalarPrabhakar(ScalarPrabhakar&&) noexcept = default;
ScalarPrabhakar& ScalarPrabhakar::operator=(ScalarPrabhakar&&) noexcept = default;

void ScalarPrabhakar::extend(int k) const {
  while (static_cast<int>(coef_.size()) <= k) {
    int n = static_cast<int>(coef_.size());
    Coef c{0.0, true};
    Complex w = sigma_ * static_cast<double>(n) + tau_;
    if (!poch_zero_ && !is_nonpositive_integer(w)) c = {log_poch_ + log_recip_gamma_any(w), false};
    if (!c.zero && std::fabs(c.log_c.real()) < 600.0) {
      c.c = std::exp(c.log_c);
      c.abs_c = std::exp(c.log_c.real());
      c.direct = true;
    }
    coef_.push_back(c);
    Complex f = delta_ + static_cast<double>(n);
    if (f == 0.0) {
      poch_zero_ = true;
    } else if (!poch_zero_) {
      log_poch_ += std::log(f) - std::log(static_cast<double>(n + 1));
    }
  }
}

Complex ScalarPrabhakar::term(int k, Complex z) const {
  extend(k);
  if (coef_[k].zero) return 0.0;
  if (k == 0) return std::exp(coef_[0].log_c);
  if (z == 0.0) return 0.0;
  return std::exp(coef_[k].log_c + static_cast<double>(k) * std::log(z));
}

namespace {

double fast_abs(Complex z) {
  double n = std::norm(z);
  return n > 1e-290 && n < 1e290 ? std::sqrt(n) : std::abs(z);
}

}  // namespace

SeriesResult ScalarPrabhakar::evaluate(Complex z, double abs_floor) const {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("Prabhakar argument must be finite");
  }
  double az = std::abs(z);
  if (az > policy_.max_modulus) {
    std::ostringstream os;
    os << "|z| = " << az << " exceeds the series accuracy domain (" << policy_.max_modulus << ")";
    throw NoConvergence(os.str());
  }
  SeriesResult res;
  if (z == 0.0) {
    res.value = term(0, z);
    res.terms = 1;
    res.error_estimate = kUnitRoundoff * std::abs(res.value) * (std::abs(coef_[0].log_c) + 4.0);
    return res;
  }
  const Complex lz = std::log(z);
  const double lz_abs = std::abs(lz);
  Complex sum = 0.0, zpow = 1.0;
  double total = 0.0, weighted = 0.0, prev = HUGE_VAL, azpow = 1.0;
  int run = 0, k = 0;
  for (;; ++k) {
    if (k >= policy_.max_terms) {
      throw NoConvergence("Prabhakar series: max_terms = " + std::to_string(policy_.max_terms) +
                          " reached before the stopping rule held");
    }
    extend(k);
    const Coef& c = coef_[k];
    Complex t = 0.0;
    double at = 0.0;
    if (c.zero) {
    } else if (c.direct && std::fabs(k * lz.real()) < 600.0) {
      t = c.c * zpow;
      at = c.abs_c * azpow;
    } else {
      t = std::exp(c.log_c + static_cast<double>(k) * lz);
      at = std::abs(t);
    }
    zpow *= z;
    azpow *= az;
    sum += t;
    total += at;
    weighted += at * (std::abs(c.log_c) + k * (2.0 + lz_abs) + 4.0);
    if (!std::isfinite(total) || !std::isfinite(sum.real()) || !std::isfinite(sum.imag())) {
      throw NoConvergence("Prabhakar series overflowed");
    }
    // (δ)_{k+1} = 0: the series is a polynomial and has ended.
    if (delta_ + static_cast<double>(k) == 0.0) {
      ++k;
      break;
    }
    bool eligible = k >= 1 && sigma_.real() * k + tau_.real() > 1.0 && at <= prev;
    if (eligible && at <= policy_.rel_tol * std::max(fast_abs(sum), kUnitRoundoff * total)) {
      ++run;
    } else {
      run = 0;
    }
    prev = at;
    if (run >= policy_.stagnation_window) {
      ++k;
      break;
    }
  }
  res.value = sum;
  res.terms = k;
  res.error_estimate = kUnitRoundoff * weighted;
  double tol = std::max(policy_.accuracy_target * std::abs(sum), abs_floor);
  if (res.error_estimate <= tol) return res;
  if (!policy_.extended_precision) {
    res.accuracy_met = false;
    return res;
  }
  return evaluate_mp(z, res, abs_floor);
}

namespace {

int round_bits(double b) { return 64 * static_cast<int>(std::ceil(b / 64.0)); }

}  // namespace

SeriesResult ScalarPrabhakar::evaluate_mp(Complex z, const SeriesResult& dbl, double abs_floor) const {
  const int max_bits = policy_.max_precision_bits;
  double weighted = dbl.error_estimate / kUnitRoundoff;
  double tol = std::max(policy_.accuracy_target * std::abs(dbl.value), abs_floor);
  tol = std::max(tol, weighted * std::exp2(-max_bits));
  int bits = std::clamp(round_bits(std::log2(weighted / tol) + 32.0), 128, max_bits);
  for (;;) {
    SeriesResult r = sum_mp(z, bits);
    double t = std::max(policy_.accuracy_target * std::abs(r.value), abs_floor);
    if (r.error_estimate <= t) return r;
    if (bits >= max_bits) {
      r.accuracy_met = false;
      return r;
    }
    int next = t > 0.0 ? round_bits(bits + std::log2(r.error_estimate / t) + 16.0) : 2 * bits;
    bits = std::min(max_bits, std::max(next, bits + 64));
  }
}

SeriesResult ScalarPrabhakar::sum_mp(Complex z, int bits) const {
  auto& slot = mp_[bits];
  if (!slot) slot = std::make_unique<detail::MpCoefficients>(bits);
  detail::MpCoefficients& mc = *slot;
  const mpfr_prec_t p = bits;
  mp::Scratch s(p);

  auto ensure = [&](int k) {
    while (static_cast<int>(mc.c.size()) <= k) {
      long n = static_cast<long>(mc.c.size());
      mp::Cplx w(p, sigma_);
      mpfr_mul_si(w.re.get(), w.re.get(), n, MPFR_RNDN);
      mpfr_mul_si(w.im.get(), w.im.get(), n, MPFR_RNDN);
      mpfr_add_d(w.re.get(), w.re.get(), tau_.real(), MPFR_RNDN);
      mpfr_add_d(w.im.get(), w.im.get(), tau_.imag(), MPFR_RNDN);
      mp::Cplx c(p);
      if (!mc.poch_zero) {
        mp::recip_gamma(c, w);
        mp::mul(c, c, mc.poch, s);
      }
      mc.c.push_back(std::move(c));
      // poch *= (δ + n) / (n + 1)
      mp::Cplx f(p, delta_);
      mpfr_add_si(f.re.get(), f.re.get(), n, MPFR_RNDN);
      if (f.is_zero()) {
        mc.poch_zero = true;
      } else {
        mp::mul(mc.poch, mc.poch, f, s);
        mpfr_div_si(mc.poch.re.get(), mc.poch.re.get(), n + 1, MPFR_RNDN);
        mpfr_div_si(mc.poch.im.get(), mc.poch.im.get(), n + 1, MPFR_RNDN);
      }
    }
  };

  const mp::Cplx zm(p, z);
  mp::Cplx zpow(p, 1.0), t(p), sum(p);
  const double log2_tol = std::log2(policy_.rel_tol);
  const double shift_err = 0.12 * bits + 16.0;
  double total = 0.0, weighted = 0.0, prev = HUGE_VAL;
  int run = 0, k = 0;
  for (;; ++k) {
    if (k >= policy_.max_terms) {
      throw NoConvergence("Prabhakar series: max_terms = " + std::to_string(policy_.max_terms) +
                          " reached before the stopping rule held");
    }
    ensure(k);
    extend(k);
    mp::mul(t, mc.c[k], zpow, s);
    mp::add(sum, sum, t);
    double lt = mp::log2_abs(t);
    double at = std::exp2(lt);
    total += at;
    weighted += at * (2.0 * k + std::abs(coef_[k].log_c) + shift_err);
    if (delta_ + static_cast<double>(k) == 0.0) {
      // (δ)_{k+1} = 0: remaining coefficients vanish.
      ++k;
      break;
    }
    bool eligible = k >= 1 && sigma_.real() * k + tau_.real() > 1.0 && at <= prev;
    double scale = std::max(mp::log2_abs(sum), std::log2(total) - bits);
    if (eligible && lt <= log2_tol + scale) {
      ++run;
    } else {
      run = 0;
    }
    prev = at;
    if (run >= policy_.stagnation_window) {
      ++k;
      break;
    }
    mp::mul(zpow, zpow, zm, s);
  }
  SeriesResult res;
  res.value = sum.to_complex();
  if (!std::isfinite(res.value.real()) || !std::isfinite(res.value.imag())) {
    throw NoConvergence("Prabhakar series overflowed");
  }
  res.terms = k;
  res.precision_bits = bits;
  res.error_estimate = std::exp2(-bits) * weighted;
  return res;
}

Complex prabhakar_complex(const ComplexPrabhakarArgs& a, const SeriesPolicy& policy) {
  return ScalarPrabhakar(a.sigma, a.tau, a.delta, policy).evaluate(a.z).value;
}

Complex prabhakar_complex(Complex sigma, Complex tau, Complex delta, Complex z, const SeriesPolicy& policy) {
  return prabhakar_complex(ComplexPrabhakarArgs{sigma, tau, delta, z}, policy);
}

Complex ml_two_param(Complex sigma, Complex tau, Complex z, const SeriesPolicy& policy) {
  return prabhakar_complex(sigma, tau, 1.0, z, policy);
}

}  // namespace biprab
