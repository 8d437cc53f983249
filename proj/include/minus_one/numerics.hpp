#ifndef MINUS_ONE_NUMERICS_HPP
#define MINUS_ONE_NUMERICS_HPP

#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdlib>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "minus_one/errors.hpp"

namespace minus_one {

// Owning MPFR value. Every value carries its own precision; binary operations
// round to the wider of the two operands.
class Real {
 public:
  Real() {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_set_zero(v_, 1);
  }
  Real(long value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, value, MPFR_RNDN);
  }
  Real(const Real& other) {
    mpfr_init2(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  Real(Real&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
  }
  Real& operator=(const Real& other) {
    if (this != &other) {
      if (precision() != other.precision()) mpfr_set_prec(v_, other.precision());
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real zero(mpfr_prec_t bits) { return Real(0, bits); }

  // Exact binary value of d.
  static Real from_double(double d, mpfr_prec_t bits) {
    Real r(0, std::max<mpfr_prec_t>(bits, 53));
    mpfr_set_d(r.v_, d, MPFR_RNDN);
    return r;
  }

  // Decimal text, optionally written as a ratio "p/q".
  static Real parse(std::string_view text, mpfr_prec_t bits) {
    std::string s(text);
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      return parse(s.substr(0, slash), bits) / parse(s.substr(slash + 1), bits);
    }
    Real r(0, bits);
    if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
      throw std::invalid_argument("not a number: '" + s + "'");
    }
    return r;
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  // Round in place to at least `bits` (never narrows).
  Real& widen(mpfr_prec_t bits) {
    if (bits > precision()) mpfr_prec_round(v_, bits, MPFR_RNDN);
    return *this;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  std::string str(int digits = 17) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  Real operator-() const {
    Real r(0, precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  Real& operator+=(const Real& o) {
    widen(o.precision());
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& o) {
    widen(o.precision());
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    widen(o.precision());
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(const Real& o) {
    widen(o.precision());
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator+=(long o) {
    mpfr_add_si(v_, v_, o, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(long o) {
    mpfr_sub_si(v_, v_, o, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(long o) {
    mpfr_mul_si(v_, v_, o, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(long o) {
    mpfr_div_si(v_, v_, o, MPFR_RNDN);
    return *this;
  }

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator+(Real a, long b) { return a += b; }
  friend Real operator-(Real a, long b) { return a -= b; }
  friend Real operator*(Real a, long b) { return a *= b; }
  friend Real operator/(Real a, long b) { return a /= b; }
  friend Real operator+(long a, Real b) { return b += a; }
  friend Real operator*(long a, Real b) { return b *= a; }
  friend Real operator-(long a, const Real& b) {
    Real r(0, b.precision());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(long a, const Real& b) {
    Real r(0, b.precision());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b) {
    if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp_si(a.v_, b);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }

 private:
  mpfr_t v_;
};

namespace detail {

template <class F>
Real unary(const Real& a, F f) {
  Real r(0, a.precision());
  f(r.get(), a.get());
  return r;
}

template <class F>
Real binary(const Real& a, const Real& b, F f) {
  Real r(0, std::max(a.precision(), b.precision()));
  f(r.get(), a.get(), b.get());
  return r;
}

}  // namespace detail

inline Real abs(const Real& a) {
  return detail::unary(a, [](mpfr_ptr r, mpfr_srcptr x) { mpfr_abs(r, x, MPFR_RNDN); });
}
inline Real sqrt(const Real& a) {
  return detail::unary(a, [](mpfr_ptr r, mpfr_srcptr x) { mpfr_sqrt(r, x, MPFR_RNDN); });
}
inline Real exp(const Real& a) {
  return detail::unary(a, [](mpfr_ptr r, mpfr_srcptr x) { mpfr_exp(r, x, MPFR_RNDN); });
}
inline Real expm1(const Real& a) {
  return detail::unary(a, [](mpfr_ptr r, mpfr_srcptr x) { mpfr_expm1(r, x, MPFR_RNDN); });
}
inline Real log(const Real& a) {
  return detail::unary(a, [](mpfr_ptr r, mpfr_srcptr x) { mpfr_log(r, x, MPFR_RNDN); });
}
inline Real log10(const Real& a) {
  return detail::unary(a, [](mpfr_ptr r, mpfr_srcptr x) { mpfr_log10(r, x, MPFR_RNDN); });
}
inline Real sin(const Real& a) {
  return detail::unary(a, [](mpfr_ptr r, mpfr_srcptr x) { mpfr_sin(r, x, MPFR_RNDN); });
}
inline Real cos(const Real& a) {
  return detail::unary(a, [](mpfr_ptr r, mpfr_srcptr x) { mpfr_cos(r, x, MPFR_RNDN); });
}
inline Real sinh(const Real& a) {
  return detail::unary(a, [](mpfr_ptr r, mpfr_srcptr x) { mpfr_sinh(r, x, MPFR_RNDN); });
}
inline Real cosh(const Real& a) {
  return detail::unary(a, [](mpfr_ptr r, mpfr_srcptr x) { mpfr_cosh(r, x, MPFR_RNDN); });
}
inline Real tanh(const Real& a) {
  return detail::unary(a, [](mpfr_ptr r, mpfr_srcptr x) { mpfr_tanh(r, x, MPFR_RNDN); });
}
inline Real floor(const Real& a) {
  return detail::unary(a, [](mpfr_ptr r, mpfr_srcptr x) { mpfr_floor(r, x); });
}
inline Real round(const Real& a) {
  return detail::unary(a, [](mpfr_ptr r, mpfr_srcptr x) { mpfr_round(r, x); });
}
inline Real pow(const Real& a, const Real& b) {
  return detail::binary(a, b, [](mpfr_ptr r, mpfr_srcptr x, mpfr_srcptr y) { mpfr_pow(r, x, y, MPFR_RNDN); });
}
inline Real pow(const Real& a, long n) {
  return detail::unary(a, [n](mpfr_ptr r, mpfr_srcptr x) { mpfr_pow_si(r, x, n, MPFR_RNDN); });
}
inline Real atan2(const Real& y, const Real& x) {
  return detail::binary(y, x, [](mpfr_ptr r, mpfr_srcptr a, mpfr_srcptr b) { mpfr_atan2(r, a, b, MPFR_RNDN); });
}
inline Real hypot(const Real& a, const Real& b) {
  return detail::binary(a, b, [](mpfr_ptr r, mpfr_srcptr x, mpfr_srcptr y) { mpfr_hypot(r, x, y, MPFR_RNDN); });
}
inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }
inline Real min(const Real& a, const Real& b) { return b < a ? b : a; }

// Precision, tolerances and the constant tables shared by every evaluation at
// that precision. Immutable; copies share the tables.
class PrecisionContext {
 public:
  explicit PrecisionContext(int digits = 50) {
    if (digits < 15) throw std::invalid_argument("digits must be >= 15");
    auto t = std::make_shared<Tables>();
    t->digits = digits;
    t->bits = static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
    t->pi = Real(0, t->bits);
    mpfr_const_pi(t->pi.get(), MPFR_RNDN);
    t->half_log_two_pi = log(t->pi * 2) / 2;
    t->stirling_radius = digits / 2 + 10;
    build_stirling(*t);
    t_ = std::move(t);
  }

  int digits() const { return t_->digits; }
  mpfr_prec_t bits() const { return t_->bits; }

  Real zero() const { return Real(0, bits()); }
  Real integer(long v) const { return Real(v, bits()); }
  Real ratio(long p, long q) const { return Real(p, bits()) / q; }
  Real parse(std::string_view text) const { return Real::parse(text, bits()); }
  Real from_double(double d) const { return Real::from_double(d, bits()); }
  Real pow10(long e) const { return pow(integer(10), e); }
  // 10^(-digits + shift): every tolerance in the library is expressed this way.
  Real tolerance(int shift) const { return pow10(-static_cast<long>(digits()) + shift); }
  Real epsilon() const { return tolerance(0); }

  const Real& pi() const { return t_->pi; }
  const Real& half_log_two_pi() const { return t_->half_log_two_pi; }
  long stirling_radius() const { return t_->stirling_radius; }
  // B_{2k} / (2k (2k-1)), k = 1, 2, ...
  std::span<const Real> stirling() const { return t_->stirling; }

 private:
  struct Tables {
    int digits = 0;
    mpfr_prec_t bits = 0;
    Real pi;
    Real half_log_two_pi;
    long stirling_radius = 0;
    std::vector<Real> stirling;
  };

  // Bernoulli numbers in exact rationals (Akiyama-Tanigawa).
  static void build_stirling(Tables& t) {
    const int count = static_cast<int>(1.1 * t.digits) + 24;  // highest index 2k
    std::vector<mpq_t> a(count + 1);
    for (auto& q : a) mpq_init(q);
    mpq_t tmp;
    mpq_init(tmp);
    for (int m = 0; m <= count; ++m) {
      mpq_set_ui(a[m], 1, m + 1);
      for (int j = m; j >= 1; --j) {
        mpq_sub(tmp, a[j - 1], a[j]);
        mpq_set_ui(a[j - 1], j, 1);
        mpq_mul(a[j - 1], a[j - 1], tmp);
      }
      if (m >= 2 && m % 2 == 0) {
        Real b(0, t.bits);
        mpfr_set_q(b.get(), a[0], MPFR_RNDN);
        t.stirling.push_back(b / (static_cast<long>(m) * (m - 1)));
      }
    }
    mpq_clear(tmp);
    for (auto& q : a) mpq_clear(q);
  }

  std::shared_ptr<const Tables> t_;
};

struct CNum {
  Real re;
  Real im;

  CNum() = default;
  explicit CNum(Real r) : re(std::move(r)), im(0, re.precision()) {}
  CNum(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  static CNum integer(long re, long im, mpfr_prec_t bits) { return CNum(Real(re, bits), Real(im, bits)); }
  static CNum imag_unit(mpfr_prec_t bits) { return integer(0, 1, bits); }

  mpfr_prec_t precision() const { return std::max(re.precision(), im.precision()); }
  bool is_real() const { return im.is_zero(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  CNum operator-() const { return CNum(-re, -im); }

  CNum& operator+=(const CNum& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  CNum& operator-=(const CNum& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  CNum& operator*=(const CNum& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  CNum& operator/=(const CNum& o) {
    if (o.im.is_zero()) {
      re /= o.re;
      im /= o.re;
      return *this;
    }
    Real d = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }
  CNum& operator+=(const Real& o) {
    re += o;
    return *this;
  }
  CNum& operator-=(const Real& o) {
    re -= o;
    return *this;
  }
  CNum& operator*=(const Real& o) {
    re *= o;
    im *= o;
    return *this;
  }
  CNum& operator/=(const Real& o) {
    re /= o;
    im /= o;
    return *this;
  }
  CNum& operator+=(long o) {
    re += o;
    return *this;
  }
  CNum& operator-=(long o) {
    re -= o;
    return *this;
  }
  CNum& operator*=(long o) {
    re *= o;
    im *= o;
    return *this;
  }
  CNum& operator/=(long o) {
    re /= o;
    im /= o;
    return *this;
  }

  friend CNum operator+(CNum a, const CNum& b) { return a += b; }
  friend CNum operator-(CNum a, const CNum& b) { return a -= b; }
  friend CNum operator*(CNum a, const CNum& b) { return a *= b; }
  friend CNum operator/(CNum a, const CNum& b) { return a /= b; }
  friend CNum operator+(CNum a, const Real& b) { return a += b; }
  friend CNum operator-(CNum a, const Real& b) { return a -= b; }
  friend CNum operator*(CNum a, const Real& b) { return a *= b; }
  friend CNum operator/(CNum a, const Real& b) { return a /= b; }
  friend CNum operator+(const Real& a, CNum b) { return b += a; }
  friend CNum operator-(const Real& a, const CNum& b) { return CNum(a - b.re, -b.im); }
  friend CNum operator*(const Real& a, CNum b) { return b *= a; }
  friend CNum operator/(const Real& a, const CNum& b) { return CNum(a) / b; }
  friend CNum operator+(CNum a, long b) { return a += b; }
  friend CNum operator-(CNum a, long b) { return a -= b; }
  friend CNum operator*(CNum a, long b) { return a *= b; }
  friend CNum operator/(CNum a, long b) { return a /= b; }
  friend CNum operator+(long a, CNum b) { return b += a; }
  friend CNum operator-(long a, const CNum& b) { return CNum(a - b.re, -b.im); }
  friend CNum operator*(long a, CNum b) { return b *= a; }
  friend CNum operator/(long a, const CNum& b) { return CNum(Real(a, b.precision())) / b; }

  friend bool operator==(const CNum& a, const CNum& b) { return a.re == b.re && a.im == b.im; }
};

inline CNum conj(const CNum& z) { return CNum(z.re, -z.im); }
inline Real abs2(const CNum& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const CNum& z) { return hypot(z.re, z.im); }
inline Real arg(const CNum& z) { return atan2(z.im, z.re); }

inline CNum exp(const CNum& z) {
  Real m = exp(z.re);
  if (z.im.is_zero()) return CNum(m);
  return CNum(m * cos(z.im), m * sin(z.im));
}
inline CNum log(const CNum& z) { return CNum(log(abs(z)), arg(z)); }
inline CNum sqrt(const CNum& z) {
  if (z.im.is_zero() && z.re.sign() >= 0) return CNum(sqrt(z.re));
  Real r = abs(z);
  Real a = sqrt((r + z.re) / 2);
  Real b = sqrt((r - z.re) / 2);
  if (z.im.sign() < 0) b = -b;
  return CNum(a, b);
}
inline CNum sin(const CNum& z) {
  if (z.im.is_zero()) return CNum(sin(z.re));
  return CNum(sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im));
}
inline CNum cos(const CNum& z) {
  if (z.im.is_zero()) return CNum(cos(z.re));
  return CNum(cos(z.re) * cosh(z.im), -(sin(z.re) * sinh(z.im)));
}
inline CNum pow(CNum base, long n) {
  if (n < 0) return pow(1 / base, -n);
  CNum out(Real(1, base.precision()));
  while (n > 0) {
    if (n & 1) out *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return out;
}

inline CNum widened(CNum z, mpfr_prec_t bits) {
  z.re.widen(bits);
  z.im.widen(bits);
  return z;
}

// -n if z is exactly the non-positive integer -n.
inline std::optional<long> nonpositive_integer(const CNum& z) {
  if (!z.im.is_zero() || !z.re.is_integer() || z.re.sign() > 0) return std::nullopt;
  if (mpfr_fits_slong_p(z.re.get(), MPFR_RNDN) == 0) return std::nullopt;
  return -z.re.to_long();
}

// Logarithm of Gamma, correct modulo 2*pi*i (only exp and the real part are
// meaningful away from the principal sheet).
inline CNum log_gamma(const CNum& z_in, const PrecisionContext& ctx) {
  CNum z = widened(z_in, ctx.bits());
  if (nonpositive_integer(z)) throw PoleError("gamma pole at " + z.re.str());
  if (mpfr_cmp_d(z.re.get(), 0.5) < 0) {
    CNum s = sin(z * ctx.pi());
    return CNum(log(ctx.pi())) - log(s) - log_gamma(1 - z, ctx);
  }
  const long radius = ctx.stirling_radius();
  const long radius2 = radius * radius;
  CNum w = z;
  std::optional<CNum> product;
  while (abs2(w) < radius2) {
    product = product ? *product * w : w;
    w += 1;
  }
  CNum half_w = w - ctx.ratio(1, 2);
  CNum sum = half_w * log(w) - w + ctx.half_log_two_pi();
  CNum inv = 1 / w;
  CNum inv2 = inv * inv;
  CNum power = inv;
  Real stop = ctx.tolerance(-6) * (abs(sum) + 1);
  for (const Real& c : ctx.stirling()) {
    CNum term = power * c;
    sum += term;
    if (abs(term) < stop) break;
    power *= inv2;
  }
  if (product) sum -= log(*product);
  return sum;
}

inline Real gamma(const Real& x_in, const PrecisionContext& ctx) {
  Real x = x_in;
  x.widen(ctx.bits());
  if (x.is_integer() && x.sign() <= 0) throw PoleError("gamma pole at " + x.str());
  Real r(0, x.precision());
  mpfr_gamma(r.get(), x.get(), MPFR_RNDN);
  return r;
}

inline CNum gamma(const CNum& z, const PrecisionContext& ctx) {
  if (z.is_real()) return CNum(gamma(z.re, ctx));
  return exp(log_gamma(z, ctx));
}

// log|Gamma(z)|, the quantity every |Gamma|^2 weight is built from.
inline Real log_abs_gamma(const CNum& z, const PrecisionContext& ctx) {
  if (z.is_real()) {
    Real x = z.re;
    x.widen(ctx.bits());
    if (x.is_integer() && x.sign() <= 0) throw PoleError("gamma pole at " + x.str());
    Real r(0, x.precision());
    int sgn = 0;
    mpfr_lgamma(r.get(), &sgn, x.get(), MPFR_RNDN);
    return r;
  }
  return log_gamma(z, ctx).re;
}

inline CNum pochhammer(const CNum& a, long n) {
  CNum out(Real(1, a.precision()));
  for (long k = 0; k < n; ++k) out *= a + k;
  return out;
}

inline Real pochhammer(const Real& a, long n) {
  Real out(1, a.precision());
  for (long k = 0; k < n; ++k) out *= a + k;
  return out;
}

// Number of terms minus one of a terminating series: the smallest n among
// numerator parameters equal to -n.
inline long terminating_degree(std::span<const CNum> numerators) {
  std::optional<long> n;
  for (const auto& a : numerators) {
    if (auto m = nonpositive_integer(a)) n = n ? std::min(*n, *m) : *m;
  }
  if (!n) throw std::invalid_argument("hypergeometric series does not terminate");
  return *n;
}

inline void check_denominators(std::span<const CNum> denominators, long n) {
  for (const auto& b : denominators) {
    if (auto m = nonpositive_integer(b); m && *m < n) {
      throw ZeroDenominatorError("denominator Pochhammer vanishes at parameter -" + std::to_string(*m));
    }
  }
}

inline CNum hyp_pfq_terminating(std::span<const CNum> numerators, std::span<const CNum> denominators,
                                const CNum& z) {
  const long n = terminating_degree(numerators);
  check_denominators(denominators, n);
  mpfr_prec_t bits = z.precision();
  for (const auto& a : numerators) bits = std::max(bits, a.precision());
  for (const auto& b : denominators) bits = std::max(bits, b.precision());
  CNum term(Real(1, bits));
  CNum sum = term;
  for (long k = 0; k < n; ++k) {
    for (const auto& a : numerators) term *= a + k;
    for (const auto& b : denominators) term /= b + k;
    term *= z;
    term /= k + 1;
    sum += term;
  }
  return sum;
}

}  // namespace minus_one

#endif
