#ifndef MINUS_ONE_POLYNOMIALS_HPP
#define MINUS_ONE_POLYNOMIALS_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "minus_one/numerics.hpp"

namespace minus_one {

// Dense polynomial over CNum, coefficients lowest power first. The zero
// polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<CNum> coeffs) : c_(std::move(coeffs)) { drop_zero_top(); }

  static Polynomial constant(CNum c) { return Polynomial(std::vector<CNum>{std::move(c)}); }
  static Polynomial linear(CNum c0, CNum c1) { return Polynomial({std::move(c0), std::move(c1)}); }
  static Polynomial identity(mpfr_prec_t bits) {
    return linear(CNum::integer(0, 0, bits), CNum::integer(1, 0, bits));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<CNum>& coeffs() const { return c_; }
  const CNum& operator[](std::size_t k) const { return c_[k]; }
  // Coefficient of x^k, zero beyond the degree.
  CNum coeff(int k) const { return k >= 0 && k <= degree() ? c_[k] : CNum(); }
  const CNum& leading() const { return c_.back(); }

  mpfr_prec_t precision() const {
    mpfr_prec_t b = MPFR_PREC_MIN;
    for (const auto& c : c_) b = std::max(b, c.precision());
    return b;
  }

  // Largest coefficient modulus.
  Real norm() const {
    Real m;
    for (const auto& c : c_) m = max(m, abs(c));
    return m;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    drop_zero_top();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    drop_zero_top();
    return *this;
  }
  Polynomial& operator*=(const CNum& s) {
    for (auto& c : c_) c *= s;
    drop_zero_top();
    return *this;
  }
  Polynomial& operator*=(const Real& s) {
    for (auto& c : c_) c *= s;
    drop_zero_top();
    return *this;
  }
  Polynomial& operator/=(const CNum& s) {
    for (auto& c : c_) c /= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const CNum& s) { return a *= s; }
  friend Polynomial operator*(const CNum& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(Polynomial a, const Real& s) { return a *= s; }
  friend Polynomial operator*(const Real& s, Polynomial a) { return a *= s; }
  friend Polynomial operator/(Polynomial a, const CNum& s) { return a /= s; }

  // Constant-term shortcuts.
  friend Polynomial operator+(Polynomial a, const CNum& s) { return a += constant(s); }
  friend Polynomial operator-(Polynomial a, const CNum& s) { return a -= constant(s); }
  friend Polynomial operator+(Polynomial a, const Real& s) { return a += constant(CNum(s)); }
  friend Polynomial operator-(Polynomial a, const Real& s) { return a -= constant(CNum(s)); }
  friend Polynomial operator+(Polynomial a, long s) {
    return a += constant(CNum(Real(s, std::max<mpfr_prec_t>(a.precision(), 64))));
  }
  friend Polynomial operator-(Polynomial a, long s) {
    return a -= constant(CNum(Real(s, std::max<mpfr_prec_t>(a.precision(), 64))));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<CNum> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void drop_zero_top() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<CNum> c_;
};

inline Polynomial scale(const Polynomial& p, const CNum& s) { return p * s; }

inline CNum evaluate(const Polynomial& p, const CNum& z) {
  CNum acc(Real(0, std::max(p.precision(), z.precision())));
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

inline Polynomial reflect(const Polynomial& p) {
  std::vector<CNum> c = p.coeffs();
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return Polynomial(std::move(c));
}

inline Polynomial differentiate(const Polynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<CNum> c;
  c.reserve(p.degree());
  for (int k = 1; k <= p.degree(); ++k) c.push_back(p[k] * static_cast<long>(k));
  return Polynomial(std::move(c));
}

// q(x) = p(x + delta), by repeated synthetic division (Taylor shift).
inline Polynomial shift(const Polynomial& p, const CNum& delta) {
  std::vector<CNum> c = p.coeffs();
  const int n = p.degree();
  for (int i = 0; i < n; ++i) {
    for (int k = n - 1; k >= i; --k) c[k] += c[k + 1] * delta;
  }
  return Polynomial(std::move(c));
}

// p(q(x))
inline Polynomial compose(const Polynomial& p, const Polynomial& q) {
  Polynomial acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * q + Polynomial::constant(*it);
  }
  return acc;
}

// x -> s x
inline Polynomial scale_variable(const Polynomial& p, const CNum& s) {
  std::vector<CNum> c = p.coeffs();
  CNum power(Real(1, s.precision()));
  for (auto& ck : c) {
    ck *= power;
    power *= s;
  }
  return Polynomial(std::move(c));
}

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

inline DivMod divmod(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (p.degree() < d.degree()) return {Polynomial(), p};
  std::vector<CNum> r = p.coeffs();
  const int dd = d.degree();
  std::vector<CNum> q(p.degree() - dd + 1);
  for (int k = p.degree() - dd; k >= 0; --k) {
    q[k] = r[k + dd] / d.leading();
    for (int j = 0; j <= dd; ++j) r[k + j] -= q[k] * d[j];
  }
  r.resize(dd);
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

// max_k |p_k - q_k| relative to the larger coefficient norm.
inline Real relative_difference(const Polynomial& p, const Polynomial& q) {
  Real scale = max(p.norm(), q.norm());
  Real diff = (p - q).norm();
  if (scale.is_zero()) return diff;
  return diff / scale;
}

inline bool approx_equal(const Polynomial& p, const Polynomial& q, const PrecisionContext& ctx) {
  return relative_difference(p, q) <= ctx.tolerance(8);
}

// Drop top coefficients below tol * scale.
inline Polynomial trimmed(const Polynomial& p, const Real& tol, const Real& scale) {
  std::vector<CNum> c = p.coeffs();
  Real bound = tol * scale;
  while (!c.empty() && abs(c.back()) <= bound) c.pop_back();
  return Polynomial(std::move(c));
}

// Monic polynomial; construction divides by the leading coefficient and then
// sets it to exactly one.
class MonicPolynomial {
 public:
  explicit MonicPolynomial(Polynomial p) : p_(normalize(std::move(p))) {}

  const Polynomial& poly() const { return p_; }
  operator const Polynomial&() const { return p_; }
  int degree() const { return p_.degree(); }
  const std::vector<CNum>& coeffs() const { return p_.coeffs(); }
  const CNum& operator[](std::size_t k) const { return p_[k]; }

 private:
  static Polynomial normalize(Polynomial p) {
    if (p.is_zero()) throw std::domain_error("zero polynomial cannot be monic");
    CNum lead = p.leading();
    std::vector<CNum> c = p.coeffs();
    for (auto& ck : c) ck /= lead;
    c.back() = CNum(Real(1, lead.precision()));
    return Polynomial(std::move(c));
  }

  Polynomial p_;
};

enum class ZeroClass { zero, ambiguous, nonzero };

// Two-threshold rule: below 10^(-digits+6) relative is zero, at or above
// 10^(-digits+10) is nonzero, anything between is reported as ambiguous.
inline ZeroClass classify_remainder(const Real& remainder_norm, const Real& operand_norm,
                                    const PrecisionContext& ctx) {
  if (remainder_norm.is_zero()) return ZeroClass::zero;
  if (operand_norm.is_zero()) return ZeroClass::nonzero;
  Real ratio = remainder_norm / operand_norm;
  if (ratio < ctx.tolerance(6)) return ZeroClass::zero;
  if (ratio < ctx.tolerance(10)) return ZeroClass::ambiguous;
  return ZeroClass::nonzero;
}

inline Polynomial make_monic(const Polynomial& p) { return MonicPolynomial(p).poly(); }

inline Polynomial gcd(Polynomial a, Polynomial b, const PrecisionContext& ctx) {
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.is_zero()) return a.is_zero() ? a : make_monic(a);
  while (true) {
    Real scale = a.norm();
    Polynomial r = divmod(a, b).remainder;
    switch (classify_remainder(r.norm(), scale, ctx)) {
      case ZeroClass::zero:
        return make_monic(b);
      case ZeroClass::ambiguous:
        throw ReductionAmbiguityError("remainder " + (r.norm() / scale).str(3) + " is neither zero nor nonzero");
      case ZeroClass::nonzero:
        break;
    }
    r = trimmed(r, ctx.tolerance(6), scale);
    a = std::move(b);
    b = std::move(r);
    if (b.degree() <= 0) return Polynomial::constant(CNum(Real(1, a.precision())));
  }
}

class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(Polynomial numerator)
      : num_(std::move(numerator)), den_(Polynomial::constant(CNum(Real(1, num_.precision())))) {}
  RationalFunction(Polynomial numerator, Polynomial denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  CNum evaluate(const CNum& z) const { return minus_one::evaluate(num_, z) / minus_one::evaluate(den_, z); }

  friend RationalFunction operator*(const RationalFunction& r, const Polynomial& p) {
    return RationalFunction(r.num_ * p, r.den_);
  }
  friend RationalFunction conj(const RationalFunction& r) {
    auto cj = [](const Polynomial& p) {
      std::vector<CNum> c = p.coeffs();
      for (auto& ck : c) ck = minus_one::conj(ck);
      return Polynomial(std::move(c));
    };
    return RationalFunction(cj(r.num_), cj(r.den_));
  }

 private:
  Polynomial num_;
  Polynomial den_ = Polynomial::constant(CNum::integer(1, 0, 64));
};

// Cancel common factors and normalize the denominator to be monic.
inline RationalFunction rational_reduce(const RationalFunction& r, const PrecisionContext& ctx) {
  const Polynomial& num = r.numerator();
  const Polynomial& den = r.denominator();
  if (num.is_zero()) return RationalFunction(Polynomial(), Polynomial::constant(CNum(ctx.integer(1))));
  Polynomial g = gcd(num, den, ctx);
  Polynomial n = g.degree() > 0 ? divmod(num, g).quotient : num;
  Polynomial d = g.degree() > 0 ? divmod(den, g).quotient : den;
  CNum lead = d.leading();
  return RationalFunction(n / lead, make_monic(d));
}

// Quotient if the denominator divides the numerator; remainders are judged
// against `scale` (default: the numerator norm).
inline std::optional<Polynomial> is_polynomial(const RationalFunction& r, const PrecisionContext& ctx,
                                               std::optional<Real> scale = std::nullopt) {
  auto [q, rem] = divmod(r.numerator(), r.denominator());
  Real s = scale ? *scale : r.numerator().norm();
  switch (classify_remainder(rem.norm(), s, ctx)) {
    case ZeroClass::zero:
      return q;
    case ZeroClass::ambiguous:
      throw ReductionAmbiguityError("singular part " + (rem.norm() / s).str(3) + " is neither zero nor nonzero");
    case ZeroClass::nonzero:
      break;
  }
  return std::nullopt;
}

// Sum over a common denominator built from pairwise least common multiples.
inline RationalFunction sum(std::span<const RationalFunction> terms, const PrecisionContext& ctx) {
  Polynomial den = Polynomial::constant(CNum(ctx.integer(1)));
  for (const auto& t : terms) {
    const Polynomial& d = t.denominator();
    if (d.degree() <= 0) continue;
    Polynomial g = gcd(den, d, ctx);
    den = den * (g.degree() > 0 ? divmod(d, g).quotient : d);
  }
  Polynomial num;
  for (const auto& t : terms) {
    Polynomial factor = divmod(den, t.denominator()).quotient;
    num += t.numerator() * factor;
  }
  return RationalFunction(std::move(num), std::move(den));
}

// Pochhammer symbol of a polynomial argument: p (p+1) ... (p+k-1).
inline Polynomial pochhammer(const Polynomial& p, long k) {
  Polynomial out = Polynomial::constant(CNum(Real(1, p.precision())));
  for (long j = 0; j < k; ++j) {
    out *= p + Polynomial::constant(CNum(Real(j, p.precision())));
  }
  return out;
}

// Terminating pFq whose numerator parameters may be polynomials in x (for
// arguments such as ix/2 + b) and whose argument is a polynomial z(x). The
// series length is fixed by the constant numerator equal to -n.
inline Polynomial hyp_pfq_polynomial(std::span<const Polynomial> numerators, std::span<const CNum> denominators,
                                     const Polynomial& z) {
  std::vector<CNum> constants;
  for (const auto& a : numerators) {
    if (a.degree() <= 0) constants.push_back(a.is_zero() ? CNum() : a[0]);
  }
  const long n = terminating_degree(constants);
  check_denominators(denominators, n);
  mpfr_prec_t bits = z.precision();
  for (const auto& a : numerators) bits = std::max(bits, a.precision());
  Polynomial term = Polynomial::constant(CNum(Real(1, bits)));
  Polynomial total = term;
  for (long k = 0; k < n; ++k) {
    for (const auto& a : numerators) term *= a + Polynomial::constant(CNum(Real(k, bits)));
    CNum den(Real(k + 1, bits));
    for (const auto& b : denominators) den *= b + k;
    term *= z;
    term /= den;
    total += term;
  }
  return total;
}

}  // namespace minus_one

#endif
