#ifndef MINUS_ONE_FAMILY_HPP
#define MINUS_ONE_FAMILY_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "minus_one/dunkl.hpp"
#include "minus_one/errors.hpp"
#include "minus_one/polynomials.hpp"

namespace minus_one {

enum class FamilyId {
  continuous_bannai_ito,
  big_minus1_jacobi,
  chihara,
  continuous_minus1_hahn_1,
  continuous_minus1_hahn_2,
  generalized_symmetric_bannai_ito,
  little_minus1_jacobi,
  generalized_gegenbauer,
  minus1_meixner_pollaczek,
  symmetric_bannai_ito,
  special_little_minus1_jacobi,
  gegenbauer,
  generalized_hermite,
  hermite,
  continuous_complementary_bannai_ito,
  wilson,
  continuous_dual_hahn,
  little_q_jacobi_dilated,
  continuous_q_hahn,
  q_meixner_pollaczek,
  big_q_jacobi,
};

inline constexpr std::array<FamilyId, 21> all_family_ids{
    FamilyId::continuous_bannai_ito,
    FamilyId::big_minus1_jacobi,
    FamilyId::chihara,
    FamilyId::continuous_minus1_hahn_1,
    FamilyId::continuous_minus1_hahn_2,
    FamilyId::generalized_symmetric_bannai_ito,
    FamilyId::little_minus1_jacobi,
    FamilyId::generalized_gegenbauer,
    FamilyId::minus1_meixner_pollaczek,
    FamilyId::symmetric_bannai_ito,
    FamilyId::special_little_minus1_jacobi,
    FamilyId::gegenbauer,
    FamilyId::generalized_hermite,
    FamilyId::hermite,
    FamilyId::continuous_complementary_bannai_ito,
    FamilyId::wilson,
    FamilyId::continuous_dual_hahn,
    FamilyId::little_q_jacobi_dilated,
    FamilyId::continuous_q_hahn,
    FamilyId::q_meixner_pollaczek,
    FamilyId::big_q_jacobi,
};

inline std::string_view to_string(FamilyId id) {
  switch (id) {
    case FamilyId::continuous_bannai_ito: return "continuous-bannai-ito";
    case FamilyId::big_minus1_jacobi: return "big-minus1-jacobi";
    case FamilyId::chihara: return "chihara";
    case FamilyId::continuous_minus1_hahn_1: return "continuous-minus1-hahn-1";
    case FamilyId::continuous_minus1_hahn_2: return "continuous-minus1-hahn-2";
    case FamilyId::generalized_symmetric_bannai_ito: return "generalized-symmetric-bannai-ito";
    case FamilyId::little_minus1_jacobi: return "little-minus1-jacobi";
    case FamilyId::generalized_gegenbauer: return "generalized-gegenbauer";
    case FamilyId::minus1_meixner_pollaczek: return "minus1-meixner-pollaczek";
    case FamilyId::symmetric_bannai_ito: return "symmetric-bannai-ito";
    case FamilyId::special_little_minus1_jacobi: return "special-little-minus1-jacobi";
    case FamilyId::gegenbauer: return "gegenbauer";
    case FamilyId::generalized_hermite: return "generalized-hermite";
    case FamilyId::hermite: return "hermite";
    case FamilyId::continuous_complementary_bannai_ito: return "continuous-complementary-bannai-ito";
    case FamilyId::wilson: return "wilson";
    case FamilyId::continuous_dual_hahn: return "continuous-dual-hahn";
    case FamilyId::little_q_jacobi_dilated: return "little-q-jacobi-dilated";
    case FamilyId::continuous_q_hahn: return "continuous-q-hahn";
    case FamilyId::q_meixner_pollaczek: return "q-meixner-pollaczek";
    case FamilyId::big_q_jacobi: return "big-q-jacobi";
  }
  return "?";
}

// Canonical ids plus the short forms used on the command line.
inline std::optional<FamilyId> parse_family_id(std::string_view text) {
  for (FamilyId id : all_family_ids) {
    if (to_string(id) == text) return id;
  }
  static constexpr std::pair<std::string_view, FamilyId> aliases[] = {
      {"cbi", FamilyId::continuous_bannai_ito},
      {"b1j", FamilyId::big_minus1_jacobi},
      {"big-1-jacobi", FamilyId::big_minus1_jacobi},
      {"c1h1", FamilyId::continuous_minus1_hahn_1},
      {"c1h2", FamilyId::continuous_minus1_hahn_2},
      {"gsbi", FamilyId::generalized_symmetric_bannai_ito},
      {"l1j", FamilyId::little_minus1_jacobi},
      {"gg", FamilyId::generalized_gegenbauer},
      {"mp", FamilyId::minus1_meixner_pollaczek},
      {"-1mp", FamilyId::minus1_meixner_pollaczek},
      {"sbi", FamilyId::symmetric_bannai_ito},
      {"sl1j", FamilyId::special_little_minus1_jacobi},
      {"gh", FamilyId::generalized_hermite},
      {"ccbi", FamilyId::continuous_complementary_bannai_ito},
      {"cdh", FamilyId::continuous_dual_hahn},
      {"dlqj", FamilyId::little_q_jacobi_dilated},
      {"little-q-jacobi", FamilyId::little_q_jacobi_dilated},
      {"cqh", FamilyId::continuous_q_hahn},
      {"qmp", FamilyId::q_meixner_pollaczek},
      {"bqj", FamilyId::big_q_jacobi},
  };
  for (const auto& [name, id] : aliases) {
    if (name == text) return id;
  }
  return std::nullopt;
}

inline FamilyId family_id(std::string_view text) {
  if (auto id = parse_family_id(text)) return *id;
  throw UnknownIdError("unknown family id '" + std::string(text) + "'");
}

enum class Role { scheme, quasi, helper, aux };

inline std::string_view to_string(Role r) {
  switch (r) {
    case Role::scheme: return "scheme";
    case Role::quasi: return "quasi-family";
    case Role::helper: return "helper";
    case Role::aux: return "aux";
  }
  return "?";
}

// Named parameter values in schema order.
class ParameterVector {
 public:
  ParameterVector() = default;

  bool has(std::string_view name) const { return find(name) != nullptr; }

  const CNum& at(std::string_view name) const {
    if (const CNum* v = find(name)) return *v;
    throw InadmissibleParameterError("missing parameter '" + std::string(name) + "'");
  }
  const CNum& operator[](std::string_view name) const { return at(name); }

  Real real(std::string_view name) const {
    const CNum& v = at(name);
    if (!v.is_real()) throw InadmissibleParameterError("parameter '" + std::string(name) + "' must be real");
    return v.re;
  }

  ParameterVector& set(std::string name, CNum value) {
    for (auto& [k, v] : values_) {
      if (k == name) {
        v = std::move(value);
        return *this;
      }
    }
    values_.emplace_back(std::move(name), std::move(value));
    return *this;
  }
  ParameterVector with(std::string name, CNum value) const {
    ParameterVector out = *this;
    out.set(std::move(name), std::move(value));
    return out;
  }

  const std::vector<std::pair<std::string, CNum>>& entries() const { return values_; }

  std::string str(int digits = 6) const {
    std::string out;
    for (const auto& [k, v] : values_) {
      if (!out.empty()) out += ",";
      out += k + "=" + format_complex(v, digits);
    }
    return out;
  }

  static std::string format_complex(const CNum& v, int digits) {
    if (v.is_real()) return v.re.str(digits);
    std::string im = abs(v.im).str(digits);
    return v.re.str(digits) + (v.im.sign() < 0 ? "-" : "+") + im + "i";
  }

 private:
  const CNum* find(std::string_view name) const {
    for (const auto& [k, v] : values_) {
      if (k == name) return &v;
    }
    return nullptr;
  }

  std::vector<std::pair<std::string, CNum>> values_;
};

// Accepts "1/3", "0.5", "2i", "0.5+0.5i", "1/2-3/4i".
inline CNum parse_complex(std::string_view text, const PrecisionContext& ctx) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s += ch;
  }
  if (s.empty()) throw std::invalid_argument("empty number");
  if (s.back() != 'i') return CNum(ctx.parse(s));
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag = [&](std::string t) {
    if (t.empty() || t == "+") return ctx.integer(1);
    if (t == "-") return ctx.integer(-1);
    if (t.front() == '+') t.erase(0, 1);
    return ctx.parse(t);
  };
  if (split == std::string::npos) return CNum(ctx.zero(), imag(s));
  return CNum(ctx.parse(s.substr(0, split)), imag(s.substr(split)));
}

// "alpha=0.5,beta=1/2" layered over `defaults`; names must belong to the schema.
inline ParameterVector parse_parameters(std::string_view text, const std::vector<std::string>& schema,
                                        ParameterVector defaults, const PrecisionContext& ctx) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("expected name=value, got '" + std::string(item) + "'");
    std::string name(item.substr(0, eq));
    if (std::find(schema.begin(), schema.end(), name) == schema.end()) {
      throw std::invalid_argument("unknown parameter '" + name + "'");
    }
    defaults.set(name, parse_complex(item.substr(eq + 1), ctx));
  }
  return defaults;
}

struct RecurrencePair {
  CNum b;
  CNum u;
  std::optional<CNum> A;
  std::optional<CNum> C;
};

enum class Decay { none, algebraic, gamma_modulus, gaussian };

inline std::string_view to_string(Decay d) {
  switch (d) {
    case Decay::none: return "finite";
    case Decay::algebraic: return "algebraic";
    case Decay::gamma_modulus: return "gamma-modulus";
    case Decay::gaussian: return "gaussian";
  }
  return "?";
}

// Density on one support interval. It receives the point together with its
// exact distances to the two ends so endpoint powers avoid cancellation;
// an infinite end reports distance zero.
using Density = std::function<Real(const Real& x, const Real& from_lo, const Real& to_hi)>;

struct WeightComponent {
  std::optional<Real> lo;  // empty means -infinity
  std::optional<Real> hi;  // empty means +infinity
  Real lo_exponent;        // algebraic exponent at a finite end
  Real hi_exponent;
  Decay lo_decay = Decay::none;
  Decay hi_decay = Decay::none;
  Density density;
};

struct WeightSpec {
  std::vector<WeightComponent> components;
  std::string description;
};

struct EigenSystem {
  DunklOperator op;
  std::function<CNum(long)> eigenvalue;
};

using RecurrenceFn = std::function<RecurrencePair(const ParameterVector&, long, const PrecisionContext&)>;
using ClosedFormFn = std::function<Polynomial(const ParameterVector&, long, const PrecisionContext&)>;
using WeightFn = std::function<WeightSpec(const ParameterVector&, const PrecisionContext&)>;
using NormFn = std::function<Real(const ParameterVector&, long, const PrecisionContext&)>;
using EigenFn = std::function<EigenSystem(const ParameterVector&, const CNum&, const PrecisionContext&)>;
// Empty string when admissible, otherwise the violated clause.
using AdmissibleFn = std::function<std::string(const ParameterVector&, const PrecisionContext&)>;

struct FamilySpec {
  FamilyId id;
  Role role;
  std::string title;
  std::vector<std::string> parameters;
  std::string admissible_region;
  std::string anchor;
  int row = 0;  // parameter count, the rank in the scheme figure
  bool external_reference = false;
  // the closed form is a polynomial in y = x^2 (Wilson, continuous dual Hahn)
  bool squared_variable = false;
  std::vector<std::string> fixtures;
  RecurrenceFn recurrence;
  ClosedFormFn closed_form;
  WeightFn weight;
  NormFn norm;
  EigenFn eigen;
  AdmissibleFn admissible;
};

}  // namespace minus_one

#endif
