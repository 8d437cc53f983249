#ifndef MINUS_ONE_DUNKL_HPP
#define MINUS_ONE_DUNKL_HPP

#include <string_view>
#include <utility>
#include <vector>

#include "minus_one/polynomials.hpp"

namespace minus_one {

enum class Symbol {
  identity,                // I
  reflection,              // R f(x) = f(-x)
  shift_plus,              // S+ f(x) = f(x + s)
  shift_minus,             // S- f(x) = f(x - s)
  shift_plus_reflection,   // S+R
  shift_minus_reflection,  // S-R
  derivative,              // d/dx
  derivative_reflection,   // d/dx composed with R: f -> d/dx[f(-x)] = -f'(-x)
  second_derivative,
  real_shift,              // T+ f(x) = f(x + 1)
  real_shift_reflection,   // T+R
};

inline std::string_view to_string(Symbol s) {
  switch (s) {
    case Symbol::identity: return "I";
    case Symbol::reflection: return "R";
    case Symbol::shift_plus: return "S+";
    case Symbol::shift_minus: return "S-";
    case Symbol::shift_plus_reflection: return "S+R";
    case Symbol::shift_minus_reflection: return "S-R";
    case Symbol::derivative: return "dx";
    case Symbol::derivative_reflection: return "dxR";
    case Symbol::second_derivative: return "dx2";
    case Symbol::real_shift: return "T+";
    case Symbol::real_shift_reflection: return "T+R";
  }
  return "?";
}

// How a shift-reflection product acts.
//   reflect_then_shift: (S+R f)(x) = f(-x - s), the product S+ applied after R
//   shift_then_reflect: (S+R f)(x) = f(-x + s)
enum class ShiftReflectOrder { reflect_then_shift, shift_then_reflect };

inline std::string_view to_string(ShiftReflectOrder o) {
  return o == ShiftReflectOrder::reflect_then_shift ? "(S+R)f(x) = f(-x-s)" : "(S+R)f(x) = f(-x+s)";
}

struct DunklTerm {
  RationalFunction coefficient;
  Symbol symbol;
};

class DunklOperator {
 public:
  DunklOperator(std::vector<DunklTerm> terms, CNum step,
                ShiftReflectOrder order = ShiftReflectOrder::reflect_then_shift)
      : terms_(std::move(terms)), step_(std::move(step)), order_(order) {}

  const std::vector<DunklTerm>& terms() const { return terms_; }
  const CNum& step() const { return step_; }
  ShiftReflectOrder order() const { return order_; }

  DunklOperator with_order(ShiftReflectOrder order) const {
    DunklOperator out = *this;
    out.order_ = order;
    return out;
  }

 private:
  std::vector<DunklTerm> terms_;
  CNum step_;
  ShiftReflectOrder order_;
};

inline Polynomial act(Symbol symbol, const Polynomial& p, const CNum& step, ShiftReflectOrder order) {
  auto shift_reflect = [&](const CNum& s) {
    return order == ShiftReflectOrder::reflect_then_shift ? shift(reflect(p), s) : reflect(shift(p, s));
  };
  const CNum unit(Real(1, step.precision()));
  switch (symbol) {
    case Symbol::identity: return p;
    case Symbol::reflection: return reflect(p);
    case Symbol::shift_plus: return shift(p, step);
    case Symbol::shift_minus: return shift(p, -step);
    case Symbol::shift_plus_reflection: return shift_reflect(step);
    case Symbol::shift_minus_reflection: return shift_reflect(-step);
    case Symbol::derivative: return differentiate(p);
    case Symbol::derivative_reflection: return differentiate(reflect(p));
    case Symbol::second_derivative: return differentiate(differentiate(p));
    case Symbol::real_shift: return shift(p, unit);
    case Symbol::real_shift_reflection: return shift_reflect(unit);
  }
  return p;
}

// Sum of coefficient * (symbol p) over a common denominator, not reduced.
inline RationalFunction apply_unreduced(const DunklOperator& op, const Polynomial& p, const PrecisionContext& ctx) {
  std::vector<RationalFunction> parts;
  parts.reserve(op.terms().size());
  for (const auto& t : op.terms()) {
    parts.push_back(t.coefficient * act(t.symbol, p, op.step(), op.order()));
  }
  return sum(parts, ctx);
}

inline RationalFunction apply(const DunklOperator& op, const Polynomial& p, const PrecisionContext& ctx) {
  return rational_reduce(apply_unreduced(op, p, ctx), ctx);
}

}  // namespace minus_one

#endif
