#ifndef MINUS_ONE_ERRORS_HPP
#define MINUS_ONE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace minus_one {

// Gamma evaluated at 0, -1, -2, ...
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

// A denominator Pochhammer symbol vanishes inside a terminating series.
struct ZeroDenominatorError : std::domain_error {
  using std::domain_error::domain_error;
};

// A printed recurrence or closed-form denominator vanishes at these parameters.
struct ParameterSingularityError : std::domain_error {
  using std::domain_error::domain_error;
};

// Remainder too small to call nonzero but too large to call zero.
struct ReductionAmbiguityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InadmissibleParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NoEigenSystemError : std::logic_error {
  using std::logic_error::logic_error;
};

struct NoClosedFormError : std::logic_error {
  using std::logic_error::logic_error;
};

// Christoffel step produced a polynomial not divisible by (x - x0).
struct NonDivisibilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownIdError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace minus_one

#endif
