#ifndef PIPFRAME_ERRORS_HPP
#define PIPFRAME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pipframe {

// Length/shape mismatch between a field, vector or matrix and the object
// it is evaluated against.
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Input outside the mathematical domain of an operation (e.g. min/max of
// complex-valued families, nonpositive measure weights).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// An iterative routine exhausted its budget; carries the best bound found.
class NumericalError : public std::runtime_error {
public:
  NumericalError(const std::string& what, double best_bound)
      : std::runtime_error(what), best_bound_(best_bound) {}
  double best_bound() const { return best_bound_; }

private:
  double best_bound_;
};

// Resolution operator failed the GL membership test.
class GlViolationError : public std::runtime_error {
public:
  GlViolationError(const std::string& what, double smallest_singular_value)
      : std::runtime_error(what), sigma_min_(smallest_singular_value) {}
  double smallest_singular_value() const { return sigma_min_; }

private:
  double sigma_min_;
};

// Partial multiplication of pip-space operators with no continuous
// factorization; message lists i(A) and d(B).
class UndefinedProductError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A stated precondition of an operation does not hold.
class PreconditionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Scenario configuration problems (unknown keys, unresolvable presets, ...).
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace pipframe

#endif
