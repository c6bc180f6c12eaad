#pragma once

#include <functional>
#include <limits>
#include <string>

namespace lieblab {

/// Closed real interval with optionally open endpoints.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool open_lo = false;
  bool open_hi = false;

  static Interval all_reals() { return {}; }
  static Interval nonnegative() { return {0.0, std::numeric_limits<double>::infinity(), false, false}; }
  static Interval positive() { return {0.0, std::numeric_limits<double>::infinity(), true, false}; }

  bool contains(double x, double slack = 0.0) const;
};

/// A scalar function together with the metadata the library needs to apply it
/// to spectra: its domain and the declared analytic properties. Declared flags
/// on Custom functions are trusted metadata; the built-ins compute them.
class ScalarFunction {
 public:
  enum class Kind { Power, Exp, Log, Identity, Custom };

  static ScalarFunction power(double exponent);
  static ScalarFunction exp();
  static ScalarFunction log();
  static ScalarFunction identity();
  static ScalarFunction custom(std::string name, std::function<double(double)> fn,
                               Interval domain, bool monotone_increasing, bool zero_at_zero,
                               bool vanishes_at_minus_infinity, bool concave, bool convex);

  double operator()(double x) const;

  Kind kind() const { return kind_; }
  double power_exponent() const { return exponent_; }
  const Interval& domain() const { return domain_; }
  const std::string& name() const { return name_; }

  bool monotone_increasing() const { return monotone_increasing_; }
  /// Monotone increasing when restricted to [lo, +inf) intersect domain.
  bool monotone_increasing_from(double lo) const;
  bool zero_at_zero() const { return zero_at_zero_; }
  bool vanishes_at_minus_infinity() const { return vanishes_at_minus_infinity_; }
  bool concave() const { return concave_; }
  bool convex() const { return convex_; }

  /// Validates the f(x -> -inf) = 0 declaration by sampling at -10, -20, -40.
  void check_vanishing_tail() const;

 private:
  ScalarFunction() = default;

  Kind kind_ = Kind::Identity;
  double exponent_ = 1.0;
  std::function<double(double)> fn_;
  Interval domain_;
  std::string name_ = "identity";
  bool monotone_increasing_ = true;
  bool zero_at_zero_ = true;
  bool vanishes_at_minus_infinity_ = false;
  bool concave_ = true;
  bool convex_ = true;
};

}  // namespace lieblab
