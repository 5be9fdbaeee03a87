#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace snlab {

using Complex = std::complex<double>;
using Rng = std::mt19937_64;

/// Raised when an operation's precondition on its inputs is violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A positive exponent that may also take the distinguished value infinity
/// (the q of a Lorentz space, the mu of an approximation space).
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  constexpr ExtendedReal(double v) : value_(v) {}  // NOLINT: implicit from finite values

  static constexpr ExtendedReal infinity() {
    ExtendedReal e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  /// Finite value; throws for infinity.
  double value() const {
    if (infinite_) throw DomainError("ExtendedReal: value() of infinity");
    return value_;
  }

  /// 1/x with 1/inf = 0.
  constexpr double reciprocal() const { return infinite_ ? 0.0 : 1.0 / value_; }

  /// Accepts a decimal number, "inf" or "infinity".
  static ExtendedReal parse(std::string_view text);
  std::string to_string() const;

  friend constexpr bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr bool operator<=(const ExtendedReal& a, const ExtendedReal& b) {
    if (b.infinite_) return true;
    if (a.infinite_) return false;
    return a.value_ <= b.value_;
  }
  friend constexpr bool operator<(const ExtendedReal& a, const ExtendedReal& b) {
    return a <= b && !(a == b);
  }

 private:
  double value_ = 1.0;
  bool infinite_ = false;
};

/// ell_mu norm of a nonnegative list; mu = inf gives the maximum.
template <typename Range>
double lebesgue_norm(const Range& values, const ExtendedReal& mu) {
  double acc = 0.0;
  if (mu.is_infinite()) {
    for (double v : values) acc = std::max(acc, std::abs(v));
    return acc;
  }
  const double m = mu.value();
  // Scale by the maximum so large exponents do not overflow.
  double peak = 0.0;
  for (double v : values) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return 0.0;
  for (double v : values) acc += std::pow(std::abs(v) / peak, m);
  return peak * std::pow(acc, 1.0 / m);
}

}  // namespace snlab
