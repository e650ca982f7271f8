#pragma once

// Truncated formal power series over the rationals.  Order N means
// coefficients of t^0 .. t^N are carried and everything past t^N is dropped.
// All operands of a binary operation must share one order (OrderMismatch
// otherwise); use truncated() to line orders up explicitly, e.g. when
// comparing a derivative (order N-1) against a product of order-N series.
//
// There is deliberately no composition: every generating function the lab
// needs (sech, tan, sec, the Genocchi kernel, the ascent-polynomial kernel)
// is reachable from exp(c t), the trigonometric basis series, ring
// operations, inversion and differentiation.

#include <vector>

#include "conglab/arith.hpp"

namespace conglab {

class PowerSeries {
public:
  explicit PowerSeries(int order) : c_(static_cast<size_t>(order) + 1, Rat(0)) {
    if (order < 0) fail(ErrorCode::BadArgument, "series order must be >= 0");
  }

  static PowerSeries constant(const Rat& value, int order) {
    PowerSeries s(order);
    s.c_[0] = value;
    return s;
  }

  // e^{c t} = sum c^n t^n / n!
  static PowerSeries exp(const Rat& c, int order);
  // cos t and sin t, coefficient-wise (no composition machinery needed).
  static PowerSeries cosine(int order);
  static PowerSeries sine(int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }

  const Rat& coeff(int n) const {
    if (n < 0 || n > order()) fail(ErrorCode::IndexPastOrder, "coeff index");
    return c_[static_cast<size_t>(n)];
  }
  void set_coeff(int n, const Rat& v) {
    if (n < 0 || n > order()) fail(ErrorCode::IndexPastOrder, "coeff index");
    c_[static_cast<size_t>(n)] = v;
  }

  // n! * [t^n], i.e. the exponential-generating-function reading of coeff n.
  Rat coeff_times_factorial(int n) const;

  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  PowerSeries operator*(const PowerSeries& o) const;

  // multiplicative inverse; constant term must be non-zero.
  PowerSeries inverse() const;
  // termwise d/dt; result order N-1 (N >= 1 required).
  PowerSeries derivative() const;
  // copy truncated (or zero-extended is not allowed: new_order <= order()).
  PowerSeries truncated(int new_order) const;

  bool operator==(const PowerSeries& o) const;
  bool operator!=(const PowerSeries& o) const { return !(*this == o); }

private:
  void check(const PowerSeries& o) const {
    if (c_.size() != o.c_.size()) fail(ErrorCode::OrderMismatch, "series orders differ");
  }
  std::vector<Rat> c_;
};

} // namespace conglab
