#include "conglab/series.hpp"

namespace conglab {

PowerSeries PowerSeries::exp(const Rat& c, int order) {
  PowerSeries s(order);
  Rat term(1);
  s.c_[0] = term;
  for (int n = 1; n <= order; ++n) {
    term *= c;
    term /= n;
    s.c_[static_cast<size_t>(n)] = term;
  }
  return s;
}

PowerSeries PowerSeries::cosine(int order) {
  PowerSeries s(order);
  Rat term(1);
  s.c_[0] = term;
  for (int n = 2; n <= order; n += 2) {
    term /= n * (n - 1);
    term = -term;
    s.c_[static_cast<size_t>(n)] = term;
  }
  return s;
}

PowerSeries PowerSeries::sine(int order) {
  PowerSeries s(order);
  if (order >= 1) {
    Rat term(1);
    s.c_[1] = term;
    for (int n = 3; n <= order; n += 2) {
      term /= n * (n - 1);
      term = -term;
      s.c_[static_cast<size_t>(n)] = term;
    }
  }
  return s;
}

Rat PowerSeries::coeff_times_factorial(int n) const {
  Rat r = coeff(n);
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  r *= Rat(f);
  return r;
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  check(o);
  PowerSeries r(order());
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
  check(o);
  PowerSeries r(order());
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  check(o);
  PowerSeries r(order());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (size_t j = 0; i + j < c_.size(); ++j) {
      if (sgn(o.c_[j]) == 0) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  return r;
}

PowerSeries PowerSeries::inverse() const {
  if (sgn(c_[0]) == 0) fail(ErrorCode::ZeroConstantTerm, "series inverse");
  PowerSeries r(order());
  Rat inv0 = 1 / c_[0];
  r.c_[0] = inv0;
  // b_n = -(1/a_0) * sum_{k=1..n} a_k b_{n-k}
  for (size_t n = 1; n < c_.size(); ++n) {
    Rat acc(0);
    for (size_t k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
    r.c_[n] = -inv0 * acc;
  }
  return r;
}

PowerSeries PowerSeries::derivative() const {
  if (order() < 1) fail(ErrorCode::BadArgument, "derivative of order-0 series");
  PowerSeries r(order() - 1);
  for (int n = 1; n <= order(); ++n)
    r.c_[static_cast<size_t>(n - 1)] = c_[static_cast<size_t>(n)] * n;
  return r;
}

PowerSeries PowerSeries::truncated(int new_order) const {
  if (new_order < 0 || new_order > order())
    fail(ErrorCode::OrderMismatch, "truncation order out of range");
  PowerSeries r(new_order);
  for (int n = 0; n <= new_order; ++n) r.c_[static_cast<size_t>(n)] = c_[static_cast<size_t>(n)];
  return r;
}

bool PowerSeries::operator==(const PowerSeries& o) const {
  check(o);
  return c_ == o.c_;
}

} // namespace conglab
