#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conglab/error.hpp"
#include "conglab/series.hpp"

using namespace conglab;

TEST_CASE("exponential series carries 1/n! coefficients") {
  const PowerSeries e = PowerSeries::exp(Rat(1), 6);
  CHECK(e.coeff(0) == Rat(1));
  CHECK(e.coeff(3) == Rat(1, 6));
  CHECK(e.coeff_times_factorial(5) == Rat(1));
  const PowerSeries half = PowerSeries::exp(Rat(1, 2), 4);
  CHECK(half.coeff(2) == Rat(1, 8));
}

TEST_CASE("product truncates at the common order") {
  const PowerSeries a = PowerSeries::exp(Rat(1), 8);
  const PowerSeries b = PowerSeries::exp(Rat(-1), 8);
  const PowerSeries prod = a * b; // e^t * e^{-t} = 1
  CHECK(prod.coeff(0) == Rat(1));
  for (int n = 1; n <= 8; ++n) CHECK(prod.coeff(n) == Rat(0));
}

TEST_CASE("inverse requires a unit constant term and multiplies back to one") {
  const PowerSeries c = PowerSeries::cosine(10);
  const PowerSeries sec = c.inverse();
  const PowerSeries one = c * sec;
  CHECK(one.coeff(0) == Rat(1));
  for (int n = 1; n <= 10; ++n) CHECK(one.coeff(n) == Rat(0));
  // sec t = 1 + t^2/2 + 5t^4/24 + 61 t^6/720 + ...
  CHECK(sec.coeff_times_factorial(2) == Rat(1));
  CHECK(sec.coeff_times_factorial(4) == Rat(5));
  CHECK(sec.coeff_times_factorial(6) == Rat(61));
  PowerSeries no_constant(4);
  no_constant.set_coeff(1, Rat(1));
  CHECK_THROWS_AS(no_constant.inverse(), Error);
}

TEST_CASE("tangent coefficients from sine over cosine") {
  const PowerSeries tan = PowerSeries::sine(11) * PowerSeries::cosine(11).inverse();
  CHECK(tan.coeff_times_factorial(1) == Rat(1));
  CHECK(tan.coeff_times_factorial(3) == Rat(2));
  CHECK(tan.coeff_times_factorial(5) == Rat(16));
  CHECK(tan.coeff_times_factorial(7) == Rat(272));
  CHECK(tan.coeff_times_factorial(9) == Rat(7936));
  CHECK(tan.coeff(2) == Rat(0));
}

TEST_CASE("derivative drops one order") {
  const PowerSeries e = PowerSeries::exp(Rat(1), 6);
  const PowerSeries d = e.derivative();
  CHECK(d.order() == 5);
  for (int n = 0; n <= 5; ++n) CHECK(d.coeff(n) == e.coeff(n));
  CHECK_THROWS_AS((void)e.coeff(7), Error); // past the truncation order
}

TEST_CASE("truncation and equality respect order") {
  const PowerSeries e = PowerSeries::exp(Rat(1), 8);
  const PowerSeries t = e.truncated(4);
  CHECK(t.order() == 4);
  CHECK(t == PowerSeries::exp(Rat(1), 4));
  CHECK_THROWS_AS(e.truncated(9), Error);
  CHECK_THROWS_AS((void)(e == t), Error); // OrderMismatch is an error, not false
}
