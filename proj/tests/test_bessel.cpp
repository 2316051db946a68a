#include <initializer_list>
#include <cmath>

#include "core/bessel.hpp"
#include "doctest.h"

using qst::bessel_jn;

TEST_CASE("bessel identities at x = 0") {
  CHECK(bessel_jn(0, 0.0) == 1.0);
  CHECK(bessel_jn(3, 0.0) == 0.0);
  CHECK(bessel_jn(-5, 0.0) == 0.0);
}

TEST_CASE("bessel matches the standard library over the working range") {
  // std::cyl_bessel_j is an independent implementation path
  double worst = 0.0;
  for (int n = 0; n <= 64; n += (n < 8 ? 1 : 7)) {
    for (double x = 0.1; x <= 500.0; x += 7.3) {
      const double ref = std::cyl_bessel_j(static_cast<double>(n), x);
      worst = std::max(worst, std::abs(bessel_jn(n, x) - ref));
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("negative order and negative argument reflections") {
  for (int n : {1, 2, 5, 12}) {
    for (double x : {0.7, 3.3, 40.0}) {
      const double v = bessel_jn(n, x);
      const double sign = (n % 2) ? -1.0 : 1.0;
      CHECK(bessel_jn(-n, x) == doctest::Approx(sign * v).epsilon(1e-13));
      CHECK(bessel_jn(n, -x) == doctest::Approx(sign * v).epsilon(1e-13));
    }
  }
}

TEST_CASE("recurrence consistency J_{n-1} + J_{n+1} = (2n/x) J_n") {
  for (int n : {1, 4, 20, 50}) {
    for (double x : {2.5, 17.0, 123.0, 450.0}) {
      const double lhs = bessel_jn(n - 1, x) + bessel_jn(n + 1, x);
      const double rhs = 2.0 * n / x * bessel_jn(n, x);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
  }
}
