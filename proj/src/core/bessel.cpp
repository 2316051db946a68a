#include "core/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace qst {

double bessel_jn(int n, double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("bessel_jn: non-finite argument");
  if (n < 0) {
    double v = bessel_jn(-n, x);
    return (n % 2) ? -v : v;  // J_{-n}(x) = (-1)^n J_n(x)
  }
  if (x < 0.0) {
    double v = bessel_jn(n, -x);
    return (n % 2) ? -v : v;
  }
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;

  // Start the downward recurrence well above both the order and the
  // turning point so the minimal solution dominates by the time we
  // reach k = n.
  double top = std::max(static_cast<double>(n), x);
  int start = static_cast<int>(top + 15.0 * std::sqrt(top) + 25.0);
  if (start % 2) ++start;

  double upper = 0.0;   // f_{k+1}
  double cur = 1e-30;   // f_k, arbitrary tiny seed
  double sum = 0.0;     // accumulates f_k for even k >= 2
  double jn = (n == start) ? cur : 0.0;

  for (int k = start; k >= 1; --k) {
    double lower = (2.0 * k / x) * cur - upper;  // f_{k-1}
    upper = cur;
    cur = lower;
    if (std::abs(cur) > 1e100) {
      cur *= 1e-100;
      upper *= 1e-100;
      sum *= 1e-100;
      jn *= 1e-100;
    }
    int idx = k - 1;
    if (idx >= 2 && idx % 2 == 0) sum += cur;
    if (idx == n) jn = cur;
  }
  // Normalization: J_0 + 2 sum_{k even >= 2} J_k = 1; cur now holds f_0.
  double norm = cur + 2.0 * sum;
  return jn / norm;
}

}  // namespace qst
