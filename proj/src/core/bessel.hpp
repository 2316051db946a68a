#ifndef QST_CORE_BESSEL_HPP
#define QST_CORE_BESSEL_HPP

namespace qst {

// Bessel function of the first kind J_n(x), integer order.
// Miller's downward recurrence with normalization; accurate to ~1e-12
// absolute for |n| <= 64, |x| <= 500.
double bessel_jn(int n, double x);

}  // namespace qst

#endif
