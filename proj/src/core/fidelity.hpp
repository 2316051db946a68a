#ifndef QST_CORE_FIDELITY_HPP
#define QST_CORE_FIDELITY_HPP

#include "core/types.hpp"

namespace qst {

enum class Strategy { FieldTuned, VanishingField };

struct StrategyResult {
  Strategy strategy = Strategy::VanishingField;
  double t_opt = 0.0;
  double b_opt = 0.0;
  double f_avg_opt = 0.0;
  double grid_step = 0.0;
};

// Second and fourth moments of Haar-random amplitudes on C^d.
struct HaarMoments {
  int levels;
  double m2;   // <|a|^2>       = 1/d
  double m4;   // <|a|^4>       = 2/(d(d+1))
  double m22;  // <|a|^2 |b|^2> = 1/(d(d+1)), distinct components
};

HaarMoments haar_moments(int d);

// Gamma_d(x) = sin((d-1)x/2) / sin(x/2); Gamma_2 = 1, Gamma_d(0) = d-1.
double gamma_factor(int d, double x);

// Haar-averaged transfer fidelity
//   <F> = 1/d + (2/(d(d+1))) |f| cos(gamma - dBt/2) Gamma_d(Bt)
//       + (1/(d(d+1))) |f|^2 Gamma_d^2(Bt)
double average_fidelity(const TransferAmplitude& amp, int d, double field, double t);

// Bt << 1 limit: Gamma_d -> d-1 and the cosine argument reduces to gamma.
double average_fidelity_small_field(const TransferAmplitude& amp, int d);

// Grid scan over t in (0, t_max], step, with golden-section refinement of
// the best grid point to time tolerance 1e-6.
StrategyResult optimize_vanishing_field(const ChainConfig& cfg, double t_max, double step);

// Joint maximization: per candidate t the field is optimized over
// B in [0, b_max] (b_max <= 0 selects the default cap 2*pi*d/t).
StrategyResult optimize_field_tuned(const ChainConfig& cfg, double t_max, double step,
                                    double b_max = 0.0);

// (sqrt(d(d+1)<F_opt> - d) - 1) / (d - 1): estimates |f_rs(t_opt)|.
// Radicand in [-1e-12, 0) is clamped to 0; more negative values throw.
double scaling_lhs(double f_avg_opt, int d);

}  // namespace qst

#endif
