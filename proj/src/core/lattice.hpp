#ifndef QST_CORE_LATTICE_HPP
#define QST_CORE_LATTICE_HPP

#include <vector>

#include "core/types.hpp"

namespace qst {

// One-particle energies E_m = J - J cos(2 pi m / N), m = 0..N-1, plus the
// per-sector field shift B*mu added uniformly within a charge sector.
struct ModeSpectrum {
  std::vector<double> energies;
  double field_shift = 0.0;
};

ModeSpectrum mode_spectrum(const ChainConfig& cfg, int mu = 1);

// Caches the trigonometric tables of the eigenmode sum for one chain so
// grids over t pay O(N) per point with no re-derivation of phases.
class AmplitudeEvaluator {
 public:
  explicit AmplitudeEvaluator(const ChainConfig& cfg);

  // f_rs(t) = (e^{-iJt}/N) sum_k e^{iJt cos(2 pi k/N)} e^{i 2 pi k (r-s)/N}
  TransferAmplitude exact(double t) const;

  const ChainConfig& config() const { return cfg_; }

 private:
  ChainConfig cfg_;
  std::vector<double> cos_table_;   // cos(2 pi k / N)
  std::vector<cplx> site_phase_;    // e^{i 2 pi k (r-s) / N}
};

TransferAmplitude amplitude_exact(const ChainConfig& cfg, double t);

// Large-N asymptotic form f_rs ~ e^{-i(Jt - (pi/2)(r-s))} J_{r-s}(Jt),
// with the signed displacement reduced to (-N/2, N/2].
TransferAmplitude amplitude_bessel(const ChainConfig& cfg, double t);

// |1 - sum_k |f_ks(t)|^2| over all receivers k; zero for exact unitarity.
double unitarity_defect(const ChainConfig& cfg, double t);

}  // namespace qst

#endif
