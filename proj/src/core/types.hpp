#ifndef QST_CORE_TYPES_HPP
#define QST_CORE_TYPES_HPP

#include <complex>

namespace qst {

using cplx = std::complex<double>;

// Periodic chain of N d-level sites with permutation coupling J and field B.
// Sites are 0-indexed; sender s and receiver r live on the ring.
struct ChainConfig {
  int n_sites = 2;
  int levels = 2;
  double coupling = 1.0;
  double field = 0.0;
  int sender = 0;
  int receiver = 0;

  void validate() const;  // throws std::invalid_argument

  // Signed displacement r-s reduced to (-N/2, N/2].
  int displacement() const;

  // min(|r-s|, N-|r-s|) on the ring.
  int ring_distance() const;
};

// One-particle transfer amplitude f_rs(t) = |f| e^{i gamma}.
// The orbital amplitude carries no d or B dependence; the sector-dressed
// amplitude e^{-i B mu t} f_rs is derived where needed, never stored.
struct TransferAmplitude {
  cplx value{0.0, 0.0};
  double modulus = 0.0;
  double phase = 0.0;
  double time = 0.0;
};

TransferAmplitude make_amplitude(cplx value, double t);

}  // namespace qst

#endif
