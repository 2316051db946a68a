#ifndef QST_CORE_ENTANGLEMENT_HPP
#define QST_CORE_ENTANGLEMENT_HPP

#include <utility>
#include <vector>

#include "core/channel.hpp"
#include "core/types.hpp"

namespace qst {

struct NegativityResult {
  double ln_value = 0.0;     // logarithmic negativity, bits
  double efficiency = 0.0;   // ln_value / log2(d)
  double time = 0.0;
  double closed_form = 0.0;  // log2(1 + |f|^2 (d-1))
};

// Joint state of the uncoupled reference qudit and the receiver:
// rho_0r = sum_mu (I (x) A_mu) |psi_ME><psi_ME| (I (x) A_mu^dag),
// with |psi_ME> = (1/sqrt(d)) sum_mu |mu mu>. Dimension d^2 x d^2.
Matrix joint_state(const KrausSet& ks);

NegativityResult log_negativity_closed(const TransferAmplitude& amp, int d);

// LN = log2 of the trace norm of the partial transpose over the second
// factor, via eigenvalues of the Hermitian partial transpose.
double log_negativity_generic(const Matrix& rho, int dim_a, int dim_b);

// Closed-form spectrum of sqrt(PT^dag PT): {1/d: d, |f|^2/d: (d-1)^2,
// |f|^2/d: d-1} as (eigenvalue, multiplicity) pairs.
std::vector<std::pair<double, int>> negativity_spectrum(const TransferAmplitude& amp, int d);

}  // namespace qst

#endif
