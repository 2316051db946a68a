#include "core/entanglement.hpp"

#include <cmath>
#include <stdexcept>

namespace qst {

Matrix joint_state(const KrausSet& ks) {
  const int d = ks.levels;
  Vector psi_me = Vector::Zero(d * d);
  const double w = 1.0 / std::sqrt(static_cast<double>(d));
  for (int mu = 0; mu < d; ++mu) psi_me(mu * d + mu) = w;

  Matrix rho = Matrix::Zero(d * d, d * d);
  Vector mapped(d * d);
  for (const Matrix& a : ks.operators) {
    // (I (x) A) acts on the second (receiver) factor blockwise.
    for (int blk = 0; blk < d; ++blk)
      mapped.segment(blk * d, d) = a * psi_me.segment(blk * d, d);
    rho += mapped * mapped.adjoint();
  }
  return rho;
}

NegativityResult log_negativity_closed(const TransferAmplitude& amp, int d) {
  if (d < 2) throw std::invalid_argument("log_negativity_closed: d must be >= 2");
  if (amp.modulus > 1.0 + 1e-12)
    throw std::invalid_argument("log_negativity_closed: amplitude modulus exceeds 1");
  NegativityResult res;
  const double f2 = amp.modulus * amp.modulus;
  res.closed_form = std::log2(1.0 + f2 * (d - 1));
  res.ln_value = res.closed_form;
  res.efficiency = res.ln_value / std::log2(static_cast<double>(d));
  res.time = amp.time;
  return res;
}

double log_negativity_generic(const Matrix& rho, int dim_a, int dim_b) {
  const int dim = dim_a * dim_b;
  if (rho.rows() != dim || rho.cols() != dim)
    throw std::invalid_argument("log_negativity_generic: dimension mismatch");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-8)
    throw std::invalid_argument("log_negativity_generic: input not Hermitian");

  // Partial transpose of the second factor; still Hermitian.
  Matrix pt(dim, dim);
  for (int a = 0; a < dim_a; ++a)
    for (int b = 0; b < dim_b; ++b)
      for (int c = 0; c < dim_a; ++c)
        for (int e = 0; e < dim_b; ++e)
          pt(a * dim_b + b, c * dim_b + e) = rho(a * dim_b + e, c * dim_b + b);

  Eigen::SelfAdjointEigenSolver<Matrix> solver(pt);
  const double trace_norm = solver.eigenvalues().cwiseAbs().sum();
  return std::log2(trace_norm);
}

std::vector<std::pair<double, int>> negativity_spectrum(const TransferAmplitude& amp, int d) {
  if (d < 2) throw std::invalid_argument("negativity_spectrum: d must be >= 2");
  const double f2 = amp.modulus * amp.modulus;
  const double dd = static_cast<double>(d);
  return {
      {1.0 / dd, d},
      {f2 / dd, (d - 1) * (d - 1)},  // |f^mu||f^nu|/d with |f^mu| = |f|
      {f2 / dd, d - 1},
  };
}

}  // namespace qst
