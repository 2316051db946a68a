#include "core/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace qst {

KrausSet build_kraus(const TransferAmplitude& amp, int d, double field, double t) {
  if (d < 2) throw std::invalid_argument("build_kraus: d must be >= 2");
  if (amp.modulus > 1.0 + 1e-12)
    throw std::invalid_argument("build_kraus: amplitude modulus exceeds 1");

  KrausSet ks;
  ks.levels = d;
  ks.field = field;
  ks.time = t;
  ks.amplitude = amp;
  ks.operators.reserve(d);

  const double leak = std::sqrt(std::max(0.0, 1.0 - amp.modulus * amp.modulus));

  Matrix a0 = Matrix::Zero(d, d);
  a0(0, 0) = 1.0;
  for (int mu = 1; mu < d; ++mu) {
    const double arg = -field * mu * t;
    a0(mu, mu) = cplx{std::cos(arg), std::sin(arg)} * amp.value;  // f^mu
  }
  ks.operators.push_back(std::move(a0));
  for (int mu = 1; mu < d; ++mu) {
    Matrix a = Matrix::Zero(d, d);
    a(0, mu) = leak;
    ks.operators.push_back(std::move(a));
  }
  return ks;
}

double completeness_defect(const KrausSet& ks) {
  const int d = ks.levels;
  Matrix acc = Matrix::Zero(d, d);
  for (const Matrix& a : ks.operators) acc += a.adjoint() * a;
  return (acc - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

Matrix apply(const KrausSet& ks, const Matrix& rho_in) {
  const int d = ks.levels;
  if (rho_in.rows() != d || rho_in.cols() != d)
    throw std::invalid_argument("apply: dimension mismatch");
  Matrix out = Matrix::Zero(d, d);
  for (const Matrix& a : ks.operators) out += a * rho_in * a.adjoint();
  return out;
}

double state_fidelity(const Vector& psi, const Matrix& rho) {
  if (rho.rows() != psi.size() || rho.cols() != psi.size())
    throw std::invalid_argument("state_fidelity: dimension mismatch");
  return (psi.adjoint() * rho * psi)(0, 0).real();
}

double state_fidelity_squared(const Vector& psi, const Matrix& rho) {
  const double f = state_fidelity(psi, rho);
  return f * f;
}

Vector sample_haar(int d, std::mt19937_64& rng) {
  if (d < 2) throw std::invalid_argument("sample_haar: d must be >= 2");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector psi(d);
  for (int i = 0; i < d; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    psi(i) = cplx{re, im};
  }
  psi.normalize();
  return psi;
}

}  // namespace qst
