#ifndef QST_CORE_CHANNEL_HPP
#define QST_CORE_CHANNEL_HPP

#include <Eigen/Dense>
#include <random>
#include <vector>

#include "core/types.hpp"

namespace qst {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Kraus decomposition of the transfer channel:
//   A_0 = |0><0| + sum_{mu>=1} f^mu |mu><mu|,   f^mu = e^{-i B mu t} f_rs
//   A_mu = sqrt(1 - |f^mu|^2) |0><mu|,          mu = 1..d-1
struct KrausSet {
  int levels = 2;
  double field = 0.0;
  double time = 0.0;
  TransferAmplitude amplitude;
  std::vector<Matrix> operators;
};

KrausSet build_kraus(const TransferAmplitude& amp, int d, double field, double t);

// sum_mu |A_mu^dag A_mu - I|_max; zero by construction up to rounding.
double completeness_defect(const KrausSet& ks);

// rho -> sum_mu A_mu rho A_mu^dag
Matrix apply(const KrausSet& ks, const Matrix& rho_in);

// <psi|rho|psi>; the averaged fidelity formulas are linear in rho and match
// this unsquared overlap.
double state_fidelity(const Vector& psi, const Matrix& rho);

// |<psi|rho|psi>|^2, the squared variant.
double state_fidelity_squared(const Vector& psi, const Matrix& rho);

// Haar-random pure state: d independent standard complex Gaussians, normalized.
Vector sample_haar(int d, std::mt19937_64& rng);

}  // namespace qst

#endif
