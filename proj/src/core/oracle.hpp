#ifndef QST_CORE_ORACLE_HPP
#define QST_CORE_ORACLE_HPP

#include <Eigen/Dense>

#include "core/channel.hpp"
#include "core/types.hpp"

namespace qst {

// Brute-force validators, independent of the eigenmode-sum path. Shipped in
// the library so verification can be re-run by users.

// One-particle Hamiltonian: diagonal J, -J/2 on ring neighbors (orbital
// part; the field adds only a sector-uniform phase and is omitted).
Eigen::MatrixXd one_particle_hamiltonian(const ChainConfig& cfg);

// e^{-i H1 t} by dense Hermitian eigendecomposition. N <= 4096.
Matrix propagator_dense(const ChainConfig& cfg, double t);

struct FullHilbertState {
  int levels = 2;
  int sites = 2;
  Vector amplitudes;  // dimension d^N, basis index sum_i mu_i d^i
};

// Exact evolution on the full d^N space (N <= 6, d <= 3). Builds
// H = -J/2 sum (P_{i,i+1} - 1) + B sum S_z and diagonalizes it once.
class FullEvolver {
 public:
  explicit FullEvolver(const ChainConfig& cfg);

  FullHilbertState evolve(const FullHilbertState& psi0, double t) const;
  double energy_expectation(const FullHilbertState& psi) const;

  const Eigen::MatrixXd& hamiltonian() const { return h_; }
  int dimension() const { return dim_; }

 private:
  ChainConfig cfg_;
  int dim_;
  Eigen::MatrixXd h_;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver_;
};

FullHilbertState evolve_full(const ChainConfig& cfg, const FullHilbertState& psi0, double t);

// |<Q^(m)>_t - <Q^(m)>_0| with Q^(m) = sum_i (S_z,i)^m, m in 1..d-1.
double charge_defect(const ChainConfig& cfg, const FullHilbertState& psi0, double t, int m);

// Partial trace over all sites except `site`; d x d density matrix.
Matrix reduced_state(const FullHilbertState& psi, int site);

// |0...0> with the sender replaced by sum_mu a_mu |mu>.
FullHilbertState embed_sender_state(const ChainConfig& cfg, const Vector& psi_sender);

}  // namespace qst

#endif
