#include "core/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qst {

namespace {

int pow_int(int base, int exp) {
  int v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}

void check_full_caps(const ChainConfig& cfg) {
  cfg.validate();
  if (cfg.n_sites > 6 || cfg.levels > 3)
    throw std::invalid_argument("full-space oracle: caps are N <= 6, d <= 3");
}

}  // namespace

Eigen::MatrixXd one_particle_hamiltonian(const ChainConfig& cfg) {
  cfg.validate();
  const int n = cfg.n_sites;
  if (n > 4096) throw std::invalid_argument("propagator_dense: N exceeds 4096");
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    // bond (i, i+1): -J/2 (P - 1) contributes J/2 on both diagonals and
    // -J/2 hopping; += keeps the N=2 double bond consistent
    h(i, i) += 0.5 * cfg.coupling;
    h(j, j) += 0.5 * cfg.coupling;
    h(i, j) += -0.5 * cfg.coupling;
    h(j, i) += -0.5 * cfg.coupling;
  }
  return h;
}

Matrix propagator_dense(const ChainConfig& cfg, double t) {
  const Eigen::MatrixXd h = one_particle_hamiltonian(cfg);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  const int n = cfg.n_sites;
  Matrix phases = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const double e = solver.eigenvalues()(k);
    phases(k, k) = cplx{std::cos(e * t), -std::sin(e * t)};
  }
  const Matrix v = solver.eigenvectors().cast<cplx>();
  return v * phases * v.adjoint();
}

FullEvolver::FullEvolver(const ChainConfig& cfg) : cfg_(cfg) {
  check_full_caps(cfg_);
  const int n = cfg_.n_sites;
  const int d = cfg_.levels;
  dim_ = pow_int(d, n);

  h_ = Eigen::MatrixXd::Zero(dim_, dim_);
  std::vector<int> digits(n);
  for (int b = 0; b < dim_; ++b) {
    int rem = b;
    for (int i = 0; i < n; ++i) {
      digits[i] = rem % d;
      rem /= d;
    }
    double diag = 0.0;
    for (int i = 0; i < n; ++i) diag += cfg_.field * digits[i];
    for (int i = 0; i < n; ++i) {
      const int j = (i + 1) % n;
      diag += 0.5 * cfg_.coupling;  // from -J/2 (P - 1)
      // swapped basis index for bond (i, j)
      const int swapped =
          b + (digits[j] - digits[i]) * pow_int(d, i) + (digits[i] - digits[j]) * pow_int(d, j);
      h_(b, swapped) += -0.5 * cfg_.coupling;
    }
    h_(b, b) += diag;
  }
  solver_.compute(h_);
}

FullHilbertState FullEvolver::evolve(const FullHilbertState& psi0, double t) const {
  if (psi0.amplitudes.size() != dim_ || psi0.levels != cfg_.levels || psi0.sites != cfg_.n_sites)
    throw std::invalid_argument("evolve_full: state dimension mismatch");
  const Eigen::MatrixXd& v = solver_.eigenvectors();
  Vector modal = v.transpose().cast<cplx>() * psi0.amplitudes;
  for (int k = 0; k < dim_; ++k) {
    const double e = solver_.eigenvalues()(k);
    modal(k) *= cplx{std::cos(e * t), -std::sin(e * t)};
  }
  FullHilbertState out = psi0;
  out.amplitudes = v.cast<cplx>() * modal;
  return out;
}

double FullEvolver::energy_expectation(const FullHilbertState& psi) const {
  return (psi.amplitudes.adjoint() * h_.cast<cplx>() * psi.amplitudes)(0, 0).real();
}

FullHilbertState evolve_full(const ChainConfig& cfg, const FullHilbertState& psi0, double t) {
  return FullEvolver(cfg).evolve(psi0, t);
}

double charge_defect(const ChainConfig& cfg, const FullHilbertState& psi0, double t, int m) {
  check_full_caps(cfg);
  if (m < 1 || m >= cfg.levels)
    throw std::invalid_argument("charge_defect: m must be in 1..d-1");
  FullEvolver evolver(cfg);
  const FullHilbertState psi_t = evolver.evolve(psi0, t);

  auto expectation = [&](const FullHilbertState& psi) {
    const int n = cfg.n_sites;
    const int d = cfg.levels;
    double acc = 0.0;
    for (int b = 0; b < psi.amplitudes.size(); ++b) {
      const double p = std::norm(psi.amplitudes(b));
      if (p == 0.0) continue;
      int rem = b;
      double q = 0.0;
      for (int i = 0; i < n; ++i) {
        q += std::pow(static_cast<double>(rem % d), m);
        rem /= d;
      }
      acc += p * q;
    }
    return acc;
  };
  return std::abs(expectation(psi_t) - expectation(psi0));
}

Matrix reduced_state(const FullHilbertState& psi, int site) {
  if (site < 0 || site >= psi.sites)
    throw std::invalid_argument("reduced_state: site out of range");
  const int d = psi.levels;
  const int w = pow_int(d, site);
  const int rest = static_cast<int>(psi.amplitudes.size()) / d;
  Matrix rho = Matrix::Zero(d, d);
  for (int r = 0; r < rest; ++r) {
    const int low = r % w;
    const int high = r / w;
    const int base = high * w * d + low;
    for (int mu = 0; mu < d; ++mu)
      for (int nu = 0; nu < d; ++nu)
        rho(mu, nu) += psi.amplitudes(base + mu * w) * std::conj(psi.amplitudes(base + nu * w));
  }
  return rho;
}

FullHilbertState embed_sender_state(const ChainConfig& cfg, const Vector& psi_sender) {
  check_full_caps(cfg);
  if (psi_sender.size() != cfg.levels)
    throw std::invalid_argument("embed_sender_state: dimension mismatch");
  FullHilbertState st;
  st.levels = cfg.levels;
  st.sites = cfg.n_sites;
  st.amplitudes = Vector::Zero(pow_int(cfg.levels, cfg.n_sites));
  const int w = pow_int(cfg.levels, cfg.sender);
  for (int mu = 0; mu < cfg.levels; ++mu) st.amplitudes(mu * w) = psi_sender(mu);
  return st;
}

}  // namespace qst
