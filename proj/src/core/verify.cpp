#include "core/verify.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "core/channel.hpp"
#include "core/entanglement.hpp"
#include "core/fidelity.hpp"
#include "core/lattice.hpp"
#include "core/oracle.hpp"

namespace qst {

namespace {

VerifyCheck make_check(const std::string& name, double defect, double tol, bool inject) {
  if (inject) tol = 0.0;
  return {name, defect, tol, defect <= tol};
}

double unitarity_worst() {
  double worst = 0.0;
  worst = std::max(worst, unitarity_defect({20, 3, 1.0, 0.0, 0, 5}, 7.3));
  worst = std::max(worst, unitarity_defect({40, 2, 1.0, 0.0, 0, 20}, 123.4));
  return worst;
}

double kraus_worst() {
  double worst = 0.0;
  for (double t : {0.0, 4.0, 12.5, 80.0}) {
    const ChainConfig cfg{8, 3, 1.0, 0.2, 0, 4};
    const KrausSet ks = build_kraus(amplitude_exact(cfg, t), cfg.levels, cfg.field, t);
    worst = std::max(worst, completeness_defect(ks));
  }
  return worst;
}

double full_space_worst(std::mt19937_64& rng) {
  double worst = 0.0;
  for (int d : {2, 3}) {
    ChainConfig cfg{4, d, 1.0, 0.3, 0, 2};
    FullEvolver evolver(cfg);
    const Vector psi = sample_haar(d, rng);
    const FullHilbertState psi0 = embed_sender_state(cfg, psi);
    for (double t : {1.7, 5.0, 20.0}) {
      const FullHilbertState psi_t = evolver.evolve(psi0, t);
      const Matrix rho_exact = reduced_state(psi_t, cfg.receiver);
      const KrausSet ks = build_kraus(amplitude_exact(cfg, t), d, cfg.field, t);
      const Matrix rho_in = psi * psi.adjoint();
      const Matrix rho_channel = apply(ks, rho_in);
      worst = std::max(worst, (rho_exact - rho_channel).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double charge_worst(std::mt19937_64& rng) {
  ChainConfig cfg{4, 3, 1.0, 0.1, 0, 2};
  FullHilbertState psi0;
  psi0.levels = 3;
  psi0.sites = 4;
  psi0.amplitudes = Vector(81);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int i = 0; i < 81; ++i) psi0.amplitudes(i) = cplx{gauss(rng), gauss(rng)};
  psi0.amplitudes.normalize();
  double worst = 0.0;
  for (int m : {1, 2}) worst = std::max(worst, charge_defect(cfg, psi0, 3.7, m));
  return worst;
}

double negativity_worst() {
  double worst = 0.0;
  for (int d : {2, 3, 4}) {
    const ChainConfig cfg{60, d, 1.0, 0.05, 1, 30};
    for (double t : {10.0, 30.0, 60.0}) {
      const TransferAmplitude amp = amplitude_exact(cfg, t);
      const KrausSet ks = build_kraus(amp, d, cfg.field, t);
      const double generic = log_negativity_generic(joint_state(ks), d, d);
      const double closed = log_negativity_closed(amp, d).ln_value;
      worst = std::max(worst, std::abs(generic - closed));
    }
  }
  return worst;
}

// Worst |sample mean - Haar moment| in units of the sample standard error.
double haar_moment_worst(std::mt19937_64& rng) {
  const int n = 200000;
  double worst = 0.0;
  for (int d : {2, 4}) {
    const HaarMoments mom = haar_moments(d);
    double s2 = 0.0, s4 = 0.0, s22 = 0.0;
    double q2 = 0.0, q4 = 0.0, q22 = 0.0;
    for (int i = 0; i < n; ++i) {
      const Vector psi = sample_haar(d, rng);
      const double p0 = std::norm(psi(0));
      const double p1 = std::norm(psi(1));
      s2 += p0;
      q2 += p0 * p0;
      s4 += p0 * p0;
      q4 += p0 * p0 * p0 * p0;
      s22 += p0 * p1;
      q22 += p0 * p1 * p0 * p1;
    }
    auto sigmas = [n](double s, double q, double expect) {
      const double mean = s / n;
      const double var = std::max(0.0, q / n - mean * mean);
      const double se = std::sqrt(var / n);
      return std::abs(mean - expect) / se;
    };
    worst = std::max(worst, sigmas(s2, q2, mom.m2));
    worst = std::max(worst, sigmas(s4, q4, mom.m4));
    worst = std::max(worst, sigmas(s22, q22, mom.m22));
  }
  return worst;
}

}  // namespace

std::string VerifyReport::text() const {
  std::string out;
  char line[160];
  for (const VerifyCheck& c : checks) {
    std::snprintf(line, sizeof(line), "%-28s defect %.6e  tolerance %.6e  %s\n", c.name.c_str(),
                  c.defect, c.tolerance, c.pass ? "PASS" : "FAIL");
    out += line;
  }
  std::snprintf(line, sizeof(line), "checks: %zu, failures: %d\n", checks.size(), failures);
  out += line;
  return out;
}

VerifyReport run_verification(std::uint64_t seed, bool inject_failure) {
  std::mt19937_64 rng(seed);
  VerifyReport rep;
  rep.checks.push_back(make_check("unitarity", unitarity_worst(), 1e-10, inject_failure));
  rep.checks.push_back(make_check("kraus_completeness", kraus_worst(), 1e-12, inject_failure));
  rep.checks.push_back(
      make_check("full_space_agreement", full_space_worst(rng), 1e-8, inject_failure));
  rep.checks.push_back(make_check("charge_conservation", charge_worst(rng), 1e-10, inject_failure));
  rep.checks.push_back(
      make_check("negativity_closed_form", negativity_worst(), 1e-10, inject_failure));
  rep.checks.push_back(
      make_check("haar_moments_3sigma", haar_moment_worst(rng), 3.0, inject_failure));
  for (const VerifyCheck& c : rep.checks)
    if (!c.pass) ++rep.failures;
  return rep;
}

}  // namespace qst
