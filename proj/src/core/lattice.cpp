#include "core/lattice.hpp"

#include "core/bessel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qst {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_time(double t) {
  if (!std::isfinite(t)) throw std::invalid_argument("amplitude: non-finite time");
  if (t < 0.0) throw std::invalid_argument("amplitude: negative time");
}
}  // namespace

ModeSpectrum mode_spectrum(const ChainConfig& cfg, int mu) {
  cfg.validate();
  if (mu < 0 || mu >= cfg.levels)
    throw std::invalid_argument("mode_spectrum: sector index out of range");
  ModeSpectrum spec;
  spec.energies.resize(cfg.n_sites);
  for (int m = 0; m < cfg.n_sites; ++m)
    spec.energies[m] = cfg.coupling - cfg.coupling * std::cos(kTwoPi * m / cfg.n_sites);
  spec.field_shift = cfg.field * mu;
  return spec;
}

AmplitudeEvaluator::AmplitudeEvaluator(const ChainConfig& cfg) : cfg_(cfg) {
  cfg_.validate();
  const int n = cfg_.n_sites;
  const int delta = cfg_.receiver - cfg_.sender;
  cos_table_.resize(n);
  site_phase_.resize(n);
  for (int k = 0; k < n; ++k) {
    const double theta = kTwoPi * k / n;
    cos_table_[k] = std::cos(theta);
    const double arg = kTwoPi * static_cast<double>(k) * delta / n;
    site_phase_[k] = cplx{std::cos(arg), std::sin(arg)};
  }
}

TransferAmplitude AmplitudeEvaluator::exact(double t) const {
  check_time(t);
  const int n = cfg_.n_sites;
  const double jt = cfg_.coupling * t;
  cplx sum{0.0, 0.0};
  for (int k = 0; k < n; ++k) {
    const double a = jt * cos_table_[k];
    sum += cplx{std::cos(a), std::sin(a)} * site_phase_[k];
  }
  const cplx global{std::cos(jt), -std::sin(jt)};
  return make_amplitude(global * sum / static_cast<double>(n), t);
}

TransferAmplitude amplitude_exact(const ChainConfig& cfg, double t) {
  return AmplitudeEvaluator(cfg).exact(t);
}

TransferAmplitude amplitude_bessel(const ChainConfig& cfg, double t) {
  cfg.validate();
  check_time(t);
  const int order = cfg.displacement();
  const double jt = cfg.coupling * t;
  const double bess = bessel_jn(order, jt);
  const double arg = -(jt - 0.5 * std::numbers::pi * order);
  return make_amplitude(bess * cplx{std::cos(arg), std::sin(arg)}, t);
}

double unitarity_defect(const ChainConfig& cfg, double t) {
  cfg.validate();
  if (!std::isfinite(t)) throw std::invalid_argument("unitarity_defect: non-finite time");
  ChainConfig probe = cfg;
  double total = 0.0;
  for (int k = 0; k < cfg.n_sites; ++k) {
    probe.receiver = k;
    const TransferAmplitude amp = amplitude_exact(probe, std::abs(t));
    total += amp.modulus * amp.modulus;
  }
  return std::abs(1.0 - total);
}

}  // namespace qst
