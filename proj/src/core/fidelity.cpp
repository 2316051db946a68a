#include "core/fidelity.hpp"

#include "core/lattice.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace qst {

namespace {

// Reported field in the vanishing-field strategy.  The exact-vs-limit defect
// grows like d(d-1)/(d(d+1)) * B*t, so B*t must stay well under the 1e-6
// agreement budget over the whole span; 1e-9 * J keeps B*t <= 4e-7 for t <= 400.
constexpr double kSmallField = 1e-9;
constexpr double kTimeTol = 1e-6;        // golden-section time tolerance
constexpr double kTieBreak = 1e-12;      // smallest t wins ties within this
constexpr double kGolden = 0.6180339887498949;  // 1/phi

// Golden-section maximizer on [a, b]; f assumed unimodal on the bracket.
double golden_max(const std::function<double(double)>& f, double a, double b, double tol) {
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

void check_span(double t_max, double step) {
  if (!(t_max > 0.0) || !(step > 0.0) || step > t_max)
    throw std::invalid_argument("optimize: empty time span");
}

}  // namespace

HaarMoments haar_moments(int d) {
  if (d < 2) throw std::invalid_argument("haar_moments: d must be >= 2");
  const double dd = static_cast<double>(d);
  return {d, 1.0 / dd, 2.0 / (dd * (dd + 1.0)), 1.0 / (dd * (dd + 1.0))};
}

double gamma_factor(int d, double x) {
  if (d < 2) throw std::invalid_argument("gamma_factor: d must be >= 2");
  const double a = d - 1.0;
  if (std::abs(x) < 1e-6) {
    // small-argument series around the limit d-1
    return a * (1.0 - (a * a - 1.0) * x * x / 24.0);
  }
  const double s = std::sin(0.5 * x);
  if (std::abs(s) < 1e-9) {
    // x near a nonzero multiple of 2*pi: ratio of derivatives
    return a * std::cos(0.5 * a * x) / std::cos(0.5 * x);
  }
  return std::sin(0.5 * a * x) / s;
}

double average_fidelity(const TransferAmplitude& amp, int d, double field, double t) {
  if (d < 2) throw std::invalid_argument("average_fidelity: d must be >= 2");
  if (field < 0.0) throw std::invalid_argument("average_fidelity: negative field");
  const double x = field * t;
  const double g = gamma_factor(d, x);
  const double c = 1.0 / (d * (d + 1.0));
  return 1.0 / d + 2.0 * c * amp.modulus * std::cos(amp.phase - 0.5 * d * x) * g +
         c * amp.modulus * amp.modulus * g * g;
}

double average_fidelity_small_field(const TransferAmplitude& amp, int d) {
  if (d < 2) throw std::invalid_argument("average_fidelity: d must be >= 2");
  const double c = 1.0 / (d * (d + 1.0));
  const double a = d - 1.0;
  return 1.0 / d + 2.0 * c * a * amp.modulus * std::cos(amp.phase) +
         c * a * a * amp.modulus * amp.modulus;
}

StrategyResult optimize_vanishing_field(const ChainConfig& cfg, double t_max, double step) {
  cfg.validate();
  check_span(t_max, step);
  const AmplitudeEvaluator eval(cfg);
  const int d = cfg.levels;

  auto limit_fid = [&](double t) { return average_fidelity_small_field(eval.exact(t), d); };

  double best_t = step;
  double best_f = limit_fid(step);
  const long npts = static_cast<long>(t_max / step);
  for (long i = 2; i <= npts; ++i) {
    const double t = i * step;
    const double f = limit_fid(t);
    if (f > best_f + kTieBreak) {
      best_f = f;
      best_t = t;
    }
  }

  const double lo = std::max(best_t - step, step * 1e-3);
  const double hi = std::min(best_t + step, t_max);
  const double t_opt = golden_max(limit_fid, lo, hi, kTimeTol);

  const double b = kSmallField * cfg.coupling;
  const TransferAmplitude amp = eval.exact(t_opt);
  const double f_exact = average_fidelity(amp, d, b, t_opt);
  if (std::abs(f_exact - average_fidelity_small_field(amp, d)) >= 1e-6)
    throw std::logic_error("optimize_vanishing_field: B*t no longer in the small-field regime");

  StrategyResult res;
  res.strategy = Strategy::VanishingField;
  res.t_opt = t_opt;
  res.b_opt = b;
  res.f_avg_opt = f_exact;
  res.grid_step = step;
  return res;
}

StrategyResult optimize_field_tuned(const ChainConfig& cfg, double t_max, double step,
                                    double b_max) {
  cfg.validate();
  check_span(t_max, step);
  const AmplitudeEvaluator eval(cfg);
  const int d = cfg.levels;
  const double c = 1.0 / (d * (d + 1.0));

  // averaged fidelity as a function of x = B*t at fixed amplitude
  auto fid_x = [&](const TransferAmplitude& amp, double x) {
    const double g = gamma_factor(d, x);
    return 1.0 / d + 2.0 * c * amp.modulus * std::cos(amp.phase - 0.5 * d * x) * g +
           c * amp.modulus * amp.modulus * g * g;
  };

  // The cap on B*t: the objective is 4*pi/d periodic in the cosine and the
  // Dirichlet kernel repeats on 2*pi, so [0, 2*pi*d] covers every phase.
  auto x_cap = [&](double t) {
    const double dflt = 2.0 * std::numbers::pi * d;
    return (b_max > 0.0) ? std::min(b_max * t, dflt) : dflt;
  };

  const int n_x = 16 * d * d + 1;

  // Coarse scan over x; golden refinement only when the candidate is close
  // enough to the incumbent to possibly matter.
  auto best_over_field = [&](double t, bool refine, double* x_out) {
    const TransferAmplitude amp = eval.exact(t);
    const double cap = x_cap(t);
    const double dx = cap / (n_x - 1);
    double bx = 0.0, bf = fid_x(amp, 0.0);
    for (int i = 1; i < n_x; ++i) {
      const double x = i * dx;
      const double f = fid_x(amp, x);
      if (f > bf + kTieBreak) {
        bf = f;
        bx = x;
      }
    }
    if (refine) {
      auto obj = [&](double x) { return fid_x(amp, x); };
      const double x = golden_max(obj, std::max(0.0, bx - dx), std::min(cap, bx + dx), 1e-9);
      const double f = fid_x(amp, x);
      if (f > bf) {
        bf = f;
        bx = x;
      }
    }
    if (x_out) *x_out = bx;
    return bf;
  };

  double best_t = step;
  double best_f = best_over_field(step, true, nullptr);
  const long npts = static_cast<long>(t_max / step);
  for (long i = 2; i <= npts; ++i) {
    const double t = i * step;
    double f = best_over_field(t, false, nullptr);
    if (f + 0.01 > best_f) f = best_over_field(t, true, nullptr);
    if (f > best_f + kTieBreak) {
      best_f = f;
      best_t = t;
    }
  }

  auto envelope = [&](double t) { return best_over_field(t, true, nullptr); };
  const double lo = std::max(best_t - step, step * 1e-3);
  const double hi = std::min(best_t + step, t_max);
  const double t_opt = golden_max(envelope, lo, hi, kTimeTol);

  double x_opt = 0.0;
  const double f_opt = best_over_field(t_opt, true, &x_opt);

  StrategyResult res;
  res.strategy = Strategy::FieldTuned;
  res.t_opt = t_opt;
  res.b_opt = x_opt / t_opt;
  res.f_avg_opt = f_opt;
  res.grid_step = step;
  return res;
}

double scaling_lhs(double f_avg_opt, int d) {
  if (d < 2) throw std::invalid_argument("scaling_lhs: d must be >= 2");
  double radicand = d * (d + 1.0) * f_avg_opt - d;
  if (radicand < -1e-12)
    throw std::domain_error("scaling_lhs: fidelity below 1/(d+1), radicand negative");
  if (radicand < 0.0) radicand = 0.0;
  return (std::sqrt(radicand) - 1.0) / (d - 1.0);
}

}  // namespace qst
