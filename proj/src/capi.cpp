#include "qst.h"

#include <cstring>
#include <exception>
#include <stdexcept>
#include <string>

#include "core/channel.hpp"
#include "core/entanglement.hpp"
#include "core/fidelity.hpp"
#include "core/lattice.hpp"
#include "core/verify.hpp"

struct qst_chain {
  qst::ChainConfig cfg;
  qst::AmplitudeEvaluator eval;
  explicit qst_chain(const qst::ChainConfig& c) : cfg(c), eval(c) {}
};

namespace {

thread_local std::string g_last_error;

qst_status fail(qst_status code, const char* msg) {
  g_last_error = msg;
  return code;
}

template <typename Fn>
qst_status guarded(Fn&& fn) {
  try {
    fn();
    return QST_OK;
  } catch (const std::domain_error& e) {
    return fail(QST_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(QST_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(QST_ERR_INTERNAL, e.what());
  }
}

void fill_amplitude(const qst::TransferAmplitude& amp, qst_amplitude* out) {
  out->re = amp.value.real();
  out->im = amp.value.imag();
  out->modulus = amp.modulus;
  out->phase = amp.phase;
  out->time = amp.time;
}

}  // namespace

extern "C" {

const char* qst_last_error(void) { return g_last_error.c_str(); }

qst_status qst_chain_create(int n_sites, int levels, double coupling, double field, int sender,
                            int receiver, qst_chain** out) {
  if (!out) return fail(QST_ERR_INVALID_ARGUMENT, "qst_chain_create: null output pointer");
  *out = nullptr;
  return guarded([&] {
    qst::ChainConfig cfg{n_sites, levels, coupling, field, sender, receiver};
    cfg.validate();
    *out = new qst_chain(cfg);
  });
}

void qst_chain_destroy(qst_chain* chain) { delete chain; }

qst_status qst_amplitude_exact(const qst_chain* chain, double t, qst_amplitude* out) {
  if (!chain || !out) return fail(QST_ERR_INVALID_ARGUMENT, "qst_amplitude_exact: null pointer");
  return guarded([&] { fill_amplitude(chain->eval.exact(t), out); });
}

qst_status qst_amplitude_bessel(const qst_chain* chain, double t, qst_amplitude* out) {
  if (!chain || !out) return fail(QST_ERR_INVALID_ARGUMENT, "qst_amplitude_bessel: null pointer");
  return guarded([&] { fill_amplitude(qst::amplitude_bessel(chain->cfg, t), out); });
}

qst_status qst_unitarity_defect(const qst_chain* chain, double t, double* out) {
  if (!chain || !out) return fail(QST_ERR_INVALID_ARGUMENT, "qst_unitarity_defect: null pointer");
  return guarded([&] { *out = qst::unitarity_defect(chain->cfg, t); });
}

qst_status qst_average_fidelity(const qst_chain* chain, double t, double field, double* out) {
  if (!chain || !out) return fail(QST_ERR_INVALID_ARGUMENT, "qst_average_fidelity: null pointer");
  return guarded(
      [&] { *out = qst::average_fidelity(chain->eval.exact(t), chain->cfg.levels, field, t); });
}

qst_status qst_average_fidelity_small_field(const qst_chain* chain, double t, double* out) {
  if (!chain || !out)
    return fail(QST_ERR_INVALID_ARGUMENT, "qst_average_fidelity_small_field: null pointer");
  return guarded(
      [&] { *out = qst::average_fidelity_small_field(chain->eval.exact(t), chain->cfg.levels); });
}

qst_status qst_optimize(const qst_chain* chain, qst_strategy strategy, double t_max, double t_step,
                        double b_max, qst_strategy_result* out) {
  if (!chain || !out) return fail(QST_ERR_INVALID_ARGUMENT, "qst_optimize: null pointer");
  return guarded([&] {
    qst::StrategyResult res;
    if (strategy == QST_STRATEGY_VANISHING_FIELD) {
      res = qst::optimize_vanishing_field(chain->cfg, t_max, t_step);
    } else if (strategy == QST_STRATEGY_FIELD_TUNED) {
      res = qst::optimize_field_tuned(chain->cfg, t_max, t_step, b_max);
    } else {
      throw std::invalid_argument("qst_optimize: unknown strategy");
    }
    out->strategy = strategy;
    out->t_opt = res.t_opt;
    out->b_opt = res.b_opt;
    out->f_avg_opt = res.f_avg_opt;
    out->grid_step = res.grid_step;
  });
}

qst_status qst_scaling_lhs(double f_avg_opt, int levels, double* out) {
  if (!out) return fail(QST_ERR_INVALID_ARGUMENT, "qst_scaling_lhs: null pointer");
  return guarded([&] { *out = qst::scaling_lhs(f_avg_opt, levels); });
}

qst_status qst_log_negativity_closed(const qst_chain* chain, double t, qst_negativity* out) {
  if (!chain || !out)
    return fail(QST_ERR_INVALID_ARGUMENT, "qst_log_negativity_closed: null pointer");
  return guarded([&] {
    const qst::NegativityResult res =
        qst::log_negativity_closed(chain->eval.exact(t), chain->cfg.levels);
    out->ln_value = res.ln_value;
    out->efficiency = res.efficiency;
    out->time = res.time;
    out->closed_form = res.closed_form;
  });
}

qst_status qst_log_negativity_generic(const qst_chain* chain, double t, double* out) {
  if (!chain || !out)
    return fail(QST_ERR_INVALID_ARGUMENT, "qst_log_negativity_generic: null pointer");
  return guarded([&] {
    const int d = chain->cfg.levels;
    const qst::KrausSet ks =
        qst::build_kraus(chain->eval.exact(t), d, chain->cfg.field, t);
    *out = qst::log_negativity_generic(qst::joint_state(ks), d, d);
  });
}

qst_status qst_verify(uint64_t seed, int inject_failure, char* buf, size_t buf_len,
                      int* failures) {
  if (!buf || buf_len == 0 || !failures)
    return fail(QST_ERR_INVALID_ARGUMENT, "qst_verify: null output");
  return guarded([&] {
    const qst::VerifyReport rep = qst::run_verification(seed, inject_failure != 0);
    const std::string text = rep.text();
    const size_t n = std::min(buf_len - 1, text.size());
    std::memcpy(buf, text.data(), n);
    buf[n] = '\0';
    *failures = rep.failures;
  });
}

}  // extern "C"
