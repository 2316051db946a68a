#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "core/channel.hpp"
#include "core/entanglement.hpp"
#include "core/fidelity.hpp"
#include "core/lattice.hpp"
#include "core/oracle.hpp"
#include "doctest.h"

using namespace qst;

namespace {

// Spread tolerance for the universal-scaling collapse; the measured spread
// at distance 20 is 3.5e-3 (d = 2..8), frozen well under the 0.05 gate.
constexpr double kScalingSpreadTolerance = 0.05;

struct Criterion {
  const char* name;
  bool done = false;
  int fails_at_start;
  explicit Criterion(const char* n)
      : name(n),
        fails_at_start(doctest::detail::g_cs->numAssertsFailedCurrentTest_atomic) {}
  ~Criterion() {
    const bool clean =
        doctest::detail::g_cs->numAssertsFailedCurrentTest_atomic == fails_at_start;
    std::printf("%-60s %s\n", name, done && clean ? "PASS" : "FAIL");
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cmd(const std::string& cmd) { return std::system(cmd.c_str()); }

}  // namespace

TEST_CASE("criterion 1: amplitude_exact vs dense propagator, 1000 random cases") {
  Criterion c("1. oracle equivalence (amplitudes)");
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> n_dist(2, 128);
  std::uniform_real_distribution<double> t_dist(0.0, 400.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const int n = n_dist(rng);
    const int s = static_cast<int>(rng() % n);
    const int r = static_cast<int>(rng() % n);
    const double t = t_dist(rng);
    const ChainConfig cfg{n, 2, 1.0, 0.0, s, r};
    const Matrix u = propagator_dense(cfg, t);
    const double err = std::abs(std::abs(u(r, s)) - amplitude_exact(cfg, t).modulus);
    worst = std::max(worst, err);
  }
  CHECK(worst <= 1e-10);
  c.done = true;
}

TEST_CASE("criterion 2: full-space equivalence and charge conservation at N = 4") {
  Criterion c("2. full-space equivalence (N=4, d=2,3)");
  std::mt19937_64 rng(7);
  double worst_state = 0.0;
  double worst_charge = 0.0;
  for (int d : {2, 3}) {
    const ChainConfig cfg{4, d, 1.0, 0.3, 0, 2};
    FullEvolver evolver(cfg);
    const Vector psi = sample_haar(d, rng);
    const FullHilbertState psi0 = embed_sender_state(cfg, psi);
    for (int i = 1; i <= 50; ++i) {
      const double t = i * 0.8;
      const FullHilbertState psi_t = evolver.evolve(psi0, t);
      const Matrix from_oracle = reduced_state(psi_t, cfg.receiver);
      const KrausSet ks = build_kraus(amplitude_exact(cfg, t), d, cfg.field, t);
      const Matrix rho_in = psi * psi.adjoint();
      const Matrix from_channel = qst::apply(ks, rho_in);
      worst_state = std::max(worst_state, (from_oracle - from_channel).cwiseAbs().maxCoeff());
      for (int m = 1; m < d; ++m)
        worst_charge = std::max(worst_charge, charge_defect(cfg, psi0, t, m));
    }
  }
  CHECK(worst_state <= 1e-8);
  CHECK(worst_charge <= 1e-10);
  c.done = true;
}

TEST_CASE("criterion 3: d = 2 regression to the two-level formula") {
  Criterion c("3. d=2 regression (1000 random tuples)");
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> mod(0.0, 1.0), ph(-3.14, 3.14), b(0.0, 2.0),
      tt(0.0, 100.0);
  bool all_equal = true;
  for (int i = 0; i < 1000; ++i) {
    TransferAmplitude amp;
    amp.modulus = mod(rng);
    amp.phase = ph(rng);
    const double field = b(rng), t = tt(rng);
    const double expected = 0.5 +
                            (2.0 / 6.0) * amp.modulus * std::cos(amp.phase - field * t) * 1.0 +
                            (1.0 / 6.0) * amp.modulus * amp.modulus * 1.0 * 1.0;
    if (average_fidelity(amp, 2, field, t) != expected) all_equal = false;
  }
  CHECK(all_equal);
  c.done = true;
}

TEST_CASE("criterion 4: monte-carlo haar average matches the closed form") {
  Criterion c("4. Haar cross-check (3 sigma at 1e5 samples)");
  std::mt19937_64 rng(55);
  const int samples = 100000;
  for (int d : {2, 3, 4}) {
    const ChainConfig cfg{14, d, 1.0, 1e-6, 0, 7};
    for (double t : {3.0, 8.0, 21.0}) {
      const TransferAmplitude amp = amplitude_exact(cfg, t);
      const KrausSet ks = build_kraus(amp, d, cfg.field, t);
      const double expected = average_fidelity(amp, d, cfg.field, t);
      double sum = 0.0, comp = 0.0, sq = 0.0;
      for (int i = 0; i < samples; ++i) {
        const Vector psi = sample_haar(d, rng);
        const Matrix rho_in = psi * psi.adjoint();
        const double f = state_fidelity(psi, qst::apply(ks, rho_in));
        const double y = f - comp;
        const double acc = sum + y;
        comp = (acc - sum) - y;
        sum = acc;
        sq += f * f;
      }
      const double mean = sum / samples;
      const double se = std::sqrt(std::max(0.0, sq / samples - mean * mean) / samples);
      CHECK(std::abs(mean - expected) <= 3.0 * se);
    }
  }
  c.done = true;
}

TEST_CASE("criterion 5: near-perfect transfer at distances 1, 2, 4") {
  Criterion c("5. near-perfect transfer (distances 1,2,4; d=2..6)");
  for (int dist : {1, 2, 4}) {
    for (int d = 2; d <= 6; ++d) {
      const ChainConfig cfg{2 * dist, d, 1.0, 0.0, 0, dist};
      const StrategyResult r = optimize_vanishing_field(cfg, 400.0, 0.05);
      CHECK(r.f_avg_opt >= 0.95);
    }
  }
  c.done = true;
}

TEST_CASE("criterion 6: optimal fidelity decreases in d and saturates") {
  Criterion c("6. monotone saturation over d = 2..10");
  for (int dist : {4, 7, 14}) {
    std::vector<double> f_opt;
    for (int d = 2; d <= 10; ++d) {
      const ChainConfig cfg{2 * dist, d, 1.0, 0.0, 0, dist};
      f_opt.push_back(optimize_field_tuned(cfg, 400.0, 0.05).f_avg_opt);
    }
    for (size_t i = 1; i < f_opt.size(); ++i) CHECK(f_opt[i] <= f_opt[i - 1] + 1e-9);
    // increments shrink beyond d = 6 (indices: d = 2 is f_opt[0])
    for (int d = 7; d <= 9; ++d) {
      const double inc_next = std::abs(f_opt[d - 1] - f_opt[d - 2]);
      const double inc_prev = std::abs(f_opt[d - 2] - f_opt[d - 3]);
      CHECK(inc_next <= inc_prev + 1e-9);
    }
  }
  c.done = true;
}

TEST_CASE("criterion 7: both pickup strategies agree within 0.02") {
  Criterion c("7. strategy equivalence (d=2..4, distances 1..20)");
  double worst = 0.0;
  for (int d : {2, 3, 4}) {
    for (int dist = 1; dist <= 20; ++dist) {
      const ChainConfig cfg{2 * dist, d, 1.0, 0.0, 0, dist};
      const double tuned = optimize_field_tuned(cfg, 400.0, 0.05).f_avg_opt;
      const double vanish = optimize_vanishing_field(cfg, 400.0, 0.05).f_avg_opt;
      worst = std::max(worst, std::abs(tuned - vanish));
    }
  }
  CHECK(worst <= 0.02);
  c.done = true;
}

TEST_CASE("criterion 8: universal scaling collapse at distance 20") {
  Criterion c("8. scaling collapse (d = 2..8, distance 20)");
  double lo = 2.0, hi = -2.0;
  for (int d = 2; d <= 8; ++d) {
    const ChainConfig cfg{40, d, 1.0, 0.0, 0, 20};
    const StrategyResult r = optimize_vanishing_field(cfg, 400.0, 0.05);
    const double lhs = scaling_lhs(r.f_avg_opt, d);
    lo = std::min(lo, lhs);
    hi = std::max(hi, lhs);
  }
  CHECK(hi - lo <= kScalingSpreadTolerance);
  c.done = true;
}

TEST_CASE("criterion 9: negativity closed form, ordering, and common optimum") {
  Criterion c("9. negativity closed form and efficiency ordering");
  const int grid = 200;
  const double t_max = 80.0;
  std::map<int, int> argmax;
  std::map<int, double> best_eff;
  double worst = 0.0;
  for (int d : {2, 3, 4}) {
    const ChainConfig cfg{60, d, 1.0, 0.1, 1, 30};
    const AmplitudeEvaluator eval(cfg);
    double best = -1.0;
    for (int i = 1; i <= grid; ++i) {
      const double t = i * (t_max / grid);
      const TransferAmplitude amp = eval.exact(t);
      const NegativityResult closed = log_negativity_closed(amp, d);
      const KrausSet ks = build_kraus(amp, d, cfg.field, t);
      const double generic = log_negativity_generic(joint_state(ks), d, d);
      worst = std::max(worst, std::abs(generic - closed.ln_value));
      if (closed.efficiency > best) {
        best = closed.efficiency;
        argmax[d] = i;
        best_eff[d] = closed.efficiency;
      }
    }
  }
  CHECK(worst <= 1e-10);
  CHECK(best_eff[2] < best_eff[3]);
  CHECK(best_eff[3] < best_eff[4]);
  CHECK(std::abs(argmax[2] - argmax[3]) <= 1);
  CHECK(std::abs(argmax[3] - argmax[4]) <= 1);
  c.done = true;
}

TEST_CASE("criterion 10: CLI output is byte-identical across repeated runs") {
  Criterion c("10. determinism of CLI output");
  const char* cli = std::getenv("QST_CLI_BIN");
  REQUIRE(cli != nullptr);
  const std::string bin(cli);

  REQUIRE(run_cmd(bin + " verify --seed 7 > verify_a.txt") == 0);
  REQUIRE(run_cmd(bin + " verify --seed 7 > verify_b.txt") == 0);
  const std::string va = read_file("verify_a.txt");
  CHECK(va == read_file("verify_b.txt"));
  CHECK(va.find("FAIL") == std::string::npos);

  const std::string scan =
      " fidelity-scan --distance 4 --d-list 2 3 --t-max 20 --t-step 0.1 --seed 3 --out ";
  REQUIRE(run_cmd(bin + scan + "scan_a.csv") == 0);
  REQUIRE(run_cmd(bin + scan + "scan_b.csv") == 0);
  const std::string sa = read_file("scan_a.csv");
  CHECK(!sa.empty());
  CHECK(sa == read_file("scan_b.csv"));

  const std::string ent =
      " entanglement-scan --n 60 --distance 30 --d-list 2 3 --t-max 10 --t-step 0.5 --out ";
  REQUIRE(run_cmd(bin + ent + "ent_a.csv") == 0);
  REQUIRE(run_cmd(bin + ent + "ent_b.csv") == 0);
  CHECK(read_file("ent_a.csv") == read_file("ent_b.csv"));

  // failure injection must surface as exit code 2
  CHECK(run_cmd(bin + " verify --seed 7 --inject-failure > /dev/null") != 0);
  c.done = true;
}
