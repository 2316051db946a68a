#ifndef QST_CORE_VERIFY_HPP
#define QST_CORE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qst {

struct VerifyCheck {
  std::string name;
  double defect = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  int failures = 0;
  std::string text() const;
};

// Runs the built-in oracle suite: unitarity, Kraus completeness, full-space
// agreement at N=4, charge conservation, closed-form vs generic negativity,
// and Haar moments. Deterministic for a fixed seed. inject_failure zeroes
// every tolerance (test hook for the failure exit path).
VerifyReport run_verification(std::uint64_t seed, bool inject_failure = false);

}  // namespace qst

#endif
