#include "core/types.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace qst {

void ChainConfig::validate() const {
  if (n_sites < 2) throw std::invalid_argument("ChainConfig: n_sites must be >= 2");
  if (levels < 2) throw std::invalid_argument("ChainConfig: levels must be >= 2");
  if (!(coupling > 0.0) || !std::isfinite(coupling))
    throw std::invalid_argument("ChainConfig: coupling must be positive and finite");
  if (field < 0.0 || !std::isfinite(field))
    throw std::invalid_argument("ChainConfig: field must be non-negative and finite");
  if (sender < 0 || sender >= n_sites)
    throw std::invalid_argument("ChainConfig: sender out of range");
  if (receiver < 0 || receiver >= n_sites)
    throw std::invalid_argument("ChainConfig: receiver out of range");
}

int ChainConfig::displacement() const {
  int delta = (receiver - sender) % n_sites;
  if (delta < 0) delta += n_sites;
  if (2 * delta > n_sites) delta -= n_sites;  // reduce to (-N/2, N/2]
  return delta;
}

int ChainConfig::ring_distance() const {
  int delta = std::abs(receiver - sender);
  return std::min(delta, n_sites - delta);
}

TransferAmplitude make_amplitude(cplx value, double t) {
  TransferAmplitude amp;
  amp.value = value;
  amp.modulus = std::abs(value);
  amp.phase = std::arg(value);
  amp.time = t;
  return amp;
}

}  // namespace qst
