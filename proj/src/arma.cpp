#include "pathsig/arma.hpp"

#include <random>
#include <stdexcept>

namespace pathsig {

std::vector<double> arma_generate(const ArmaSpec& spec, std::uint64_t seed) {
  if (spec.length < 1) throw std::invalid_argument("arma_generate: length must be >= 1");
  if (spec.burn_in < 0) throw std::invalid_argument("arma_generate: burn_in must be >= 0");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, spec.noise_std);

  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(spec.length));
  double y = 0.0;
  double eps_prev = 0.0;
  for (int t = 0; t < spec.burn_in + spec.length; ++t) {
    const double eps = noise(rng);
    y = spec.c + spec.phi * y + eps + spec.theta * eps_prev;
    eps_prev = eps;
    if (t >= spec.burn_in) out.push_back(y);
  }
  return out;
}

}  // namespace pathsig
