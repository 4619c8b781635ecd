#pragma once

#include <cstdint>
#include <vector>

namespace pathsig {

/// Y_t = c + phi·Y_{t-1} + ε_t + theta·ε_{t-1}, ε ~ N(0, noise_std²).
struct ArmaSpec {
  double phi = 0.0;
  double theta = 0.0;
  double c = 0.0;
  double noise_std = 1.0;
  int length = 100;
  int burn_in = 200;
};

/// The two classes of the classification demo.
inline constexpr ArmaSpec kArmaClass0{0.4, 0.5, 0.5, 1.0, 100, 200};
inline constexpr ArmaSpec kArmaClass1{0.8, 0.7, 0.5, 1.0, 100, 200};

/// Simulates `spec.length` values after discarding `spec.burn_in` samples.
/// The recursion starts from Y = 0, ε = 0. Deterministic for a given seed.
std::vector<double> arma_generate(const ArmaSpec& spec, std::uint64_t seed);

}  // namespace pathsig
