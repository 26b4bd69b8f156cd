#include "dqdotto/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dqdotto {

ThermalState gibbs_state(std::span<const double> energies, double t) {
  if (!(t > 0.0)) {
    throw NonPositiveTemperature("temperature must be > 0, got " +
                                 std::to_string(t));
  }
  if (energies.size() < 2) {
    throw InvalidSpec("gibbs_state needs at least two levels");
  }
  for (double e : energies) {
    if (!std::isfinite(e)) throw InvalidSpec("non-finite level energy");
  }

  const double e_min = *std::min_element(energies.begin(), energies.end());

  ThermalState state;
  state.temperature = t;
  state.probs.resize(energies.size());
  double z_shifted = 0.0;
  for (size_t n = 0; n < energies.size(); ++n) {
    const double w = std::exp(-(energies[n] - e_min) / t);
    state.probs[n] = w;
    z_shifted += w;
  }
  for (double& p : state.probs) p /= z_shifted;

  // Report the plain partition function when it fits in a double,
  // otherwise keep the shifted sum and record the shift.
  const double scale = std::exp(-e_min / t);
  const double z_plain = z_shifted * scale;
  if (std::isfinite(z_plain) && z_plain > 0.0) {
    state.z = z_plain;
    state.shift = 0.0;
  } else {
    state.z = z_shifted;
    state.shift = e_min;
  }
  return state;
}

std::array<double, 2> two_level_truncation(const Spectrum& s) {
  return {s.e_sorted[0], s.e_sorted[1]};
}

}  // namespace dqdotto
