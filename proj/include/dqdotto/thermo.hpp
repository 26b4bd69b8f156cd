#pragma once

#include <span>
#include <vector>

#include "dqdotto/errors.hpp"
#include "dqdotto/spectrum.hpp"

namespace dqdotto {

// Gibbs state of a discrete spectrum at bath temperature t (micro-eV,
// k_B = 1). probs follow the ordering of the input energy list.
struct ThermalState {
  double temperature = 0.0;
  // Partition function. When the unshifted sum exp(-E_n/t) is not
  // representable in double precision, z holds the shifted sum
  // exp(-(E_n - shift)/t) and shift records the energy offset;
  // shift = 0 means z is the plain partition function.
  double z = 0.0;
  double shift = 0.0;
  std::vector<double> probs;
};

// probs[n] = exp(-(E_n - E_min)/t) / sum_m exp(-(E_m - E_min)/t); the
// shift leaves the probabilities mathematically unchanged and keeps the
// exponentials representable for any |E|/t.
// Throws NonPositiveTemperature for t <= 0 (or NaN), InvalidSpec for
// fewer than two levels or non-finite energies.
ThermalState gibbs_state(std::span<const double> energies, double t);

// The two lowest levels of the spectrum (ground and first excited state
// by energy, not by publication label). Both are negative for this model.
std::array<double, 2> two_level_truncation(const Spectrum& s);

}  // namespace dqdotto
