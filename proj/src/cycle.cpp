#include "dqdotto/cycle.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "dqdotto/spectrum.hpp"

namespace dqdotto {

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::Engine: return "Engine";
    case Regime::Refrigerator: return "Refrigerator";
    case Regime::HeaterI: return "HeaterI";
    case Regime::HeaterII: return "HeaterII";
    case Regime::Idle: return "Idle";
  }
  return "?";
}

OttoCycleSpec::OttoCycleSpec(DqdParams hot, DqdParams cold, double t_hot,
                             double t_cold, LevelScheme levels)
    : hot_(hot), cold_(cold), t_hot_(t_hot), t_cold_(t_cold), levels_(levels) {
  if (!std::isfinite(t_hot) || !std::isfinite(t_cold)) {
    throw InvalidSpec("bath temperatures must be finite");
  }
  if (!(t_cold > 0.0)) {
    throw InvalidSpec("t_cold must be > 0, got " + std::to_string(t_cold));
  }
  if (!(t_hot > t_cold)) {
    throw InvalidSpec("t_hot must exceed t_cold (got t_hot = " +
                      std::to_string(t_hot) + ", t_cold = " +
                      std::to_string(t_cold) + ")");
  }
}

CarnotBounds carnot_bounds(double t_hot, double t_cold) {
  if (!(t_cold > 0.0) || !(t_hot > t_cold)) {
    throw InvalidSpec("carnot_bounds requires t_hot > t_cold > 0");
  }
  return {1.0 - t_cold / t_hot, t_cold / (t_hot - t_cold)};
}

namespace {

std::vector<double> endpoint_energies(const DqdParams& p, LevelScheme levels) {
  const Spectrum s = eigenenergies(p);
  if (levels == LevelScheme::TwoLevel) {
    const auto pair = two_level_truncation(s);
    return {pair[0], pair[1]};
  }
  return {s.e_sorted[0], s.e_sorted[1], s.e_sorted[2], s.e_sorted[3]};
}

}  // namespace

CycleQuantities cycle_quantities(const OttoCycleSpec& spec) {
  const std::vector<double> e_hot = endpoint_energies(spec.hot(), spec.levels());
  const std::vector<double> e_cold =
      endpoint_energies(spec.cold(), spec.levels());
  const std::vector<double> p_hot = gibbs_state(e_hot, spec.t_hot()).probs;
  const std::vector<double> p_cold = gibbs_state(e_cold, spec.t_cold()).probs;

  CycleQuantities q;
  for (size_t n = 0; n < e_hot.size(); ++n) {
    const double dp = p_hot[n] - p_cold[n];
    q.q_hot += e_hot[n] * dp;
    q.q_cold += e_cold[n] * -dp;
    q.work_eq8 += (e_hot[n] - e_cold[n]) * dp;
  }
  q.work = q.q_hot + q.q_cold;
  q.eta_raw = q.work / q.q_hot;
  const CarnotBounds carnot = carnot_bounds(spec.t_hot(), spec.t_cold());
  q.eta_carnot = carnot.eta;
  q.cop_carnot = carnot.cop;
  return q;
}

double classification_tolerance(double q_hot, double q_cold) {
  return 1e-12 * std::max({1.0, std::abs(q_hot), std::abs(q_cold)});
}

Regime classify_regime(double q_hot, double q_cold, double work, double tol) {
  const auto snap = [tol](double x) -> int {
    if (std::abs(x) <= tol) return 0;
    return x > 0.0 ? 1 : -1;
  };
  const int h = snap(q_hot);
  const int c = snap(q_cold);
  const int w = snap(work);

  if (h == 1 && c == -1 && w == 1) return Regime::Engine;
  if (h == -1 && c == 1 && w == -1) return Regime::Refrigerator;
  if (h == 1 && c == -1 && w == -1) return Regime::HeaterI;
  if (h == -1 && c == -1 && w == -1) return Regime::HeaterII;
  if (h == 0 && c == 0 && w == 0) return Regime::Idle;

  throw UnclassifiablePattern(
      "sign pattern (" + std::to_string(h) + "," + std::to_string(c) + "," +
      std::to_string(w) + ") of q_hot = " + std::to_string(q_hot) +
      ", q_cold = " + std::to_string(q_cold) + ", work = " +
      std::to_string(work) + " matches no regime (cycle sits on a regime "
      "boundary)");
}

CycleResult run_cycle(const OttoCycleSpec& spec, std::optional<double> tol) {
  const CycleQuantities q = cycle_quantities(spec);
  const double snap = tol.value_or(classification_tolerance(q.q_hot, q.q_cold));
  const Regime regime = classify_regime(q.q_hot, q.q_cold, q.work, snap);

  CycleResult result{q.q_hot,      q.q_cold,     q.work,
                     q.eta_raw,    std::nullopt, std::nullopt,
                     regime,       q.eta_carnot, q.cop_carnot};
  if (regime == Regime::Engine) {
    result.efficiency = q.work / q.q_hot;
  } else if (regime == Regime::Refrigerator) {
    result.cop = std::abs(q.q_cold / q.work);
  }
  return result;
}

double classical_otto_efficiency(double r, double gamma) {
  if (!(r > 0.0)) throw InvalidSpec("compression ratio must be > 0");
  if (!(gamma > 1.0)) throw InvalidSpec("gamma must be > 1");
  return 1.0 - std::pow(r, 1.0 - gamma);
}

}  // namespace dqdotto
