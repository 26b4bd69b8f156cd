#pragma once

#include <optional>
#include <string>

#include "dqdotto/params.hpp"
#include "dqdotto/thermo.hpp"

namespace dqdotto {

// Number of levels carried through the cycle. TwoLevel keeps the two
// lowest levels at both endpoints (valid while the baths are cold
// compared to the gap to the upper pair); FourLevel is the full model.
enum class LevelScheme { TwoLevel, FourLevel };

enum class Regime { Engine, Refrigerator, HeaterI, HeaterII, Idle };

std::string regime_name(Regime r);

// One quasi-static Otto cycle: hot isochore at `hot` against t_hot,
// adiabatic stroke to `cold`, cold isochore against t_cold, adiabatic
// stroke back. Levels are paired across the adiabatic strokes by sorted
// order at both endpoints; for nonnegative couplings the sorted order is
// also the adiabatic continuation (the levels never cross inside the
// parameter quadrant).
class OttoCycleSpec {
 public:
  OttoCycleSpec(DqdParams hot, DqdParams cold, double t_hot, double t_cold,
                LevelScheme levels);

  const DqdParams& hot() const { return hot_; }
  const DqdParams& cold() const { return cold_; }
  double t_hot() const { return t_hot_; }
  double t_cold() const { return t_cold_; }
  LevelScheme levels() const { return levels_; }

  double compression_ratio() const { return cold_.v() / hot_.v(); }

  friend bool operator==(const OttoCycleSpec&, const OttoCycleSpec&) = default;

 private:
  DqdParams hot_;
  DqdParams cold_;
  double t_hot_;
  double t_cold_;
  LevelScheme levels_;
};

struct CarnotBounds {
  double eta;  // 1 - t_cold/t_hot
  double cop;  // t_cold/(t_hot - t_cold)
};

CarnotBounds carnot_bounds(double t_hot, double t_cold);

// Signed heats and work of one cycle, before any regime classification.
// q_hot > 0 means heat absorbed from the hot bath, q_cold > 0 heat
// absorbed from the cold bath; work > 0 is net output.
struct CycleQuantities {
  double q_hot = 0.0;       // sum_n E_n^h (p_n^h - p_n^c)
  double q_cold = 0.0;      // sum_n E_n^c (p_n^c - p_n^h)
  double work = 0.0;        // q_hot + q_cold
  double work_eq8 = 0.0;    // sum_n (E_n^h - E_n^c)(p_n^h - p_n^c)
  double eta_raw = 0.0;     // work / q_hot, may be non-finite
  double eta_carnot = 0.0;
  double cop_carnot = 0.0;
};

CycleQuantities cycle_quantities(const OttoCycleSpec& spec);

struct CycleResult {
  double q_hot;
  double q_cold;
  double work;
  double eta_raw;
  std::optional<double> efficiency;  // work/q_hot, Engine regime only
  std::optional<double> cop;         // |q_cold/work|, Refrigerator only
  Regime regime;
  double eta_carnot;
  double cop_carnot;
};

// Sign pattern of (q_hot, q_cold, work) after snapping |x| <= tol to zero:
//   (+,-,+) Engine   (-,+,-) Refrigerator   (+,-,-) HeaterI
//   (-,-,-) HeaterII (0,0,0) Idle
// Anything else throws UnclassifiablePattern; boundary patterns such as
// (+,-,0) are reported loudly instead of being folded into a neighbor.
// Caller guarantees work = q_hot + q_cold within 1e-9.
Regime classify_regime(double q_hot, double q_cold, double work, double tol);

// Default snap tolerance used by run_cycle: 1e-12 * max(1, |q_hot|, |q_cold|).
double classification_tolerance(double q_hot, double q_cold);

// tol overrides the classification tolerance when set.
CycleResult run_cycle(const OttoCycleSpec& spec,
                      std::optional<double> tol = std::nullopt);

// Classical Otto reference curve 1 - r^(1-gamma). No regime logic; goes
// negative for r < 1. Throws InvalidSpec unless r > 0 and gamma > 1.
double classical_otto_efficiency(double r, double gamma);

}  // namespace dqdotto
