#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dqdotto/cycle.hpp"

namespace dqdotto {

// Swept variable of a one-dimensional parameter scan.
//   CompressionRatio: cold.v = x * hot.v (hot.v fixed, requires hot.v > 0)
//   Delta2Cold:       cold.delta2 = x
//   Temperature:      t_hot = x, t_cold scaled to preserve t_hot/t_cold
//   Delta2Shared:     delta2 = x at both endpoints
enum class SweepAxis { CompressionRatio, Delta2Cold, Temperature, Delta2Shared };

std::string axis_name(SweepAxis a);

struct SweepPlan {
  OttoCycleSpec base;
  SweepAxis axis = SweepAxis::CompressionRatio;
  double lo = 0.0;
  double hi = 0.0;
  int steps = 2;        // grid point count, >= 2
  bool refine = false;  // bisect sign changes of q_hot/q_cold/work
  std::optional<double> classify_tol;  // regime snap override per row
};

// One evaluated grid point. Rows that fail to evaluate (invalid substituted
// parameters) carry only the error marker; rows whose quantities computed
// but whose sign pattern sits exactly on a regime boundary keep their
// quantities and mark the classification error.
struct SweepRow {
  double axis_value = 0.0;
  double r = 0.0;             // cold.v/hot.v for this row (NaN if hot.v = 0)
  double delta1_ratio = 0.0;  // cold.delta1/hot.delta1 (NaN if 0 denominator)
  double delta2_ratio = 0.0;
  std::optional<CycleQuantities> quantities;
  std::optional<Regime> regime;
  std::optional<double> eta;  // Engine rows only
  std::optional<double> cop;  // Refrigerator rows only
  std::string error;          // nonempty on any failure
};

// The cycle spec obtained by substituting axis value x into the plan's base.
OttoCycleSpec plan_spec_at(const SweepPlan& plan, double x);

// Uniform grid over [lo, hi], rows in axis order. Per-row failures are
// reported in the row, never abort the scan.
std::vector<SweepRow> sweep(const SweepPlan& plan);

enum class CrossedQuantity { QHot, QCold, Work };

std::string quantity_name(CrossedQuantity q);

// Sign change of one cycle quantity, refined by bisection on the
// continuous model (not on interpolated grid rows).
struct CrossingReport {
  CrossedQuantity quantity;
  double location = 0.0;    // midpoint of the final bracket
  double bracket_lo = 0.0;  // bracket width <= 1e-6 axis units
  double bracket_hi = 0.0;
  std::optional<Regime> regime_before;  // regimes of the originating rows
  std::optional<Regime> regime_after;
};

// Scan adjacent rows of a sweep for sign changes in q_hot, q_cold and work
// and bisect each one. Reports ordered by location. Rows without
// quantities are skipped; exact zeros on grid points are reported with a
// zero-width bracket.
std::vector<CrossingReport> find_crossings(const SweepPlan& plan,
                                           const std::vector<SweepRow>& rows);

struct WorkOptimum {
  double delta2_star;
  double w_star;
};

// Maximize cycle work over a shared tunneling parameter delta2 (the same
// value at both endpoints), with delta1, the two Coulomb couplings and the
// bath temperatures fixed. Coarse grid of 200 points, then golden-section
// refinement of the best bracket down to 1e-4 micro-eV. Two-level scheme,
// matching the regime the optimization targets.
// Throws NoPositiveWork when the best work found is <= 0, InvalidSpec
// unless 0 < lo < hi <= delta1.
WorkOptimum optimize_work_over_delta2(double v_hot, double v_cold,
                                      double delta1, double t_hot,
                                      double t_cold, double lo, double hi);

// Occupation-probability tables.
// CompressionRatio axis: two-level occupations of both endpoints per row,
// probs = (p1_hot, p2_hot, p1_cold, p2_cold), ascending energies.
// Temperature axis: four-level occupations of the hot endpoint at bath
// temperature x, probs = (p1..p4), ascending energies.
struct OccupationRow {
  double axis_value = 0.0;
  std::vector<double> probs;
  std::string error;
};

std::vector<OccupationRow> occupations_vs_axis(const SweepPlan& plan);

// Performance normalized to the Carnot bounds: eta_n = eta/eta_carnot on
// Engine rows, cop_n = cop/cop_carnot on Refrigerator rows. r-axis rows
// also carry the classical Otto reference 1 - r^(1-gamma) for comparison.
struct NormalizedRow {
  double axis_value = 0.0;
  std::optional<double> eta_n;
  std::optional<double> cop_n;
  std::optional<double> eta_otto;
  std::optional<Regime> regime;
  std::string error;
};

std::vector<NormalizedRow> normalized_performance_sweep(
    const SweepPlan& plan, double gamma = 5.0 / 3.0);

}  // namespace dqdotto
