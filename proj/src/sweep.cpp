#include "dqdotto/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "dqdotto/spectrum.hpp"

namespace dqdotto {

std::string axis_name(SweepAxis a) {
  switch (a) {
    case SweepAxis::CompressionRatio: return "r";
    case SweepAxis::Delta2Cold: return "delta2_cold";
    case SweepAxis::Temperature: return "t_hot";
    case SweepAxis::Delta2Shared: return "delta2_shared";
  }
  return "?";
}

std::string quantity_name(CrossedQuantity q) {
  switch (q) {
    case CrossedQuantity::QHot: return "q_hot";
    case CrossedQuantity::QCold: return "q_cold";
    case CrossedQuantity::Work: return "work";
  }
  return "?";
}

OttoCycleSpec plan_spec_at(const SweepPlan& plan, double x) {
  const OttoCycleSpec& b = plan.base;
  switch (plan.axis) {
    case SweepAxis::CompressionRatio:
      return OttoCycleSpec(
          b.hot(),
          DqdParams(b.cold().delta1(), b.cold().delta2(), x * b.hot().v()),
          b.t_hot(), b.t_cold(), b.levels());
    case SweepAxis::Delta2Cold:
      return OttoCycleSpec(b.hot(),
                           DqdParams(b.cold().delta1(), x, b.cold().v()),
                           b.t_hot(), b.t_cold(), b.levels());
    case SweepAxis::Temperature: {
      const double ratio = b.t_cold() / b.t_hot();
      return OttoCycleSpec(b.hot(), b.cold(), x, x * ratio, b.levels());
    }
    case SweepAxis::Delta2Shared:
      return OttoCycleSpec(DqdParams(b.hot().delta1(), x, b.hot().v()),
                           DqdParams(b.cold().delta1(), x, b.cold().v()),
                           b.t_hot(), b.t_cold(), b.levels());
  }
  throw InvalidSpec("unknown sweep axis");
}

namespace {

void validate_plan(const SweepPlan& plan) {
  if (!(plan.lo < plan.hi)) throw InvalidSpec("sweep range needs lo < hi");
  if (plan.steps < 2) throw InvalidSpec("sweep needs at least 2 steps");
  if (plan.axis == SweepAxis::CompressionRatio && !(plan.base.hot().v() > 0.0)) {
    throw InvalidSpec("compression-ratio sweep requires hot v > 0");
  }
}

double grid_point(const SweepPlan& plan, int i) {
  return plan.lo + (plan.hi - plan.lo) * static_cast<double>(i) /
                       static_cast<double>(plan.steps - 1);
}

double ratio_or_nan(double num, double den) {
  return den != 0.0 ? num / den : std::numeric_limits<double>::quiet_NaN();
}

void fill_ratios(SweepRow& row, const OttoCycleSpec& spec) {
  row.r = ratio_or_nan(spec.cold().v(), spec.hot().v());
  row.delta1_ratio = ratio_or_nan(spec.cold().delta1(), spec.hot().delta1());
  row.delta2_ratio = ratio_or_nan(spec.cold().delta2(), spec.hot().delta2());
}

double pick_quantity(const CycleQuantities& q, CrossedQuantity which) {
  switch (which) {
    case CrossedQuantity::QHot: return q.q_hot;
    case CrossedQuantity::QCold: return q.q_cold;
    case CrossedQuantity::Work: return q.work;
  }
  return 0.0;
}

constexpr double kBracketWidth = 1e-6;

// Bisection on a continuous scalar with a sign change over [lo, hi].
// f(lo) and f(hi) are already evaluated by the caller.
std::pair<double, double> bisect(const std::function<double(double)>& f,
                                 double lo, double hi, double f_lo) {
  while (hi - lo > kBracketWidth) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval exhausted in doubles
    const double f_mid = f(mid);
    if (f_mid == 0.0) return {mid, mid};
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

}  // namespace

std::vector<SweepRow> sweep(const SweepPlan& plan) {
  validate_plan(plan);
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<size_t>(plan.steps));
  for (int i = 0; i < plan.steps; ++i) {
    SweepRow row;
    row.axis_value = grid_point(plan, i);
    try {
      const OttoCycleSpec spec = plan_spec_at(plan, row.axis_value);
      fill_ratios(row, spec);
      const CycleQuantities q = cycle_quantities(spec);
      row.quantities = q;
      try {
        const Regime regime = classify_regime(
            q.q_hot, q.q_cold, q.work,
            plan.classify_tol.value_or(
                classification_tolerance(q.q_hot, q.q_cold)));
        row.regime = regime;
        if (regime == Regime::Engine) row.eta = q.work / q.q_hot;
        if (regime == Regime::Refrigerator) row.cop = std::abs(q.q_cold / q.work);
      } catch (const UnclassifiablePattern& e) {
        row.error = e.what();
      }
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<CrossingReport> find_crossings(const SweepPlan& plan,
                                           const std::vector<SweepRow>& rows) {
  std::vector<CrossingReport> reports;
  for (CrossedQuantity which : {CrossedQuantity::QHot, CrossedQuantity::QCold,
                                CrossedQuantity::Work}) {
    const auto eval = [&plan, which](double x) {
      return pick_quantity(cycle_quantities(plan_spec_at(plan, x)), which);
    };
    for (size_t i = 0; i + 1 < rows.size(); ++i) {
      const SweepRow& a = rows[i];
      const SweepRow& b = rows[i + 1];
      if (!a.quantities || !b.quantities) continue;
      const double fa = pick_quantity(*a.quantities, which);
      const double fb = pick_quantity(*b.quantities, which);

      // Only strict sign changes count; a grid point sitting exactly on a
      // root separates two constant-sign pairs.
      if (fa == 0.0 || fb == 0.0 || (fa > 0.0) == (fb > 0.0)) continue;

      CrossingReport report;
      report.quantity = which;
      report.regime_before = a.regime;
      report.regime_after = b.regime;
      const auto [lo, hi] = bisect(eval, a.axis_value, b.axis_value, fa);
      report.bracket_lo = lo;
      report.bracket_hi = hi;
      report.location = 0.5 * (lo + hi);
      reports.push_back(report);
    }
  }
  std::stable_sort(reports.begin(), reports.end(),
                   [](const CrossingReport& a, const CrossingReport& b) {
                     return a.location < b.location;
                   });
  return reports;
}

WorkOptimum optimize_work_over_delta2(double v_hot, double v_cold,
                                      double delta1, double t_hot,
                                      double t_cold, double lo, double hi) {
  if (!(lo > 0.0) || !(lo < hi) || !(hi <= delta1)) {
    throw InvalidSpec("delta2 search range must satisfy 0 < lo < hi <= delta1");
  }

  const auto work_at = [&](double d2) {
    const OttoCycleSpec spec(DqdParams(delta1, d2, v_hot),
                             DqdParams(delta1, d2, v_cold), t_hot, t_cold,
                             LevelScheme::TwoLevel);
    return cycle_quantities(spec).work;
  };

  constexpr int kCoarsePoints = 200;
  double best_x = lo;
  double best_w = -std::numeric_limits<double>::infinity();
  const auto consider = [&](double x, double w) {
    if (w > best_w) {
      best_w = w;
      best_x = x;
    }
  };

  std::array<double, kCoarsePoints> xs{};
  int best_index = 0;
  for (int i = 0; i < kCoarsePoints; ++i) {
    xs[i] = lo + (hi - lo) * static_cast<double>(i) /
                     static_cast<double>(kCoarsePoints - 1);
    const double w = work_at(xs[i]);
    if (w > best_w) best_index = i;
    consider(xs[i], w);
  }

  // Golden-section refinement of the bracket around the best grid point.
  double a = xs[std::max(0, best_index - 1)];
  double b = xs[std::min(kCoarsePoints - 1, best_index + 1)];
  constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5) - 1) / 2
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = work_at(c);
  double fd = work_at(d);
  consider(c, fc);
  consider(d, fd);
  while (b - a > 1e-4) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = work_at(c);
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = work_at(d);
      consider(d, fd);
    }
  }

  if (!(best_w > 0.0)) {
    throw NoPositiveWork("no positive work in delta2 range [" +
                         std::to_string(lo) + ", " + std::to_string(hi) +
                         "] (best " + std::to_string(best_w) + ")");
  }
  return {best_x, best_w};
}

std::vector<OccupationRow> occupations_vs_axis(const SweepPlan& plan) {
  validate_plan(plan);
  if (plan.axis != SweepAxis::CompressionRatio &&
      plan.axis != SweepAxis::Temperature) {
    throw InvalidSpec("occupation tables support the r and temperature axes");
  }

  std::vector<OccupationRow> rows;
  rows.reserve(static_cast<size_t>(plan.steps));
  for (int i = 0; i < plan.steps; ++i) {
    OccupationRow row;
    row.axis_value = grid_point(plan, i);
    try {
      if (plan.axis == SweepAxis::CompressionRatio) {
        const OttoCycleSpec spec = plan_spec_at(plan, row.axis_value);
        const auto e_hot = two_level_truncation(eigenenergies(spec.hot()));
        const auto e_cold = two_level_truncation(eigenenergies(spec.cold()));
        const auto p_hot = gibbs_state(e_hot, spec.t_hot()).probs;
        const auto p_cold = gibbs_state(e_cold, spec.t_cold()).probs;
        row.probs = {p_hot[0], p_hot[1], p_cold[0], p_cold[1]};
      } else {
        const Spectrum s = eigenenergies(plan.base.hot());
        row.probs = gibbs_state(s.e_sorted, row.axis_value).probs;
      }
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<NormalizedRow> normalized_performance_sweep(const SweepPlan& plan,
                                                        double gamma) {
  std::vector<NormalizedRow> rows;
  for (const SweepRow& s : sweep(plan)) {
    NormalizedRow row;
    row.axis_value = s.axis_value;
    row.regime = s.regime;
    row.error = s.error;
    if (s.quantities) {
      if (s.eta) row.eta_n = *s.eta / s.quantities->eta_carnot;
      if (s.cop) row.cop_n = *s.cop / s.quantities->cop_carnot;
    }
    if (plan.axis == SweepAxis::CompressionRatio && s.axis_value > 0.0) {
      row.eta_otto = classical_otto_efficiency(s.axis_value, gamma);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace dqdotto
