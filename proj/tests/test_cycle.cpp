#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "dqdotto/cycle.hpp"
#include "dqdotto/spectrum.hpp"

using namespace dqdotto;

namespace {

OttoCycleSpec baseline_spec(double r, LevelScheme levels = LevelScheme::TwoLevel,
                            double t_hot = 2.0, double t_cold = 1.0) {
  return OttoCycleSpec(DqdParams(10, 3, 10), DqdParams(10, 3, 10.0 * r), t_hot,
                       t_cold, levels);
}

std::vector<double> level_energies(const DqdParams& p, LevelScheme levels) {
  const Spectrum s = eigenenergies(p);
  if (levels == LevelScheme::TwoLevel) return {s.e_sorted[0], s.e_sorted[1]};
  return {s.e_sorted[0], s.e_sorted[1], s.e_sorted[2], s.e_sorted[3]};
}

}  // namespace

TEST_CASE("spec validation") {
  const DqdParams p(10, 3, 10);
  CHECK_THROWS_AS(OttoCycleSpec(p, p, 1.0, 2.0, LevelScheme::TwoLevel),
                  InvalidSpec);
  CHECK_THROWS_AS(OttoCycleSpec(p, p, 2.0, 2.0, LevelScheme::TwoLevel),
                  InvalidSpec);
  CHECK_THROWS_AS(OttoCycleSpec(p, p, 2.0, 0.0, LevelScheme::TwoLevel),
                  InvalidSpec);
  CHECK_THROWS_AS(OttoCycleSpec(p, p, 2.0, -1.0, LevelScheme::TwoLevel),
                  InvalidSpec);
}

TEST_CASE("identical endpoints: work vanishes identically, heats do not") {
  // With equal spectra at both endpoints every term of the product-sum
  // work form cancels, but the isochoric heats are plain heat conduction
  // (q_hot = -q_cold != 0), so the sign pattern sits exactly on a regime
  // boundary and classification refuses it.
  const OttoCycleSpec spec = baseline_spec(1.0);
  const CycleQuantities q = cycle_quantities(spec);
  CHECK(q.work == 0.0);
  CHECK(q.work_eq8 == 0.0);
  CHECK(q.q_hot == -q.q_cold);
  CHECK(std::abs(q.q_hot - 0.3964146504090562) <= 1e-12);
  CHECK_THROWS_AS(run_cycle(spec), UnclassifiablePattern);
}

TEST_CASE("engine point at r = 2") {
  const CycleResult res = run_cycle(baseline_spec(2.0));
  CHECK(res.regime == Regime::Engine);
  CHECK(std::abs(res.q_hot - 0.18553500957820723) <= 1e-12);
  CHECK(std::abs(res.q_cold - -0.11783637065964803) <= 1e-12);
  CHECK(std::abs(res.work - 0.0676986389185592) <= 1e-12);
  REQUIRE(res.efficiency.has_value());
  CHECK(*res.efficiency > 0.0);
  CHECK(*res.efficiency <= res.eta_carnot);
  CHECK(!res.cop.has_value());
}

TEST_CASE("refrigerator point at r = 4") {
  const CycleResult res = run_cycle(baseline_spec(4.0));
  CHECK(res.regime == Regime::Refrigerator);
  CHECK(res.q_hot < 0.0);
  CHECK(res.q_cold > 0.0);
  CHECK(res.work < 0.0);
  REQUIRE(res.cop.has_value());
  CHECK(*res.cop > 0.0);
  CHECK(*res.cop <= res.cop_carnot);
  CHECK(!res.efficiency.has_value());
}

TEST_CASE("regime classification table") {
  const double tol = 1e-12;
  CHECK(classify_regime(1.0, -0.5, 0.5, tol) == Regime::Engine);
  CHECK(classify_regime(-0.12, -0.08, -0.20, tol) == Regime::HeaterII);
  CHECK(classify_regime(0.0, 0.0, 0.0, tol) == Regime::Idle);
  CHECK(classify_regime(1.0, -1.5, -0.5, tol) == Regime::HeaterI);
  CHECK(classify_regime(-1.0, 0.4, -0.6, tol) == Regime::Refrigerator);
  // Sub-tolerance values snap to an Idle pattern.
  CHECK(classify_regime(5e-13, -5e-13, 1e-14, tol) == Regime::Idle);
  // Boundary and impossible patterns stay loud.
  CHECK_THROWS_AS(classify_regime(1.0, -1.0, 0.0, tol), UnclassifiablePattern);
  CHECK_THROWS_AS(classify_regime(0.0, -0.5, -0.5, tol), UnclassifiablePattern);
  CHECK_THROWS_AS(classify_regime(1.0, 1.0, 2.0, tol), UnclassifiablePattern);
  CHECK_THROWS_AS(classify_regime(-1.0, 1.5, 0.5, tol), UnclassifiablePattern);
}

TEST_CASE("classification tolerance override") {
  // A generous snap tolerance turns the conduction boundary into Idle;
  // the default relative tolerance refuses it.
  const OttoCycleSpec spec = baseline_spec(1.0);
  CHECK_THROWS_AS(run_cycle(spec), UnclassifiablePattern);
  const CycleResult res = run_cycle(spec, 1.0);
  CHECK(res.regime == Regime::Idle);
  CHECK(!res.efficiency.has_value());
  CHECK(!res.cop.has_value());
}

TEST_CASE("carnot bounds") {
  const CarnotBounds base = carnot_bounds(2.0, 1.0);
  CHECK(base.eta == 0.5);
  CHECK(base.cop == 1.0);
  const CarnotBounds scaled = carnot_bounds(20.0, 10.0);
  CHECK(scaled.eta == 0.5);
  CHECK(scaled.cop == 1.0);
  const CarnotBounds tight = carnot_bounds(2.0, 1.999);
  CHECK(std::abs(tight.eta - 0.0005) <= 1e-15);
  CHECK(std::abs(tight.cop - 1999.0) <= 1e-9);
  CHECK_THROWS_AS(carnot_bounds(1.0, 1.0), InvalidSpec);
  CHECK_THROWS_AS(carnot_bounds(1.0, 2.0), InvalidSpec);
}

TEST_CASE("classical otto reference") {
  CHECK(classical_otto_efficiency(1.0, 1.4) == 0.0);
  CHECK(classical_otto_efficiency(0.5, 5.0 / 3.0) < 0.0);
  CHECK(std::abs(classical_otto_efficiency(2.0, 5.0 / 3.0) -
                 0.3700394750525634) <= 1e-12);
  CHECK_THROWS_AS(classical_otto_efficiency(0.0, 1.4), InvalidSpec);
  CHECK_THROWS_AS(classical_otto_efficiency(2.0, 1.0), InvalidSpec);
}

TEST_CASE("first-law identity across random specs") {
  std::mt19937 rng(20240612);
  std::uniform_real_distribution<double> coupling(0.0, 50.0);
  std::uniform_real_distribution<double> temp(0.1, 30.0);
  std::bernoulli_distribution levels_coin;
  for (int trial = 0; trial < 1000; ++trial) {
    double tc = temp(rng), th = temp(rng);
    if (tc > th) std::swap(tc, th);
    if (tc == th) continue;
    const OttoCycleSpec spec(
        DqdParams(coupling(rng), coupling(rng), coupling(rng)),
        DqdParams(coupling(rng), coupling(rng), coupling(rng)), th, tc,
        levels_coin(rng) ? LevelScheme::FourLevel : LevelScheme::TwoLevel);
    const CycleQuantities q = cycle_quantities(spec);
    CHECK(std::abs(q.work - q.work_eq8) <= 1e-12);
    CHECK(q.work == q.q_hot + q.q_cold);
  }
}

TEST_CASE("delta exchange leaves the cycle unchanged") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> coupling(0.0, 50.0);
  for (int trial = 0; trial < 300; ++trial) {
    const double d1h = coupling(rng), d2h = coupling(rng), vh = coupling(rng);
    const double d1c = coupling(rng), d2c = coupling(rng), vc = coupling(rng);
    const OttoCycleSpec a(DqdParams(d1h, d2h, vh), DqdParams(d1c, d2c, vc),
                          2.0, 1.0, LevelScheme::FourLevel);
    const OttoCycleSpec b(DqdParams(d2h, d1h, vh), DqdParams(d2c, d1c, vc),
                          2.0, 1.0, LevelScheme::FourLevel);
    const CycleQuantities qa = cycle_quantities(a);
    const CycleQuantities qb = cycle_quantities(b);
    CHECK(std::abs(qa.q_hot - qb.q_hot) <= 1e-12);
    CHECK(std::abs(qa.q_cold - qb.q_cold) <= 1e-12);
    CHECK(std::abs(qa.work - qb.work) <= 1e-12);
  }
}

TEST_CASE("no work from effectively equal baths") {
  std::mt19937 rng(31337);
  std::uniform_real_distribution<double> coupling(0.0, 50.0);
  std::uniform_real_distribution<double> temp(0.5, 30.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const double tc = temp(rng);
    const OttoCycleSpec spec(
        DqdParams(coupling(rng), coupling(rng), coupling(rng)),
        DqdParams(coupling(rng), coupling(rng), coupling(rng)), tc + 1e-12, tc,
        LevelScheme::FourLevel);
    CHECK(cycle_quantities(spec).work <= 1e-9);
  }
}

TEST_CASE("endpoint/temperature swap exchanges the two heats") {
  // Relabeling (hot <-> cold endpoint, t_hot <-> t_cold) describes the
  // same closed loop, so the heat formulas trade places: q_hot(spec)
  // equals the cold-isochore heat of the swapped labeling and vice versa.
  // The swapped labeling violates t_hot > t_cold, so it is evaluated
  // directly from the Gibbs populations here.
  std::mt19937 rng(808);
  std::uniform_real_distribution<double> coupling(0.0, 50.0);
  std::uniform_real_distribution<double> temp(0.2, 30.0);
  for (int trial = 0; trial < 300; ++trial) {
    const DqdParams hot(coupling(rng), coupling(rng), coupling(rng));
    const DqdParams cold(coupling(rng), coupling(rng), coupling(rng));
    double tc = temp(rng), th = temp(rng);
    if (tc > th) std::swap(tc, th);
    if (tc == th) continue;
    for (LevelScheme levels :
         {LevelScheme::TwoLevel, LevelScheme::FourLevel}) {
      const OttoCycleSpec spec(hot, cold, th, tc, levels);
      const CycleQuantities q = cycle_quantities(spec);

      // Swapped labeling: hot' = cold @ tc, cold' = hot @ th.
      const std::vector<double> e_hot2 = level_energies(cold, levels);
      const std::vector<double> e_cold2 = level_energies(hot, levels);
      const std::vector<double> p_hot2 = gibbs_state(e_hot2, tc).probs;
      const std::vector<double> p_cold2 = gibbs_state(e_cold2, th).probs;
      double q_hot2 = 0.0, q_cold2 = 0.0;
      for (size_t n = 0; n < e_hot2.size(); ++n) {
        q_hot2 += e_hot2[n] * (p_hot2[n] - p_cold2[n]);
        q_cold2 += e_cold2[n] * (p_cold2[n] - p_hot2[n]);
      }
      CHECK(std::abs(q.q_hot - q_cold2) <= 1e-12);
      CHECK(std::abs(q.q_cold - q_hot2) <= 1e-12);
    }
  }
}

TEST_CASE("performance never exceeds the carnot bounds") {
  std::mt19937 rng(60601);
  std::uniform_real_distribution<double> coupling(0.0, 50.0);
  std::uniform_real_distribution<double> temp(0.1, 30.0);
  std::bernoulli_distribution levels_coin;
  int engines = 0, refrigerators = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    double tc = temp(rng), th = temp(rng);
    if (tc > th) std::swap(tc, th);
    if (tc == th) continue;
    const OttoCycleSpec spec(
        DqdParams(coupling(rng), coupling(rng), coupling(rng)),
        DqdParams(coupling(rng), coupling(rng), coupling(rng)), th, tc,
        levels_coin(rng) ? LevelScheme::FourLevel : LevelScheme::TwoLevel);
    CycleResult res{};
    try {
      res = run_cycle(spec);
    } catch (const UnclassifiablePattern&) {
      continue;  // exact boundary hit, nothing to bound
    }
    if (res.regime == Regime::Engine) {
      ++engines;
      CHECK(*res.efficiency <= res.eta_carnot + 1e-12);
      CHECK(*res.efficiency > 0.0);
    } else if (res.regime == Regime::Refrigerator) {
      ++refrigerators;
      CHECK(*res.cop <= res.cop_carnot + 1e-12);
      CHECK(*res.cop > 0.0);
    }
  }
  // The draw must actually exercise both regimes.
  CHECK(engines > 50);
  CHECK(refrigerators > 50);
}
