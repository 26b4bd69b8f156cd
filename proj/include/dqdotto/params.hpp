#pragma once

#include "dqdotto/errors.hpp"

namespace dqdotto {

// Couplings of the two-DQD working substance at one cycle endpoint.
// All values in micro-eV. Only the nonnegative quadrant is admitted:
// A_minus/A_plus = V + sqrt(...) change character for V < 0, and the
// machine is only ever operated with nonnegative couplings.
class DqdParams {
 public:
  DqdParams(double delta1, double delta2, double v);

  double delta1() const { return delta1_; }
  double delta2() const { return delta2_; }
  double v() const { return v_; }

  // n_minus = delta1 - delta2, n_plus = delta1 + delta2
  double n_minus() const { return delta1_ - delta2_; }
  double n_plus() const { return delta1_ + delta2_; }

  friend bool operator==(const DqdParams&, const DqdParams&) = default;

 private:
  double delta1_;
  double delta2_;
  double v_;
};

}  // namespace dqdotto
