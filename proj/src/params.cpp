#include "dqdotto/params.hpp"

#include <cmath>
#include <string>

namespace dqdotto {

namespace {

void check_coupling(const char* name, double value) {
  if (!std::isfinite(value)) {
    throw InvalidSpec(std::string(name) + " must be finite");
  }
  if (value < 0.0) {
    throw InvalidSpec(std::string(name) + " must be >= 0, got " +
                      std::to_string(value));
  }
}

}  // namespace

DqdParams::DqdParams(double delta1, double delta2, double v)
    : delta1_(delta1), delta2_(delta2), v_(v) {
  check_coupling("delta1", delta1);
  check_coupling("delta2", delta2);
  check_coupling("v", v);
}

}  // namespace dqdotto
