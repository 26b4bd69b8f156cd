#pragma once

#include <stdexcept>
#include <string>

namespace dqdotto {

// Base class for every error this library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameter set or cycle specification violates an invariant
// (negative coupling, t_hot <= t_cold, bad sweep range, ...).
struct InvalidSpec : Error {
  using Error::Error;
};

// Closed-form eigenvector normalization diverges (V = 0 together with
// n_minus = 0 or n_plus = 0); energies remain well-defined.
struct DegenerateConstruction : Error {
  using Error::Error;
};

// Input matrix to the eigensolver is not symmetric within tolerance.
struct NonSymmetric : Error {
  using Error::Error;
};

// Jacobi iteration exceeded its sweep cap without reaching the
// off-diagonal threshold.
struct NoConvergence : Error {
  using Error::Error;
};

struct NonPositiveTemperature : Error {
  using Error::Error;
};

// Sign pattern of (q_hot, q_cold, work) matches no operating regime.
struct UnclassifiablePattern : Error {
  using Error::Error;
};

// Work optimizer found no delta2 with positive work in the search range.
struct NoPositiveWork : Error {
  using Error::Error;
};

// Command line / config file problem; maps to exit status 2.
struct UsageError : Error {
  using Error::Error;
};

// File could not be read or written; maps to exit status 1.
struct IoError : Error {
  using Error::Error;
};

}  // namespace dqdotto
