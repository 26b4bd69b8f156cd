#pragma once

#include <array>
#include <optional>

#include "dqdotto/linalg.hpp"
#include "dqdotto/params.hpp"

namespace dqdotto {

// Eigensystem of H = delta1 (sx ⊗ I) + delta2 (I ⊗ sx) + v (sz ⊗ sz).
//
// Basis convention (fixed so eigenvector tables are reproducible):
// order (|LL>, |LR>, |RL>, |RR>) with sz|L> = +|L>. Energies are in the
// publication labeling
//   E1 = -sqrt(n_minus^2 + v^2), E2 = -sqrt(n_plus^2 + v^2),
//   E3 = +sqrt(n_minus^2 + v^2), E4 = +sqrt(n_plus^2 + v^2),
// with n_minus = delta1 - delta2 and n_plus = delta1 + delta2. Note E2 is
// the ground state whenever n_plus^2 > n_minus^2; e_sorted carries the
// ascending view used by the thermodynamic pipeline.
struct Spectrum {
  std::array<double, 4> e_paper;   // (E1, E2, E3, E4) as labeled above
  std::array<double, 4> e_sorted;  // same energies, nondecreasing
  double n_minus = 0.0;
  double n_plus = 0.0;

  // Row k is a unit eigenvector for e_paper[k], columns in basis order
  // (|LL>, |LR>, |RL>, |RR>). Present only when eigenstates() built it.
  std::optional<Mat4> eigvecs;
};

// The 4x4 Hamiltonian in the basis convention above:
//   [  v  d2  d1  0  ]
//   [ d2  -v   0  d1 ]
//   [ d1   0  -v  d2 ]
//   [  0  d1  d2  v  ]
Mat4 hamiltonian_matrix(const DqdParams& p);

// Closed-form energies only (eigvecs left empty). Total on valid params.
Spectrum eigenenergies(const DqdParams& p);

// Energies plus the closed-form eigenvector table built from
//   alpha_pm = 1 / (sqrt(2) * sqrt(n_pm^2 + A_pm^2)),
//   A_pm = v + sqrt(n_pm^2 + v^2).
// Throws DegenerateConstruction when v = 0 and n_minus = 0 (E1/E3 pair
// degenerate at zero) or v = 0 and n_plus = 0 (E2/E4 pair); callers that
// only need energies should use eigenenergies, callers that need vectors
// anyway can fall back to diagonalize_oracle.
Spectrum eigenstates(const DqdParams& p);

}  // namespace dqdotto
