#pragma once

#include <array>

#include "dqdotto/errors.hpp"

namespace dqdotto {

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<Vec4, 4>;

double dot(const Vec4& a, const Vec4& b);
Vec4 matvec(const Mat4& m, const Vec4& x);
double frobenius_norm(const Mat4& m);
double max_abs_offdiag(const Mat4& m);

// Eigenpairs of a real symmetric 4x4 matrix.
// values are ascending; vector(k) is the unit eigenvector for values[k].
struct EigenSystem {
  Vec4 values;
  Mat4 vectors;  // row k = eigenvector k

  const Vec4& vector(int k) const { return vectors[static_cast<size_t>(k)]; }
};

// Independent dense eigensolver: classical Jacobi rotations, zeroing the
// largest off-diagonal element until max |offdiag| <= 1e-13 * ||m||_F.
// Kept free of the closed-form spectrum so the two routes cross-check
// each other.
//
// Throws NonSymmetric if |m - m^T| exceeds 1e-12 * max(1, ||m||_F),
// NoConvergence after 50 full sweeps (6 rotations each).
EigenSystem diagonalize_oracle(const Mat4& m);

}  // namespace dqdotto
