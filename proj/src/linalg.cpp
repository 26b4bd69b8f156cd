#include "dqdotto/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace dqdotto {

double dot(const Vec4& a, const Vec4& b) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s += a[i] * b[i];
  return s;
}

Vec4 matvec(const Mat4& m, const Vec4& x) {
  Vec4 y{};
  for (int i = 0; i < 4; ++i) y[i] = dot(m[i], x);
  return y;
}

double frobenius_norm(const Mat4& m) {
  double s = 0.0;
  for (const auto& row : m)
    for (double x : row) s += x * x;
  return std::sqrt(s);
}

double max_abs_offdiag(const Mat4& m) {
  double mx = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) mx = std::max(mx, std::abs(m[i][j]));
  return mx;
}

namespace {

constexpr int kRotationsPerSweep = 6;  // off-diagonal pairs of a 4x4
constexpr int kMaxSweeps = 50;

// One Jacobi rotation zeroing a[p][q], accumulating the rotation into v.
void rotate(Mat4& a, Mat4& v, int p, int q) {
  const double apq = a[p][q];
  if (apq == 0.0) return;
  const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
  // Smaller-angle root of t^2 + 2 t theta - 1 = 0, stable for large theta.
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  for (int k = 0; k < 4; ++k) {
    const double akp = a[k][p];
    const double akq = a[k][q];
    a[k][p] = c * akp - s * akq;
    a[k][q] = s * akp + c * akq;
  }
  for (int k = 0; k < 4; ++k) {
    const double apk = a[p][k];
    const double aqk = a[q][k];
    a[p][k] = c * apk - s * aqk;
    a[q][k] = s * apk + c * aqk;
  }
  a[p][q] = 0.0;
  a[q][p] = 0.0;

  for (int k = 0; k < 4; ++k) {
    const double vkp = v[k][p];
    const double vkq = v[k][q];
    v[k][p] = c * vkp - s * vkq;
    v[k][q] = s * vkp + c * vkq;
  }
}

}  // namespace

EigenSystem diagonalize_oracle(const Mat4& m) {
  const double norm = frobenius_norm(m);
  const double sym_tol = 1e-12 * std::max(1.0, norm);
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (std::abs(m[i][j] - m[j][i]) > sym_tol) {
        throw NonSymmetric("matrix asymmetry " +
                           std::to_string(std::abs(m[i][j] - m[j][i])) +
                           " at (" + std::to_string(i) + "," +
                           std::to_string(j) + ") exceeds tolerance");
      }
    }
  }

  Mat4 a = m;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) a[i][j] = a[j][i] = 0.5 * (m[i][j] + m[j][i]);

  Mat4 v{};
  for (int i = 0; i < 4; ++i) v[i][i] = 1.0;

  const double threshold = 1e-13 * norm;
  bool converged = max_abs_offdiag(a) <= threshold;
  for (int iter = 0; !converged && iter < kMaxSweeps * kRotationsPerSweep;
       ++iter) {
    int p = 0, q = 1;
    double mx = 0.0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        if (std::abs(a[i][j]) > mx) {
          mx = std::abs(a[i][j]);
          p = i;
          q = j;
        }
      }
    }
    if (mx <= threshold) {
      converged = true;
      break;
    }
    rotate(a, v, p, q);
  }
  if (!converged && max_abs_offdiag(a) > threshold) {
    throw NoConvergence("Jacobi iteration did not reach threshold after " +
                        std::to_string(kMaxSweeps) + " sweeps");
  }

  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(), [&a](int i, int j) {
    if (a[i][i] != a[j][j]) return a[i][i] < a[j][j];
    return i < j;  // deterministic tie-break for degenerate values
  });

  EigenSystem result{};
  for (int k = 0; k < 4; ++k) {
    const int src = order[k];
    result.values[k] = a[src][src];
    for (int i = 0; i < 4; ++i) result.vectors[k][i] = v[i][src];
  }
  return result;
}

}  // namespace dqdotto
