#include "dqdotto/spectrum.hpp"

#include <cmath>

namespace dqdotto {

Mat4 hamiltonian_matrix(const DqdParams& p) {
  const double d1 = p.delta1();
  const double d2 = p.delta2();
  const double v = p.v();
  return Mat4{{{v, d2, d1, 0.0},
               {d2, -v, 0.0, d1},
               {d1, 0.0, -v, d2},
               {0.0, d1, d2, v}}};
}

Spectrum eigenenergies(const DqdParams& p) {
  Spectrum s;
  s.n_minus = p.n_minus();
  s.n_plus = p.n_plus();
  const double s_minus = std::hypot(s.n_minus, p.v());
  const double s_plus = std::hypot(s.n_plus, p.v());
  s.e_paper = {-s_minus, -s_plus, s_minus, s_plus};
  // s_plus >= s_minus >= 0 on the nonnegative quadrant, so the ascending
  // order is fixed.
  s.e_sorted = {-s_plus, -s_minus, s_minus, s_plus};
  return s;
}

namespace {

struct Family {
  double alpha;
  double a;  // A_pm = v + sqrt(n_pm^2 + v^2)
  double n;
};

Family make_family(double n, double v, double s, const char* which) {
  if (v == 0.0 && n == 0.0) {
    throw DegenerateConstruction(
        std::string("eigenvector normalization diverges: v = 0 and ") + which +
        " = 0");
  }
  Family f;
  f.n = n;
  f.a = v + s;
  f.alpha = 1.0 / (std::sqrt(2.0) * std::hypot(f.n, f.a));
  return f;
}

}  // namespace

Spectrum eigenstates(const DqdParams& p) {
  Spectrum s = eigenenergies(p);
  const double s_minus = s.e_paper[2];
  const double s_plus = s.e_paper[3];
  const Family fm = make_family(s.n_minus, p.v(), s_minus, "n_minus");
  const Family fp = make_family(s.n_plus, p.v(), s_plus, "n_plus");

  // Rows pair positionally with e_paper: H row(k) = e_paper[k] row(k).
  // The building blocks (alpha_pm, A_pm, n_pm) are the published ones;
  // the within-pair assignment follows the eigenvalue equation under the
  // documented basis convention.
  Mat4 rows;
  rows[0] = {-fm.n * fm.alpha, -fm.a * fm.alpha, fm.a * fm.alpha,
             fm.n * fm.alpha};  // E1 = -sqrt(n_minus^2 + v^2)
  rows[1] = {fp.n * fp.alpha, -fp.a * fp.alpha, -fp.a * fp.alpha,
             fp.n * fp.alpha};  // E2 = -sqrt(n_plus^2 + v^2)
  rows[2] = {-fm.a * fm.alpha, fm.n * fm.alpha, -fm.n * fm.alpha,
             fm.a * fm.alpha};  // E3 = +sqrt(n_minus^2 + v^2)
  rows[3] = {fp.a * fp.alpha, fp.n * fp.alpha, fp.n * fp.alpha,
             fp.a * fp.alpha};  // E4 = +sqrt(n_plus^2 + v^2)
  s.eigvecs = rows;
  return s;
}

}  // namespace dqdotto
