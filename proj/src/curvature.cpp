#include "lsreg/curvature.hpp"

namespace lsreg {

Mat43 tangential_basis(const Vec4& G) {
  if (norm(G) <= 1e-14) {
    throw ZeroGradient("|G| <= 1e-14");
  }
  const double g1 = G[0], g2 = G[1], g3 = G[2], g4 = G[3];
  // columns are the quaternion products iG, jG, kG; each is orthogonal to G
  // and to the others with squared norm |G|^2
  return Mat43{{{-g2, -g3, -g4},
                {g1, -g4, g3},
                {g4, g1, -g2},
                {-g3, g2, g1}}};
}

double tangential_determinant(const Vec4& G, const Mat4& hess) {
  const Mat43 T = tangential_basis(G);
  double HT[4][3];
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += hess[i][k] * T[k][j];
      HT[i][j] = s;
    }
  }
  Mat3 B{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += T[k][i] * HT[k][j];
      B[i][j] = s;
    }
  }
  return det3(B);
}

double kepler_curvature_closed(const Vec4& pt) {
  const double X = norm_sq(pt);
  if (X <= 1e-28) {
    throw ZeroPoint("curvature undefined at the origin");
  }
  const double X2 = X * X;
  const double X4 = X2 * X2;
  const double X8 = X4 * X4;
  const double X24 = X8 * X8 * X8;
  return 512.0 / X24;
}

double rotating_curvature_closed(const Vec4& pt) {
  const double X = norm_sq(pt);
  if (X <= 1e-28) {
    throw ZeroPoint("curvature undefined at the origin");
  }
  const double L = 2.0 * (pt[0] * pt[3] - pt[1] * pt[2]);
  const double X2 = X * X;
  const double X4 = X2 * X2;
  const double X6 = X4 * X2;
  const double X8 = X4 * X4;
  const double X24 = X8 * X8 * X8;
  const double c1 = X - 1.0;
  const double c2 = X + 1.0;
  const double c3 = X2 + X + 1.0;
  const double c4 = X2 - X + 1.0;
  const double c5 = -6.0 * L * L * X4 + L * X8 - L * X2 + 7.0 * X6 - 1.0;
  const double c6s = X6 + 2.0 * L * X2 + 1.0;
  return 512.0 / X24 * c1 * c2 * c3 * c4 * c5 * (c6s * c6s);
}

}  // namespace lsreg
