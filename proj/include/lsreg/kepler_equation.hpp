#pragma once

#include <cstddef>
#include <vector>

#include "lsreg/errors.hpp"

namespace lsreg {

struct KeplerRoot {
  double phi = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

// Root of phi = x sin(phi) - y cos(phi).
//
// Every root lies in [-r, r] with r = hypot(x, y), because the right hand
// side is bounded by r in absolute value. For x^2 + y^2 <= 1 the equation has
// exactly one root and Newton from phi0 = -y (the small-angle solution) with
// a bisection safeguard always lands on it. For x^2 + y^2 > 1 there can be
// several; the bracket is scanned at resolution r/1024 and the root of
// smallest |phi| is returned, matching the continuous extension from the
// single-root region.
//
// Converged when |step| < 1e-14 and |residual| < 1e-13. Throws NonFinite on
// NaN/inf inputs.
KeplerRoot solve_elliptic(double x, double y);

// Root of phi = x sinh(phi) + y cosh(phi), the unbound-branch analog. No a
// priori bracket exists, so [-b, b] is scanned at 513 points for expanding
// b = 1, 2, 4, ... capped at 50; the sign-change interval whose midpoint is
// nearest 0 seeds a safeguarded Newton iteration. Throws NoRootInBracket if
// the scan never sees a sign change (physical inputs always produce one).
KeplerRoot solve_hyperbolic(double x, double y);

struct GridExtreme {
  double value = 0.0;
  double x = 0.0;
  double y = 0.0;
};

struct GridReport {
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;
  int n = 0;                  // points per axis
  std::vector<double> axis;   // the n sample coordinates, shared by x and y
  std::vector<double> phi;    // row-major, phi[ix * n + iy]
  GridExtreme phi_min, phi_max;
  GridExtreme dphi_dx_min, dphi_dx_max;
  GridExtreme dphi_dy_min, dphi_dy_max;
  GridExtreme grad_mag_max;
  double max_abs_dphi_dx = 0.0;
  std::size_t masked = 0;     // points where the implicit derivative blows up
};

// Tabulates the elliptic root phi(x, y) on a square grid together with its
// gradient. The gradient comes from differentiating the defining equation:
//
//   dphi/dx = sin(phi) / D,  dphi/dy = -cos(phi) / D,
//   D = 1 - x cos(phi) - y sin(phi).
//
// D -> 0 exactly where the root surface folds (x = 1, y = 0 on the unit
// square), so points with |D| <= 1e-9 are masked out of the extrema rather
// than reported as huge finite numbers. A centered difference across the fold
// would see the fold itself, not the surface slope, which is why the implicit
// form is used.
GridReport kepler_function_grid(double lo, double hi, double step);

}  // namespace lsreg
