#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "lsreg/errors.hpp"
#include "lsreg/vec.hpp"

namespace lsreg {

// Finite-difference machinery for scalar fields f : R^4 -> double and the
// tangential curvature of their level sets. The field is a template
// parameter rather than std::function because the grid scan evaluates
// curvature at hundreds of thousands of points and the indirection shows up.

namespace detail {
[[noreturn]] inline void rethrow_probe(const DomainError& e) {
  throw EvaluationFailed(std::string("probe left the domain (") + e.what() + ")");
}
}  // namespace detail

// Centered first differences, step 1e-6 * max(1, |x_i|) per component.
// A probe that throws a DomainError is reported as EvaluationFailed.
template <class F>
Vec4 numeric_gradient(F&& f, const Vec4& x, double base_step = 1e-6) {
  Vec4 g{};
  for (int i = 0; i < 4; ++i) {
    const double h = base_step * std::max(1.0, std::abs(x[i]));
    Vec4 a = x, b = x;
    a[i] += h;
    b[i] -= h;
    try {
      g[i] = (f(a) - f(b)) / (2.0 * h);
    } catch (const DomainError& e) {
      detail::rethrow_probe(e);
    }
  }
  return g;
}

// Centered second differences, step 1e-4 * max(1, |x_i|). The larger step is
// deliberate: second differences lose twice the digits to cancellation, and
// 1e-4 balances truncation against roundoff for O(1) fields. Diagonal
// entries reuse f(x); off-diagonal entries use the four-point stencil. The
// result is symmetric by construction.
template <class F>
Mat4 numeric_hessian(F&& f, const Vec4& x, double base_step = 1e-4) {
  Mat4 hm{};
  double h[4];
  for (int i = 0; i < 4; ++i) h[i] = base_step * std::max(1.0, std::abs(x[i]));
  try {
    const double f0 = f(x);
    for (int i = 0; i < 4; ++i) {
      Vec4 a = x, b = x;
      a[i] += h[i];
      b[i] -= h[i];
      hm[i][i] = (f(a) - 2.0 * f0 + f(b)) / (h[i] * h[i]);
    }
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        Vec4 pp = x, pm = x, mp = x, mm = x;
        pp[i] += h[i]; pp[j] += h[j];
        pm[i] += h[i]; pm[j] -= h[j];
        mp[i] -= h[i]; mp[j] += h[j];
        mm[i] -= h[i]; mm[j] -= h[j];
        const double v = (f(pp) - f(pm) - f(mp) + f(mm)) / (4.0 * h[i] * h[j]);
        hm[i][j] = v;
        hm[j][i] = v;
      }
    }
  } catch (const DomainError& e) {
    detail::rethrow_probe(e);
  }
  return hm;
}

// Orthogonal basis of the hyperplane normal to G, built from the three
// quaternion products iG, jG, kG (written out so no quaternion type is
// needed). Columns are mutually orthogonal with norm |G|; B^T B = |G|^2 I.
// Throws ZeroGradient for |G| <= 1e-14.
Mat43 tangential_basis(const Vec4& G);

// det(B^T H B) for the basis above. Factored out so closed-form Hessians can
// reuse it.
double tangential_determinant(const Vec4& G, const Mat4& hess);

// Curvature-like invariant of the level set of f through x: the determinant
// of the Hessian restricted to the tangent space of the level set. Positive
// on sets that bound locally convex regions. Scales like |G|^6 times the
// principal curvatures, which is what makes the finite-difference value
// track the closed forms in *relative* terms even when the determinant is
// tiny. Throws ZeroGradient when |grad f| <= 1e-12.
template <class F>
double tangential_curvature(F&& f, const Vec4& x,
                            double grad_step = 1e-6, double hess_step = 1e-4) {
  const Vec4 g = numeric_gradient(f, x, grad_step);
  if (norm(g) <= 1e-12) {
    throw ZeroGradient("gradient norm below 1e-12, level set is singular here");
  }
  const Mat4 hm = numeric_hessian(f, x, hess_step);
  return tangential_determinant(g, hm);
}

// One step of Richardson extrapolation (ratio 2) on both the gradient and
// the Hessian before assembling the determinant: D = (4 D(h/2) - D(h)) / 3
// entrywise. Buys roughly two orders of magnitude at double the evaluation
// count.
template <class F>
double tangential_curvature_richardson(F&& f, const Vec4& x,
                                       double grad_step = 1e-6,
                                       double hess_step = 1e-4) {
  const Vec4 g1 = numeric_gradient(f, x, grad_step);
  const Vec4 g2 = numeric_gradient(f, x, 0.5 * grad_step);
  Vec4 g{};
  for (int i = 0; i < 4; ++i) g[i] = (4.0 * g2[i] - g1[i]) / 3.0;
  if (norm(g) <= 1e-12) {
    throw ZeroGradient("gradient norm below 1e-12, level set is singular here");
  }
  const Mat4 h1 = numeric_hessian(f, x, hess_step);
  const Mat4 h2 = numeric_hessian(f, x, 0.5 * hess_step);
  Mat4 hm{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) hm[i][j] = (4.0 * h2[i][j] - h1[i][j]) / 3.0;
  return tangential_determinant(g, hm);
}

// Closed-form tangential curvature of the Kepler energy level set through
// the point pt = (w1, w2, z1, z2), with X = |pt|^2:
//   512 / X^24.
// Throws ZeroPoint at pt = 0.
double kepler_curvature_closed(const Vec4& pt);

// Closed form for the rotating-frame energy, X as above and
// L = 2 (w1 z2 - w2 z1):
//   (512 / X^24) (X - 1)(X + 1)(X^2 + X + 1)(X^2 - X + 1)
//                (-6 L^2 X^4 + L X^8 - L X^2 + 7 X^6 - 1)
//                (X^6 + 2 L X^2 + 1)^2.
double rotating_curvature_closed(const Vec4& pt);

}  // namespace lsreg
