#pragma once

#include "lsreg/state.hpp"

namespace lsreg {

// Planar cotangent point: x in the plane, y the conjugate variable.
struct PlanarCotangent {
  Vec2 x{};
  Vec2 y{};
};

// Point in the squared (Levi-Civita) coordinates, both entries read as
// complex numbers w = w[0] + i w[1], z = z[0] + i z[1].
struct ComplexPair {
  Vec2 w{};
  Vec2 z{};
};

enum class ShiftDirection { RegToFrame, FrameToReg };

// Inverse stereographic projection from the plane to the unit sphere in R^4
// (third spatial component identically zero), lifted to cotangent vectors:
//
//   xi  = ((rho - 1)/(rho + 1),  x / A,  0),   rho = |x|^2, A = (rho + 1)/2
//   eta = (x.y,  A y - (x.y) x,  0)
//
// The image satisfies |xi| = 1, xi.eta = 0 and |eta| = A |y| exactly.
SphereState stereo_forward(const PlanarCotangent& pc);

// Chart back down from the sphere. Only components 0..2 participate; the
// fourth is ignored so Ligon-Schaaf images of planar states can be passed
// straight in. Throws NorthPole when xi0 >= 1 - 1e-14.
PlanarCotangent stereo_inverse(const SphereState& sp);

// Squaring map between the doubled coordinates (w, z) and the planar point
// (x, y):
//
//   x = conj(w) / z,   y = 2 conj(z)^2.
//
// The conjugated quotient is what keeps the composed chain canonical with
// the rotation term +2 (w1 z2 - w2 z1); the plain quotient w/z flips the
// sign of the angular part and the rotating-frame energy identity fails by
// an O(1) amount. Throws ZeroZ for |z| <= 1e-14.
PlanarCotangent levi_civita_forward(const ComplexPair& cp);

// Inverse on the principal branch: conj(z) = sqrt(y/2), w = conj(x) conj(z).
// The map is 2:1, so inverse-of-forward returns either (w, z) or (-w, -z);
// both square back to the same planar point. Throws ZeroY for |y| <= 1e-14.
ComplexPair levi_civita_inverse(const PlanarCotangent& pc);

// Translation between the regularization-centered frame (heavy primary at
// the origin) and the rotating frame of the restricted problem (heavy
// primary at (-mu, 0)): RegToFrame subtracts mu from the first coordinate,
// FrameToReg adds it.
Vec2 shift_heavy_primary(const Vec2& q, double mu, ShiftDirection dir);

}  // namespace lsreg
