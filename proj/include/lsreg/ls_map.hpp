#pragma once

#include "lsreg/state.hpp"

namespace lsreg {

// The Ligon-Schaaf regularization, factored into two stages each way.
// Negative energies map onto the unit sphere in R^4 (minus the north pole),
// positive energies onto the unit hyperboloid. The composed maps are exact
// inverses of each other away from collision and zero energy.

// Stage one: build the orthonormal pair
//   r = (|p|^2 |q| - 1,  nu |q| p),   s = (-nu q.p,  -+(q/|q| - (q.p) p))
// with nu = sqrt(-+2H). The spatial part of s flips sign between branches.
RSState ls_frame(const CartesianState& st);

// Stage two: rotate (r, s) by the angle phi = -s0. Circular rotation on the
// bound branch, hyperbolic on the unbound one; eta picks up a 1/nu scale.
SphereState ls_rotate(const RSState& rs, double H);

// Inverse of stage two: recover phi by solving the transcendental angle
// equation (solve_elliptic / solve_hyperbolic on (xi0, eta0/|eta|)), then
// rotate back. Throws DegenerateDenominator when 1 - r0 vanishes, i.e. at
// the image of a collision.
RSState ls_unrotate(const SphereState& sp);

// Inverse of stage one: q and p from (r, s) and the energy.
CartesianState ls_reconstruct(const RSState& rs, double H);

SphereState ls_forward(const CartesianState& st);   // ls_rotate(ls_frame(.))
CartesianState ls_inverse(const SphereState& sp);   // ls_reconstruct(ls_unrotate(.))

// Single-expression forms of the same maps, with the stages multiplied out.
// They must agree with the factored versions to roundoff; the test suite
// holds them to 1e-12.
SphereState ls_forward_direct(const CartesianState& st);
CartesianState ls_inverse_direct(const SphereState& sp);

// Energy read off the image point alone: -1/(2 |eta|^2) on the bound branch,
// +1/(2 (|eta_vec|^2 - eta0^2)) on the unbound one. Throws
// DegenerateDenominator when the relevant norm vanishes.
double sphere_energy(const SphereState& sp);

}  // namespace lsreg
