#pragma once

#include "lsreg/projections.hpp"
#include "lsreg/state.hpp"

namespace lsreg {

// Kepler energy expressed in the squared coordinates:
//   -1 / (2 (|w|^2 + |z|^2)^2).
// Throws ZeroPoint at w = z = 0.
double regularized_kepler_energy(const ComplexPair& cp);

// Same plus the rotating-frame term, which in these coordinates is exactly
// 2 (w1 z2 - w2 z1):
//   regularized_kepler_energy + 2 (w1 z2 - w2 z1).
double regularized_rotating_energy(const ComplexPair& cp);

// Planar restricted three-body Hamiltonian in the rotating frame, mass ratio
// mu in [0, 1/2]. Heavy primary (mass 1 - mu) at (-mu, 0), light primary
// (mass mu) at (1 - mu, 0):
//
//   |p|^2/2 - mu/|q - m| - (1 - mu)/|q - e| + (p1 q2 - p2 q1).
//
// Throws PrimaryCollision when q is within 1e-14 of either primary.
double cr3bp_energy(const Vec2& q, const Vec2& p, double mu);

struct ChainEval {
  double energy = 0.0;       // cr3bp_energy at the recovered state
  Vec2 q{};                  // rotating-frame position
  Vec2 p{};                  // rotating-frame momentum
  double rel_dist_heavy = 0.0;  // |q - heavy primary| / |L1 - heavy primary|
};

struct LagrangePointL1 {
  Vec2 position{};     // rotating-frame coordinates, on the x axis
  double energy = 0.0; // rest energy at the point (the natural scan cap)
  double dist_heavy = 0.0;  // distance from the heavy primary
};

// Collinear equilibrium between the primaries. The rest-energy derivative
// has exactly one zero on the open segment (it runs from +inf at the heavy
// primary to -inf at the light one and is strictly monotone); a coarse scan
// brackets it and bisection polishes to 1e-15. mu = 0 degenerates to the
// circular rest orbit through (1, 0) with energy -3/2 and is special-cased.
LagrangePointL1 locate_L1(double mu);

// Full chain from squared coordinates to the rotating frame:
//   (w, z) -> squaring map -> stereographic lift -> Ligon-Schaaf inverse
//          -> shift to the rotating frame -> cr3bp_energy.
// Also reports the distance to the heavy primary relative to L1, the natural
// yardstick for "how deep inside the Hill region" a point sits. Any error
// raised along the chain propagates out.
ChainEval cr3bp_chain_energy(const ComplexPair& cp, double mu);

// Same, with locate_L1(mu).dist_heavy precomputed by the caller. The grid
// scan calls this millions of times; locating L1 once outside the loop is
// the difference between seconds and minutes.
ChainEval cr3bp_chain_energy(const ComplexPair& cp, double mu, double dist_heavy);

// Energy of an image point read from eta alone; equals sphere_energy.
double delaunay_energy(const SphereState& sp);

}  // namespace lsreg
