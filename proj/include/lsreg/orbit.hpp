#pragma once

#include "lsreg/ls_map.hpp"
#include "lsreg/state.hpp"

namespace lsreg {

// 2 pi (-2H)^(-3/2), the Kepler period of a bound orbit.
// Throws NonNegativeEnergy for H >= 0.
double period(double H);

// Exact time-t flow on the image side: on the bound branch the regularized
// dynamics is a rigid rotation of (xi, eta/|eta|) at rate |eta|^(-3),
//
//   xi(t)  =  cos(wt) xi0 + sin(wt) eta0 / |eta0|
//   eta(t) = -|eta0| sin(wt) xi0 + cos(wt) eta0,
//
// which preserves |xi|, |eta| and xi.eta identically. Defined on the bound
// branch only (NonNegativeEnergy otherwise).
SphereState delaunay_flow(const SphereState& sp, double t);

// Kepler propagation by conjugation: forward map, rotate for time t, map
// back. No integration error; accuracy is set by the round-trip error of
// the maps. Throws NonNegativeEnergy for unbound states and
// DegenerateDenominator if the flowed image is a collision (radial orbits
// passing through q = 0).
CartesianState propagate(const CartesianState& st, double t);

struct OrbitalElements {
  double a = 0.0;        // semi-major axis
  double e = 0.0;        // eccentricity
  double i = 0.0;        // inclination, [0, pi]
  double Omega = 0.0;    // longitude of ascending node, [0, 2pi)
  double omega = 0.0;    // argument of pericenter, [0, 2pi)
  double tau = 0.0;      // time of pericenter passage relative to the epoch
};

struct DelaunayElements {
  double ell = 0.0;      // mean anomaly, [0, 2pi)
  double g = 0.0;        // = omega
  double h = 0.0;        // = Omega
  double L = 0.0;        // sqrt(a) = 1/sqrt(-2H)
  double G = 0.0;        // |angular momentum|
  double H = 0.0;        // z component of angular momentum
};

struct Anomalies {
  double true_anomaly = 0.0;
  double eccentric_anomaly = 0.0;
  double mean_anomaly = 0.0;
};

struct ElementSet {
  OrbitalElements kepler;
  DelaunayElements delaunay;
  Anomalies anomalies;
};

// Classical elements of a bound state. Degenerate cases take the usual
// conventions: circular orbits (e < 1e-12) set omega = 0 and measure the
// anomalies from the node; equatorial orbits (i < 1e-12) set Omega = 0 and
// measure from the x axis. |H| <= G <= L holds for every state.
// Throws NonNegativeEnergy for H >= 0 and CollisionState at q = 0.
ElementSet elements(const CartesianState& st);

// Adaptive step-doubling RK4 on qdd = -q/|q|^3, with the fifth-order
// Richardson correction applied to accepted steps. Entirely independent of
// the maps above; exists as the cross-check oracle for propagate. tol is
// the per-step acceptance threshold on the doubled-step difference.
CartesianState rk4_reference_propagate(const CartesianState& st, double t_end,
                                       double tol = 1e-12);

}  // namespace lsreg
