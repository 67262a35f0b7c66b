#pragma once

#include <string>
#include <vector>

#include "lsreg/state.hpp"

namespace lsreg {

struct IdentityEntry {
  std::string name;
  double residual = 0.0;
};

struct IdentityReport {
  EnergySign sign = EnergySign::Negative;
  double H = 0.0;
  double tolerance = 0.0;   // base_tol * max(1, |eta|^2)
  std::vector<IdentityEntry> entries;
  double max_residual = 0.0;
  bool pass = false;
};

// Runs the full family of algebraic relations the Ligon-Schaaf map is
// supposed to satisfy at one state: unit norms and orthogonality of (r, s)
// and (xi, eta), the energy carried by |eta|, the rotation angle and radius
// equations, and the three-way expressions for angular momentum, the Laplace
// vector and the rotating-frame energy in (q,p), (r,s) and (xi,eta) form.
// On the unbound branch the norms are Minkowski and a handful of signs flip.
//
// The tolerance is scaled by max(1, |eta|^2) because |eta|^2 = 1/|2H| grows
// without bound near zero energy and the residuals grow with it.
//
// Throws CollisionState at q = 0 and ZeroEnergy for |H| < 1e-14 (the map
// itself refuses |H| < 1e-12, which surfaces as the same error).
IdentityReport verify_identities(const CartesianState& st, double base_tol = 1e-10);

}  // namespace lsreg
