#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lsreg/projections.hpp"

namespace lsreg {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Residuals of the algebraic relations the composed chain
// (w, z) -> (x, y) -> (xi, eta) must satisfy: unit sphere, orthogonality,
// the two norm identities |eta| = ((|x|^2+1)/2)|y| = |w|^2 + |z|^2, the
// angular-momentum identity xi1 eta2 - xi2 eta1 = x1 y2 - x2 y1
// = -2 (w1 z2 - w2 z1), and the Kepler and rotating energies written in all
// available coordinate systems (including the recovered (q, p) state).
// Returns the largest residual across all of them.
double chain_identity_residual(const ComplexPair& cp);

// The full invariant sweep behind the `verify` CLI subcommand: round trips,
// identity families on both branches, factored versus direct forms,
// projection round trips, chain identities, the mu = 0 pipeline collapse,
// curvature against the closed forms, solver antisymmetry, flow
// conservation, propagation against the RK4 oracle, element consistency and
// L1 monotonicity. Runs in a couple of seconds.
std::vector<SuiteResult> run_verification(unsigned seed = 19937);

}  // namespace lsreg
