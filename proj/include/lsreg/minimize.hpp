#pragma once

#include <functional>
#include <limits>

#include "lsreg/vec.hpp"

namespace lsreg {

struct NelderMeadResult {
  Vec4 x{};
  double value = 0.0;
  int iterations = 0;
  double diameter = 0.0;
  bool converged = false;
};

// Plain Nelder-Mead in R^4: reflection 1, expansion 2, contraction 1/2,
// shrink 1/2. The initial simplex offsets vertex j by
// step * max(1, |x0_j|) along axis j. Converged when the simplex diameter
// (max distance from the best vertex) drops below diameter_tol.
NelderMeadResult nelder_mead(const std::function<double(const Vec4&)>& f,
                             const Vec4& x0, double step = 0.05,
                             double diameter_tol = 1e-8, int max_iter = 2000);

struct MinimizeResult {
  Vec4 point{};
  double curvature = 0.0;
  double energy = 0.0;
  double rel_dist_heavy = 0.0;
  double constraint_violation = 0.0;  // max(0, rdh-1) + max(0, E-cap) at the result
  bool converged = false;
  int stages = 0;
  int total_iterations = 0;
};

// Minimizes the chain curvature over the feasible set
//   { energy <= energy_cap, rel_dist_heavy <= 1 }
// by a quadratic exterior penalty driven through weights 1e2, 1e3, ..., 1e8,
// each stage restarting Nelder-Mead from the previous optimum. Points where
// the chain errors out cost a large finite value (1e50) so the simplex backs
// away instead of crashing. energy_cap = NaN means the L1 rest energy.
//
// Throws InfeasibleStart when the start violates a constraint (or the chain
// cannot evaluate there at all).
MinimizeResult constrained_minimize(
    double mu, const Vec4& start,
    double energy_cap = std::numeric_limits<double>::quiet_NaN());

}  // namespace lsreg
