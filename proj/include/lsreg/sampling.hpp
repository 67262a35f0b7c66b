#pragma once

#include <random>

#include "lsreg/projections.hpp"
#include "lsreg/state.hpp"

namespace lsreg {

// Rejection samplers for the random sweeps used by the verification suites
// and tests. All three draw from fixed boxes (q in [0.1, 3]^3, p in
// [-1.5, 1.5]^3, chain points in [-box, box]^4) and reject what the maps
// cannot handle:
//
//  - bound states keep H <= h_max; the default -1e-2 keeps |eta|^2 <= 50 so
//    raw identity residuals stay meaningful,
//  - unbound states keep H >= h_min and the rotation angle
//    |phi| = sqrt(2H) |q.p| <= phi_max; the hyperbolic image grows like
//    e^|phi| while its Minkowski norm stays O(1), so round-trip accuracy
//    degrades by roughly a digit per unit of |phi| and sweeps cap it at 3,
//  - chain points keep |w| >= w_min and |z| >= z_min away from the squaring
//    singularities, and retry on any DomainError from the chain itself.
class StateSampler {
 public:
  explicit StateSampler(unsigned seed) : rng_(seed) {}

  CartesianState bound(double h_max = -1e-2);
  CartesianState unbound(double h_min = 1e-2, double phi_max = 3.0);
  ComplexPair chain_point(double box = 1.2, double w_min = 0.05,
                          double z_min = 0.15);

  std::mt19937_64& rng() { return rng_; }

 private:
  double uniform(double lo, double hi);
  std::mt19937_64 rng_;
};

}  // namespace lsreg
