#include "lsreg/hamiltonians.hpp"

#include <cmath>
#include <stdexcept>

#include "lsreg/ls_map.hpp"

namespace lsreg {

double regularized_kepler_energy(const ComplexPair& cp) {
  const double X = norm_sq(cp.w) + norm_sq(cp.z);
  if (X <= 1e-28) {
    throw ZeroPoint("w = z = 0");
  }
  return -0.5 / (X * X);
}

double regularized_rotating_energy(const ComplexPair& cp) {
  return regularized_kepler_energy(cp) +
         2.0 * (cp.w[0] * cp.z[1] - cp.w[1] * cp.z[0]);
}

double cr3bp_energy(const Vec2& q, const Vec2& p, double mu) {
  if (!(mu >= 0.0 && mu <= 0.5)) {
    throw std::invalid_argument("mass ratio must lie in [0, 0.5]");
  }
  const Vec2 heavy{-mu, 0.0};
  const Vec2 light{1.0 - mu, 0.0};
  const double de = norm(q - heavy);
  const double dm = norm(q - light);
  // at mu = 0 there is no light primary, so (1, 0) is an ordinary point
  if (de <= 1e-14 || (mu > 0.0 && dm <= 1e-14)) {
    throw PrimaryCollision("state on top of a primary");
  }
  const double light_term = (mu > 0.0) ? mu / dm : 0.0;
  return 0.5 * norm_sq(p) - light_term - (1.0 - mu) / de +
         (p[0] * q[1] - p[1] * q[0]);
}

LagrangePointL1 locate_L1(double mu) {
  if (!(mu >= 0.0 && mu <= 0.5)) {
    throw std::invalid_argument("mass ratio must lie in [0, 0.5]");
  }
  if (mu == 0.0) {
    // no light primary; the critical circle of the rotating Kepler problem
    // passes through (1, 0) with rest energy -3/2
    return {{1.0, 0.0}, -1.5, 1.0};
  }
  // derivative of the rest energy along the axis between the primaries;
  // runs from +inf to -inf and is strictly decreasing, so exactly one zero
  auto dE = [mu](double x) {
    const double a = x + mu;          // distance to the heavy primary
    const double b = (1.0 - mu) - x;  // distance to the light one
    return -x + (1.0 - mu) / (a * a) - mu / (b * b);
  };
  const double lo_edge = -mu + 1e-6;
  const double hi_edge = (1.0 - mu) - 1e-6;
  const int nscan = 10000;
  const double step = (hi_edge - lo_edge) / nscan;
  double lo = lo_edge, hi = hi_edge;
  double a = lo_edge, fa = dE(a);
  bool found = false;
  for (int i = 1; i <= nscan; ++i) {
    const double b = lo_edge + i * step;
    const double fb = dE(b);
    if (fa * fb <= 0.0) {
      lo = a;
      hi = b;
      found = true;
      break;
    }
    a = b;
    fa = fb;
  }
  if (!found) {
    // cannot happen for mu in (0, 0.5]; guard against silent nonsense anyway
    throw std::logic_error("no sign change in the rest-energy derivative");
  }
  double flo = dE(lo);
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = dE(mid);
    if (flo * fm <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  const double pos = 0.5 * (lo + hi);
  LagrangePointL1 l1;
  l1.position = {pos, 0.0};
  l1.dist_heavy = pos + mu;
  l1.energy = -0.5 * pos * pos - mu / ((1.0 - mu) - pos) - (1.0 - mu) / (pos + mu);
  return l1;
}

ChainEval cr3bp_chain_energy(const ComplexPair& cp, double mu, double dist_heavy) {
  const PlanarCotangent pc = levi_civita_forward(cp);
  const SphereState sp = stereo_forward(pc);
  const CartesianState st = ls_inverse(sp);
  const Vec2 q_reg{st.q[0], st.q[1]};
  ChainEval ce;
  ce.q = shift_heavy_primary(q_reg, mu, ShiftDirection::RegToFrame);
  ce.p = {st.p[0], st.p[1]};
  ce.energy = cr3bp_energy(ce.q, ce.p, mu);
  // q - heavy = q_reg exactly, so measure the distance before the shift and
  // avoid the cancellation
  ce.rel_dist_heavy = norm(q_reg) / dist_heavy;
  return ce;
}

ChainEval cr3bp_chain_energy(const ComplexPair& cp, double mu) {
  return cr3bp_chain_energy(cp, mu, locate_L1(mu).dist_heavy);
}

double delaunay_energy(const SphereState& sp) { return sphere_energy(sp); }

}  // namespace lsreg
