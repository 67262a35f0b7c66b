#include "lsreg/minimize.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "lsreg/curvature.hpp"
#include "lsreg/errors.hpp"
#include "lsreg/hamiltonians.hpp"

namespace lsreg {

NelderMeadResult nelder_mead(const std::function<double(const Vec4&)>& f,
                             const Vec4& x0, double step, double diameter_tol,
                             int max_iter) {
  constexpr int n = 4;
  std::array<Vec4, n + 1> xs;
  std::array<double, n + 1> fs;
  xs[0] = x0;
  for (int j = 1; j <= n; ++j) {
    xs[j] = x0;
    xs[j][j - 1] += step * std::max(1.0, std::abs(x0[j - 1]));
  }
  for (int j = 0; j <= n; ++j) fs[j] = f(xs[j]);

  auto order = [&] {
    // 5 vertices, insertion sort is plenty
    for (int i = 1; i <= n; ++i) {
      const Vec4 x = xs[i];
      const double v = fs[i];
      int j = i - 1;
      while (j >= 0 && fs[j] > v) {
        xs[j + 1] = xs[j];
        fs[j + 1] = fs[j];
        --j;
      }
      xs[j + 1] = x;
      fs[j + 1] = v;
    }
  };

  NelderMeadResult res;
  int iter = 0;
  for (; iter < max_iter; ++iter) {
    order();
    double diam = 0.0;
    for (int j = 1; j <= n; ++j) diam = std::max(diam, norm(xs[j] - xs[0]));
    res.diameter = diam;
    if (diam < diameter_tol) {
      res.converged = true;
      break;
    }

    Vec4 centroid{};
    for (int j = 0; j < n; ++j) centroid = centroid + xs[j];
    centroid = centroid / n;

    const Vec4 xr = centroid + (centroid - xs[n]);  // reflection
    const double fr = f(xr);
    if (fr < fs[0]) {
      const Vec4 xe = centroid + 2.0 * (centroid - xs[n]);  // expansion
      const double fe = f(xe);
      if (fe < fr) {
        xs[n] = xe;
        fs[n] = fe;
      } else {
        xs[n] = xr;
        fs[n] = fr;
      }
    } else if (fr < fs[n - 1]) {
      xs[n] = xr;
      fs[n] = fr;
    } else {
      // contraction, outside if the reflected point improved on the worst
      Vec4 xc;
      if (fr < fs[n]) {
        xc = centroid + 0.5 * (xr - centroid);
      } else {
        xc = centroid + 0.5 * (xs[n] - centroid);
      }
      const double fc = f(xc);
      if (fc < std::min(fr, fs[n])) {
        xs[n] = xc;
        fs[n] = fc;
      } else {
        for (int j = 1; j <= n; ++j) {  // shrink toward the best vertex
          xs[j] = xs[0] + 0.5 * (xs[j] - xs[0]);
          fs[j] = f(xs[j]);
        }
      }
    }
  }
  order();
  res.x = xs[0];
  res.value = fs[0];
  res.iterations = iter;
  return res;
}

MinimizeResult constrained_minimize(double mu, const Vec4& start,
                                    double energy_cap) {
  const LagrangePointL1 l1 = locate_L1(mu);
  const double cap = std::isnan(energy_cap) ? l1.energy : energy_cap;
  const double dist_heavy = l1.dist_heavy;

  auto chain = [&](const Vec4& u) {
    return cr3bp_chain_energy(ComplexPair{{u[0], u[1]}, {u[2], u[3]}}, mu,
                              dist_heavy);
  };
  auto field = [&](const Vec4& u) { return chain(u).energy; };

  ChainEval ce0;
  try {
    ce0 = chain(start);
  } catch (const DomainError& e) {
    throw InfeasibleStart(std::string("chain fails at the start point (") +
                          e.what() + ")");
  }
  if (ce0.rel_dist_heavy > 1.0 || ce0.energy > cap) {
    throw InfeasibleStart("start point violates the constraints");
  }

  MinimizeResult res;
  Vec4 x = start;
  bool converged = false;
  // exterior penalty; each stage tightens the wall and restarts from the
  // previous optimum
  for (double weight = 1e2; weight <= 1e8; weight *= 10.0) {
    auto penalized = [&, weight](const Vec4& u) -> double {
      try {
        const ChainEval ce = chain(u);
        const double curv = tangential_curvature(field, u);
        const double vr = std::max(0.0, ce.rel_dist_heavy - 1.0);
        const double ve = std::max(0.0, ce.energy - cap);
        return curv + weight * (vr * vr + ve * ve);
      } catch (const DomainError&) {
        return 1e50;  // large but finite so the simplex backs off
      }
    };
    const NelderMeadResult nm = nelder_mead(penalized, x);
    x = nm.x;
    converged = nm.converged;
    res.total_iterations += nm.iterations;
    ++res.stages;
  }

  res.point = x;
  res.converged = converged;
  try {
    const ChainEval ce = chain(x);
    res.curvature = tangential_curvature(field, x);
    res.energy = ce.energy;
    res.rel_dist_heavy = ce.rel_dist_heavy;
    res.constraint_violation =
        std::max(0.0, ce.rel_dist_heavy - 1.0) + std::max(0.0, ce.energy - cap);
  } catch (const DomainError&) {
    res.converged = false;
    res.curvature = std::numeric_limits<double>::quiet_NaN();
    res.energy = std::numeric_limits<double>::quiet_NaN();
    res.rel_dist_heavy = std::numeric_limits<double>::quiet_NaN();
  }
  return res;
}

}  // namespace lsreg
