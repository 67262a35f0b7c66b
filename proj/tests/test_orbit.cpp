#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "lsreg/orbit.hpp"
#include "lsreg/sampling.hpp"

using namespace lsreg;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// distance between angles as points on the circle
double angle_gap(double a, double b) {
  double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

const CartesianState kCircular{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};

}  // namespace

TEST_CASE("bound period") {
  CHECK(period(-0.5) == doctest::Approx(kTwoPi).epsilon(1e-14));
  CHECK(period(-2.0) == doctest::Approx(kTwoPi / 8.0).epsilon(1e-14));
  CHECK_THROWS_AS(period(0.0), NonNegativeEnergy);
  CHECK_THROWS_AS(period(0.5), NonNegativeEnergy);
}

TEST_CASE("image flow is a rigid rotation") {
  StateSampler sampler(61);
  for (int i = 0; i < 50; ++i) {
    const SphereState sp = ls_forward(sampler.bound());
    const SphereState moved = delaunay_flow(sp, 0.7);
    CHECK(std::abs(norm(moved.xi) - norm(sp.xi)) <= 1e-12);
    CHECK(std::abs(norm(moved.eta) - norm(sp.eta)) <= 1e-12);
    CHECK(std::abs(dot(moved.xi, moved.eta) - dot(sp.xi, sp.eta)) <= 1e-12);
  }

  // t = 0 is the identity, exactly
  const SphereState sp = ls_forward(kCircular);
  const SphereState still = delaunay_flow(sp, 0.0);
  CHECK(still.xi == sp.xi);
  CHECK(still.eta == sp.eta);

  // a quarter turn of the image carries xi onto the eta direction
  const double en = norm(sp.eta);
  const double rate = 1.0 / (en * en * en);
  const SphereState q2 = delaunay_flow(sp, (kTwoPi / 4.0) / rate);
  for (int c = 0; c < 4; ++c) {
    CHECK(q2.xi[c] == doctest::Approx(sp.eta[c] / en).epsilon(1e-12));
  }

  // the rotation is defined on the bound branch only
  const SphereState unbound = ls_forward(sampler.unbound());
  CHECK_THROWS_AS(delaunay_flow(unbound, 0.1), NonNegativeEnergy);
}

TEST_CASE("circular orbit propagates as a unit-rate circle") {
  const double T = period(kCircular.hamiltonian());
  CHECK(T == doctest::Approx(kTwoPi).epsilon(1e-14));

  const CartesianState quarter = propagate(kCircular, T / 4.0);
  CHECK(std::abs(quarter.q[0]) <= 1e-9);
  CHECK(quarter.q[1] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(quarter.q[2]) <= 1e-9);
  CHECK(quarter.p[0] == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(std::abs(quarter.p[1]) <= 1e-9);

  const CartesianState full = propagate(kCircular, T);
  CHECK(max_abs_diff(full.q, kCircular.q) <= 1e-10);
  CHECK(max_abs_diff(full.p, kCircular.p) <= 1e-10);

  CHECK_THROWS_AS(propagate({{0.4, 0.8, -0.3}, {1.2, 0.3, 0.9}}, 1.0),
                  NonNegativeEnergy);
}

TEST_CASE("elements of the circular equatorial orbit") {
  const ElementSet es = elements(kCircular);
  CHECK(es.kepler.a == 1.0);
  CHECK(es.kepler.e == 0.0);
  CHECK(es.kepler.i == 0.0);
  CHECK(es.kepler.Omega == 0.0);
  CHECK(es.kepler.omega == 0.0);
  CHECK(es.kepler.tau == 0.0);
  CHECK(es.delaunay.ell == 0.0);
  CHECK(es.delaunay.L == 1.0);
  CHECK(es.delaunay.G == 1.0);
  CHECK(es.delaunay.H == 1.0);
  CHECK(es.anomalies.true_anomaly == 0.0);
  CHECK(es.anomalies.eccentric_anomaly == 0.0);
  CHECK(es.anomalies.mean_anomaly == 0.0);

  CHECK_THROWS_AS(elements({{0.4, 0.8, -0.3}, {1.2, 0.3, 0.9}}),
                  NonNegativeEnergy);
  CHECK_THROWS_AS(elements({{0.0, 0.0, 0.0}, {0.1, 0.2, 0.3}}),
                  CollisionState);
}

TEST_CASE("element relations on random bound states") {
  StateSampler sampler(62);
  for (int i = 0; i < 200; ++i) {
    const CartesianState st = sampler.bound();
    const double H = st.hamiltonian();
    const ElementSet es = elements(st);
    const OrbitalElements& k = es.kepler;
    const DelaunayElements& d = es.delaunay;

    CHECK(k.a == doctest::Approx(-1.0 / (2.0 * H)).epsilon(1e-12));
    // e^2 = 1 + 2 H G^2
    CHECK(std::abs(k.e * k.e - (1.0 + 2.0 * H * d.G * d.G)) <= 1e-10);
    CHECK(d.L == doctest::Approx(1.0 / std::sqrt(-2.0 * H)).epsilon(1e-12));
    CHECK(std::abs(d.H) <= d.G + 1e-12);
    CHECK(d.G <= d.L + 1e-12);
    CHECK(d.g == k.omega);
    CHECK(d.h == k.Omega);
    CHECK(d.ell == es.anomalies.mean_anomaly);

    // Kepler's equation links the anomalies
    const double Ea = es.anomalies.eccentric_anomaly;
    CHECK(angle_gap(es.anomalies.mean_anomaly, Ea - k.e * std::sin(Ea)) <=
          1e-10);
    // and the conversion to the true anomaly
    if (k.e > 1e-8) {
      const double cosv = (std::cos(Ea) - k.e) / (1.0 - k.e * std::cos(Ea));
      CHECK(std::cos(es.anomalies.true_anomaly) ==
            doctest::Approx(cosv).epsilon(1e-8));
    }
    // pericenter passage sits within one period before the epoch
    const double T = period(H);
    CHECK(k.tau == doctest::Approx(-es.anomalies.mean_anomaly * T / kTwoPi)
                       .epsilon(1e-10));
    CHECK(k.tau <= 0.0);
    CHECK(k.tau > -T);
  }
}

TEST_CASE("elements ride along the flow unchanged") {
  StateSampler sampler(63);
  int tested = 0;
  while (tested < 5) {
    const CartesianState st = sampler.bound();
    const ElementSet e0 = elements(st);
    // guard the angle variables away from their coordinate singularities
    if (e0.kepler.e < 0.01 || e0.kepler.e > 0.9) continue;
    if (std::sin(e0.kepler.i) < 0.05) continue;
    if (e0.delaunay.G < 0.1) continue;
    ++tested;

    const double T = period(st.hamiltonian());
    for (int j = 1; j <= 4; ++j) {
      const double t = j * T / 4.0;
      const ElementSet et = elements(propagate(st, t));
      CHECK(std::abs(et.kepler.a - e0.kepler.a) <= 1e-10 * e0.kepler.a);
      CHECK(std::abs(et.kepler.e - e0.kepler.e) <= 1e-10);
      CHECK(std::abs(et.kepler.i - e0.kepler.i) <= 1e-10);
      CHECK(angle_gap(et.kepler.Omega, e0.kepler.Omega) <= 1e-10);
      CHECK(angle_gap(et.kepler.omega, e0.kepler.omega) <= 1e-10);
      CHECK(std::abs(et.delaunay.L - e0.delaunay.L) <= 1e-10);
      CHECK(std::abs(et.delaunay.G - e0.delaunay.G) <= 1e-10);
      CHECK(std::abs(et.delaunay.H - e0.delaunay.H) <= 1e-10);
      // the mean anomaly advances uniformly
      CHECK(angle_gap(et.delaunay.ell,
                      e0.delaunay.ell + kTwoPi * t / T) <= 1e-8);
    }
  }
}

TEST_CASE("reference integrator") {
  // t = 0 returns the state untouched
  const CartesianState same = rk4_reference_propagate(kCircular, 0.0);
  CHECK(same.q == kCircular.q);
  CHECK(same.p == kCircular.p);

  // quarter circle forward and backward
  const CartesianState fw = rk4_reference_propagate(kCircular, kTwoPi / 4.0);
  CHECK(std::abs(fw.q[0]) <= 1e-9);
  CHECK(fw.q[1] == doctest::Approx(1.0).epsilon(1e-9));
  const CartesianState bw = rk4_reference_propagate(kCircular, -kTwoPi / 4.0);
  CHECK(bw.q[1] == doctest::Approx(-1.0).epsilon(1e-9));

  // energy drift over several orbits stays at the step tolerance
  const CartesianState st{{1.1, 0.2, 0.3}, {0.1, 0.6, -0.2}};
  const CartesianState far = rk4_reference_propagate(st, 12.0);
  CHECK(std::abs(far.hamiltonian() - st.hamiltonian()) <= 1e-10);
}

TEST_CASE("conjugated propagation matches direct integration") {
  const CartesianState st{{1.1, 0.2, 0.3}, {0.1, 0.6, -0.2}};
  for (const double t : {0.5, 2.0, 7.0}) {
    const CartesianState a = propagate(st, t);
    const CartesianState b = rk4_reference_propagate(st, t);
    CHECK(max_abs_diff(a.q, b.q) <= 1e-8);
    CHECK(max_abs_diff(a.p, b.p) <= 1e-8);
  }
}
