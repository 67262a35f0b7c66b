#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "lsreg/hamiltonians.hpp"
#include "lsreg/ls_map.hpp"
#include "lsreg/sampling.hpp"

using namespace lsreg;

namespace {
const ComplexPair kProbe{{0.8, 0.1}, {0.5, -0.2}};
}

TEST_CASE("kepler energy in squared coordinates") {
  // |w|^2 + |z|^2 = 0.94, so -0.5 / 0.94^2
  CHECK(regularized_kepler_energy(kProbe) ==
        doctest::Approx(-0.5658669081032139).epsilon(1e-14));
  CHECK_THROWS_AS(regularized_kepler_energy({{0.0, 0.0}, {0.0, 0.0}}),
                  ZeroPoint);
}

TEST_CASE("rotating energy adds the exact angular term") {
  CHECK(regularized_rotating_energy(kProbe) ==
        doctest::Approx(-0.985866908103214).epsilon(1e-14));
  // the added term is 2 (w1 z2 - w2 z1) = -0.42 on this point
  CHECK(regularized_rotating_energy(kProbe) -
            regularized_kepler_energy(kProbe) ==
        doctest::Approx(-0.42).epsilon(1e-14));
  CHECK_THROWS_AS(regularized_rotating_energy({{0.0, 0.0}, {0.0, 0.0}}),
                  ZeroPoint);
}

TEST_CASE("restricted three-body energy at a pinned state") {
  CHECK(cr3bp_energy({0.3, -0.2}, {0.4, 1.1}, 0.2) ==
        doctest::Approx(-1.5819533817705187).epsilon(1e-14));
  CHECK_THROWS_AS(cr3bp_energy({0.3, -0.2}, {0.4, 1.1}, -0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(cr3bp_energy({0.3, -0.2}, {0.4, 1.1}, 0.6),
                  std::invalid_argument);
}

TEST_CASE("collisions with the primaries are refused") {
  CHECK_THROWS_AS(cr3bp_energy({-0.2, 0.0}, {0.1, 0.1}, 0.2),
                  PrimaryCollision);
  CHECK_THROWS_AS(cr3bp_energy({0.8, 0.0}, {0.1, 0.1}, 0.2),
                  PrimaryCollision);
  CHECK_THROWS_AS(cr3bp_energy({0.0, 0.0}, {0.1, 0.1}, 0.0),
                  PrimaryCollision);
  // at mu = 0 there is no light primary, so (1, 0) is a regular point
  CHECK(cr3bp_energy({1.0, 0.0}, {0.0, 0.0}, 0.0) == -1.0);
}

TEST_CASE("collinear point, degenerate and symmetric mass ratios") {
  const LagrangePointL1 free = locate_L1(0.0);
  CHECK(free.position[0] == 1.0);
  CHECK(free.position[1] == 0.0);
  CHECK(free.energy == -1.5);
  CHECK(free.dist_heavy == 1.0);

  const LagrangePointL1 even = locate_L1(0.5);
  CHECK(std::abs(even.position[0]) <= 1e-9);  // midpoint by symmetry
  CHECK(even.position[1] == 0.0);
  CHECK(even.dist_heavy == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(even.energy == doctest::Approx(-2.0).epsilon(1e-12));

  CHECK_THROWS_AS(locate_L1(-1e-9), std::invalid_argument);
  CHECK_THROWS_AS(locate_L1(0.5000001), std::invalid_argument);
}

TEST_CASE("collinear point at generic mass ratios") {
  const LagrangePointL1 a = locate_L1(0.1);
  CHECK(a.position[0] == doctest::Approx(0.6090351100232023).epsilon(1e-12));
  CHECK(a.energy == doctest::Approx(-1.7984766149399474).epsilon(1e-12));
  CHECK(a.dist_heavy == doctest::Approx(a.position[0] + 0.1).epsilon(1e-15));

  const LagrangePointL1 b = locate_L1(0.01);
  CHECK(b.position[0] == doctest::Approx(0.848078712976095).epsilon(1e-12));
  CHECK(b.dist_heavy ==
        doctest::Approx(0.8580787129760951).epsilon(1e-12));
  CHECK(b.energy == doctest::Approx(-1.5838206545877578).epsilon(1e-12));
}

TEST_CASE("the barrier energy falls as the light primary grows") {
  const double mus[] = {0.0, 0.01, 0.1, 0.3, 0.5};
  double prev = locate_L1(mus[0]).energy;
  for (int i = 1; i < 5; ++i) {
    const double cur = locate_L1(mus[i]).energy;
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("chain evaluation at a pinned point") {
  const ChainEval ce = cr3bp_chain_energy(kProbe, 0.01);
  CHECK(ce.energy == doctest::Approx(-0.983049916230255).epsilon(1e-12));
  CHECK(ce.q[0] == doctest::Approx(-1.1147549244269752).epsilon(1e-12));
  CHECK(ce.q[1] == doctest::Approx(-0.4187254371311767).epsilon(1e-12));
  CHECK(ce.p[0] == doctest::Approx(0.7425347366556786).epsilon(1e-10));
  CHECK(ce.p[1] == doctest::Approx(-0.09873847619674334).epsilon(1e-10));
  CHECK(ce.rel_dist_heavy ==
        doctest::Approx(1.3768502710166957).epsilon(1e-12));

  // the relative distance really is |q - heavy| / |L1 - heavy|
  const Vec2 heavy{-0.01, 0.0};
  const double dist = locate_L1(0.01).dist_heavy;
  CHECK(ce.rel_dist_heavy ==
        doctest::Approx(norm(ce.q - heavy) / dist).epsilon(1e-12));
}

TEST_CASE("precomputed-distance overload matches the convenience form") {
  StateSampler sampler(41);
  const double dist = locate_L1(0.01).dist_heavy;
  for (int i = 0; i < 50; ++i) {
    const ComplexPair cp = sampler.chain_point();
    const ChainEval cold = cr3bp_chain_energy(cp, 0.01);
    const ChainEval hot = cr3bp_chain_energy(cp, 0.01, dist);
    CHECK(cold.energy == hot.energy);
    CHECK(cold.q == hot.q);
    CHECK(cold.p == hot.p);
    CHECK(cold.rel_dist_heavy == hot.rel_dist_heavy);
  }
}

TEST_CASE("massless chain collapses to the rotating Kepler energy") {
  StateSampler sampler(42);
  for (int i = 0; i < 100; ++i) {
    const ComplexPair cp = sampler.chain_point();
    const ChainEval ce = cr3bp_chain_energy(cp, 0.0);
    CHECK(std::abs(ce.energy - regularized_rotating_energy(cp)) <= 1e-10);
    // dist_heavy is 1 at mu = 0, so the ratio is just |q|
    CHECK(ce.rel_dist_heavy == doctest::Approx(norm(ce.q)).epsilon(1e-12));
  }
}

TEST_CASE("chain errors propagate out") {
  CHECK_THROWS_AS(cr3bp_chain_energy({{0.5, 0.5}, {0.0, 0.0}}, 0.01), ZeroZ);
}

TEST_CASE("image energy read from eta matches the state energy") {
  StateSampler sampler(43);
  for (int i = 0; i < 100; ++i) {
    const CartesianState st = sampler.bound();
    const SphereState sp = ls_forward(st);
    CHECK(delaunay_energy(sp) == sphere_energy(sp));
    CHECK(delaunay_energy(sp) ==
          doctest::Approx(st.hamiltonian()).epsilon(1e-9));
  }
}
