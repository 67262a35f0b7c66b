#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "lsreg/ls_map.hpp"
#include "lsreg/sampling.hpp"

using namespace lsreg;

namespace {
double state_diff(const CartesianState& a, const CartesianState& b) {
  return std::max(max_abs_diff(a.q, b.q), max_abs_diff(a.p, b.p));
}
double sphere_diff(const SphereState& a, const SphereState& b) {
  return std::max(max_abs_diff(a.xi, b.xi), max_abs_diff(a.eta, b.eta));
}
}  // namespace

TEST_CASE("bound image matches independently computed values") {
  // reference values from a separately written implementation of the map
  const CartesianState st{{1.1, 0.2, 0.3}, {0.1, 0.6, -0.2}};
  const SphereState sp = ls_forward(st);
  CHECK(sp.sign == EnergySign::Negative);
  const Vec4 xi{-0.477576934079161, 0.31132874773209174, 0.7958835257900354,
                -0.20387274522882615};
  const Vec4 eta{-0.2555238343449346, -0.7751134726309307, 0.0741979553234669,
                 -0.2954288325151117};
  CHECK(max_abs_diff(sp.xi, xi) < 1e-12);
  CHECK(max_abs_diff(sp.eta, eta) < 1e-12);
}

TEST_CASE("unbound image matches independently computed values") {
  const CartesianState st{{0.4, 0.8, -0.3}, {1.2, 0.3, 0.9}};
  CHECK(st.hamiltonian() == doctest::Approx(0.11000211999364007).epsilon(1e-14));
  const SphereState sp = ls_forward(st);
  CHECK(sp.sign == EnergySign::Positive);
  const Vec4 xi{1.1896679339897227, 0.518202207875741, 0.2873302059340054,
                0.25341195250817417};
  const Vec4 eta{-0.08738080685005478, 0.012115053258675155,
                 -1.6142713530330441, 1.39534353252776};
  CHECK(max_abs_diff(sp.xi, xi) < 1e-12);
  CHECK(max_abs_diff(sp.eta, eta) < 1e-12);
}

TEST_CASE("forward and inverse are mutual inverses on both branches") {
  StateSampler sampler(11);
  for (int i = 0; i < 200; ++i) {
    const CartesianState st = sampler.bound();
    CHECK(state_diff(ls_inverse(ls_forward(st)), st) < 1e-9);
  }
  for (int i = 0; i < 200; ++i) {
    const CartesianState st = sampler.unbound();
    CHECK(state_diff(ls_inverse(ls_forward(st)), st) < 1e-9);
  }
}

TEST_CASE("inverse followed by forward reproduces the image") {
  StateSampler sampler(12);
  for (int i = 0; i < 100; ++i) {
    const SphereState sp = ls_forward(sampler.bound());
    CHECK(sphere_diff(ls_forward(ls_inverse(sp)), sp) < 1e-9);
  }
}

TEST_CASE("the stage factorization round-trips through (r, s)") {
  StateSampler sampler(13);
  for (int i = 0; i < 100; ++i) {
    const CartesianState st = (i % 2 == 0) ? sampler.bound() : sampler.unbound();
    const double H = st.hamiltonian();
    const RSState rs = ls_frame(st);
    // ls_unrotate recovers the angle through the Kepler solver, whose
    // |residual| < 1e-13 stop amplifies to ~1e-11 here; same budget as the
    // full round trip rather than the 1e-12 of the purely algebraic stages.
    const RSState back = ls_unrotate(ls_rotate(rs, H));
    CHECK(max_abs_diff(back.r, rs.r) < 1e-9);
    CHECK(max_abs_diff(back.s, rs.s) < 1e-9);
    CHECK(state_diff(ls_reconstruct(rs, H), st) < 1e-12);
  }
}

TEST_CASE("direct forms agree with the factored stages") {
  StateSampler sampler(14);
  for (int i = 0; i < 200; ++i) {
    const CartesianState st = (i % 2 == 0) ? sampler.bound() : sampler.unbound();
    const SphereState a = ls_forward(st);
    const SphereState b = ls_forward_direct(st);
    CHECK(sphere_diff(a, b) < 1e-12);
    CHECK(state_diff(ls_inverse(a), ls_inverse_direct(a)) < 1e-12);
  }
}

TEST_CASE("the image carries the energy in |eta|") {
  StateSampler sampler(15);
  for (int i = 0; i < 100; ++i) {
    const CartesianState st = (i % 2 == 0) ? sampler.bound() : sampler.unbound();
    const double H = st.hamiltonian();
    CHECK(sphere_energy(ls_forward(st)) ==
          doctest::Approx(H).epsilon(1e-10));
  }
}

TEST_CASE("collision and near-parabolic states are refused") {
  CHECK_THROWS_AS(ls_forward({{0.0, 0.0, 0.0}, {0.3, 0.1, 0.0}}),
                  CollisionState);
  // |q| = 1, |p|^2 = 2 puts H within rounding of zero
  const double v = std::sqrt(2.0);
  CHECK_THROWS_AS(ls_forward({{1.0, 0.0, 0.0}, {0.0, v, 0.0}}), ZeroEnergy);
}

TEST_CASE("the rotation stage rejects a mismatched energy sign") {
  const CartesianState st{{1.1, 0.2, 0.3}, {0.1, 0.6, -0.2}};  // bound
  const RSState rs = ls_frame(st);
  CHECK_THROWS_AS(ls_rotate(rs, +0.5), ZeroEnergy);
}

TEST_CASE("the image of a collision cannot be pulled back") {
  // north-pole-adjacent point with r0 = 1 after unrotation
  SphereState sp;
  sp.xi = {1.0, 0.0, 0.0, 0.0};
  sp.eta = {0.0, 1.0, 0.0, 0.0};
  sp.sign = EnergySign::Negative;
  CHECK_THROWS_AS(ls_inverse(sp), DegenerateDenominator);
  CHECK_THROWS_AS(ls_inverse_direct(sp), DegenerateDenominator);
}

TEST_CASE("degenerate eta norms are refused") {
  SphereState sp;
  sp.xi = {0.0, 1.0, 0.0, 0.0};
  sp.eta = {0.0, 0.0, 0.0, 0.0};
  sp.sign = EnergySign::Negative;
  CHECK_THROWS_AS(sphere_energy(sp), DegenerateDenominator);
  // unbound branch: spacelike eta required
  sp.eta = {1.0, 0.5, 0.0, 0.0};
  sp.sign = EnergySign::Positive;
  CHECK_THROWS_AS(sphere_energy(sp), DegenerateDenominator);
  CHECK_THROWS_AS(ls_inverse(sp), DegenerateDenominator);
}
