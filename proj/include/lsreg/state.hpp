#pragma once

#include <optional>

#include "lsreg/errors.hpp"
#include "lsreg/vec.hpp"

namespace lsreg {

enum class EnergySign { Negative, Positive };

// Kepler-side phase point in canonical units (GM = 1). Planar problems embed
// with q[2] = p[2] = 0 and stay planar under every map here.
struct CartesianState {
  Vec3 q{};
  Vec3 p{};

  // |p|^2/2 - 1/|q|. Throws CollisionState at q = 0.
  double hamiltonian() const;
};

// Intermediate pair produced by the frame stage of the Ligon-Schaaf map:
// r is a unit 4-vector, s is orthogonal to it (Euclidean on the bound branch,
// Minkowski on the unbound one).
struct RSState {
  Vec4 r{};
  Vec4 s{};
  EnergySign sign = EnergySign::Negative;
};

// Image point of the Ligon-Schaaf map: xi on the unit sphere (or unit
// hyperboloid), eta in its tangent space. phi records the rotation angle the
// forward map applied; the inverse recovers it by solving a transcendental
// equation, so keeping it around is a useful diagnostic.
struct SphereState {
  Vec4 xi{};
  Vec4 eta{};
  EnergySign sign = EnergySign::Negative;
  std::optional<double> phi;
};

struct ConservedQuantities {
  Vec3 L{};  // angular momentum q x p
  Vec3 M{};  // scaled Laplace vector, (q/|q| + p (q.p) - q |p|^2) / nu
  double H = 0.0;
};

ConservedQuantities conserved(const CartesianState& st);

// Branch dispatch with a dead zone: |H| < 1e-12 throws ZeroEnergy. Parabolic
// states compress the image to the pole and the inverse loses all digits, so
// they are rejected rather than mapped badly.
EnergySign classify_energy(double H);

}  // namespace lsreg
