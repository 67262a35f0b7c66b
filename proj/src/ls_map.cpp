#include "lsreg/ls_map.hpp"

#include <cmath>

#include "lsreg/kepler_equation.hpp"

namespace lsreg {

RSState ls_frame(const CartesianState& st) {
  const double qn = norm(st.q);
  if (!(qn > 0.0)) {
    throw CollisionState("|q| = 0");
  }
  const double pn2 = norm_sq(st.p);
  const double H = 0.5 * pn2 - 1.0 / qn;
  const EnergySign sign = classify_energy(H);
  const double qp = dot(st.q, st.p);

  RSState rs;
  rs.sign = sign;
  const double nu = std::sqrt(sign == EnergySign::Negative ? -2.0 * H : 2.0 * H);
  rs.r = {pn2 * qn - 1.0, nu * qn * st.p[0], nu * qn * st.p[1], nu * qn * st.p[2]};
  const Vec3 b = st.q / qn - qp * st.p;
  if (sign == EnergySign::Negative) {
    rs.s = {-nu * qp, -b[0], -b[1], -b[2]};
  } else {
    // the spatial part keeps its sign on the unbound branch
    rs.s = {-nu * qp, b[0], b[1], b[2]};
  }
  return rs;
}

SphereState ls_rotate(const RSState& rs, double H) {
  const EnergySign sign = classify_energy(H);
  if (sign != rs.sign) {
    throw ZeroEnergy("energy sign does not match the frame pair");
  }
  SphereState sp;
  sp.sign = rs.sign;
  const double phi = -rs.s[0];
  sp.phi = phi;
  if (rs.sign == EnergySign::Negative) {
    const double nu = std::sqrt(-2.0 * H);
    const double c = std::cos(phi), s = std::sin(phi);
    for (int i = 0; i < 4; ++i) {
      sp.xi[i] = rs.r[i] * c - rs.s[i] * s;
      sp.eta[i] = (rs.s[i] * c + rs.r[i] * s) / nu;
    }
  } else {
    const double nu = std::sqrt(2.0 * H);
    const double ch = std::cosh(phi), sh = std::sinh(phi);
    for (int i = 0; i < 4; ++i) {
      sp.xi[i] = rs.r[i] * ch + rs.s[i] * sh;
      sp.eta[i] = -(rs.s[i] * ch + rs.r[i] * sh) / nu;
    }
  }
  return sp;
}

double sphere_energy(const SphereState& sp) {
  if (sp.sign == EnergySign::Negative) {
    const double en2 = norm_sq(sp.eta);
    if (!(en2 > 0.0)) {
      throw DegenerateDenominator("|eta| = 0 on the bound branch");
    }
    return -0.5 / en2;
  }
  const double el2 = sp.eta[1] * sp.eta[1] + sp.eta[2] * sp.eta[2] +
                     sp.eta[3] * sp.eta[3] - sp.eta[0] * sp.eta[0];
  if (!(el2 > 0.0)) {
    throw DegenerateDenominator("Minkowski norm of eta not positive on the unbound branch");
  }
  return 0.5 / el2;
}

RSState ls_unrotate(const SphereState& sp) {
  RSState rs;
  rs.sign = sp.sign;
  if (sp.sign == EnergySign::Negative) {
    const double en = norm(sp.eta);
    if (!(en > 0.0)) {
      throw DegenerateDenominator("|eta| = 0 on the bound branch");
    }
    const double b = sp.eta[0] / en;
    const double phi = solve_elliptic(sp.xi[0], b).phi;
    const double c = std::cos(phi), s = std::sin(phi);
    for (int i = 0; i < 4; ++i) {
      const double ei = sp.eta[i] / en;
      rs.r[i] = sp.xi[i] * c + ei * s;
      rs.s[i] = -sp.xi[i] * s + ei * c;
    }
    if (1.0 - rs.r[0] <= 1e-14) {
      throw DegenerateDenominator("1 - r0 <= 1e-14, image of a collision");
    }
  } else {
    const double el2 = sp.eta[1] * sp.eta[1] + sp.eta[2] * sp.eta[2] +
                       sp.eta[3] * sp.eta[3] - sp.eta[0] * sp.eta[0];
    if (!(el2 > 0.0)) {
      throw DegenerateDenominator("Minkowski norm of eta not positive on the unbound branch");
    }
    const double en = std::sqrt(el2);
    const double b = sp.eta[0] / en;
    const double phi = solve_hyperbolic(sp.xi[0], b).phi;
    const double ch = std::cosh(phi), sh = std::sinh(phi);
    for (int i = 0; i < 4; ++i) {
      const double ei = sp.eta[i] / en;
      rs.r[i] = sp.xi[i] * ch + ei * sh;
      rs.s[i] = -sp.xi[i] * sh - ei * ch;
    }
    if (std::abs(1.0 - rs.r[0]) <= 1e-14) {
      throw DegenerateDenominator("|1 - r0| <= 1e-14, image of a collision");
    }
  }
  return rs;
}

CartesianState ls_reconstruct(const RSState& rs, double H) {
  const EnergySign sign = classify_energy(H);
  if (sign != rs.sign) {
    throw ZeroEnergy("energy sign does not match the frame pair");
  }
  const double denom = 1.0 - rs.r[0];
  CartesianState st;
  if (rs.sign == EnergySign::Negative) {
    const double nu = std::sqrt(-2.0 * H);
    for (int i = 0; i < 3; ++i) {
      st.q[i] = (rs.s[i + 1] * denom + rs.r[i + 1] * rs.s[0]) / (2.0 * H);
      st.p[i] = nu * rs.r[i + 1] / denom;
    }
  } else {
    const double nu = std::sqrt(2.0 * H);
    for (int i = 0; i < 3; ++i) {
      st.q[i] = -(rs.s[i + 1] * denom + rs.r[i + 1] * rs.s[0]) / (2.0 * H);
      st.p[i] = -nu * rs.r[i + 1] / denom;
    }
  }
  return st;
}

SphereState ls_forward(const CartesianState& st) {
  const double H = st.hamiltonian();
  return ls_rotate(ls_frame(st), H);
}

CartesianState ls_inverse(const SphereState& sp) {
  const double H = sphere_energy(sp);
  return ls_reconstruct(ls_unrotate(sp), H);
}

SphereState ls_forward_direct(const CartesianState& st) {
  const double qn = norm(st.q);
  if (!(qn > 0.0)) {
    throw CollisionState("|q| = 0");
  }
  const double pn2 = norm_sq(st.p);
  const double H = 0.5 * pn2 - 1.0 / qn;
  const EnergySign sign = classify_energy(H);
  const double qp = dot(st.q, st.p);
  const double r0 = pn2 * qn - 1.0;
  const Vec3 a = (std::sqrt(sign == EnergySign::Negative ? -2.0 * H : 2.0 * H) * qn) * st.p;
  const Vec3 b = st.q / qn - qp * st.p;

  SphereState sp;
  sp.sign = sign;
  if (sign == EnergySign::Negative) {
    const double nu = std::sqrt(-2.0 * H);
    const double phi = nu * qp;
    sp.phi = phi;
    const double c = std::cos(phi), s = std::sin(phi);
    sp.xi[0] = r0 * c + nu * qp * s;
    sp.eta[0] = -qp * c + r0 / nu * s;
    for (int i = 0; i < 3; ++i) {
      sp.xi[i + 1] = a[i] * c + b[i] * s;
      sp.eta[i + 1] = -b[i] / nu * c + qn * st.p[i] * s;
    }
  } else {
    const double nu = std::sqrt(2.0 * H);
    const double phi = nu * qp;
    sp.phi = phi;
    const double ch = std::cosh(phi), sh = std::sinh(phi);
    sp.xi[0] = r0 * ch - nu * qp * sh;
    sp.eta[0] = qp * ch - r0 / nu * sh;
    for (int i = 0; i < 3; ++i) {
      sp.xi[i + 1] = a[i] * ch + b[i] * sh;
      sp.eta[i + 1] = -(b[i] * ch + a[i] * sh) / nu;
    }
  }
  return sp;
}

CartesianState ls_inverse_direct(const SphereState& sp) {
  CartesianState st;
  if (sp.sign == EnergySign::Negative) {
    const double en = norm(sp.eta);
    if (!(en > 0.0)) {
      throw DegenerateDenominator("|eta| = 0 on the bound branch");
    }
    const double b = sp.eta[0] / en;
    const double phi = solve_elliptic(sp.xi[0], b).phi;
    const double c = std::cos(phi), s = std::sin(phi);
    const double k = 1.0 - sp.xi[0] * c - b * s;  // = 1 - r0 = -2H |q|
    if (k <= 1e-14) {
      throw DegenerateDenominator("1 - r0 <= 1e-14, image of a collision");
    }
    for (int i = 0; i < 3; ++i) {
      const double xv = sp.xi[i + 1];
      const double ev = sp.eta[i + 1] / en;
      st.q[i] = en * en * (-xv * (b - s) + ev * (sp.xi[0] - c));
      st.p[i] = (xv * c + ev * s) / (en * k);
    }
  } else {
    const double el2 = sp.eta[1] * sp.eta[1] + sp.eta[2] * sp.eta[2] +
                       sp.eta[3] * sp.eta[3] - sp.eta[0] * sp.eta[0];
    if (!(el2 > 0.0)) {
      throw DegenerateDenominator("Minkowski norm of eta not positive on the unbound branch");
    }
    const double en = std::sqrt(el2);
    const double b = sp.eta[0] / en;
    const double phi = solve_hyperbolic(sp.xi[0], b).phi;
    const double ch = std::cosh(phi), sh = std::sinh(phi);
    const double k = 1.0 - sp.xi[0] * ch - b * sh;  // = 1 - r0 = -2H |q| < 0 here
    if (std::abs(k) <= 1e-14) {
      throw DegenerateDenominator("|1 - r0| <= 1e-14, image of a collision");
    }
    for (int i = 0; i < 3; ++i) {
      const double xv = sp.xi[i + 1];
      const double ev = sp.eta[i + 1] / en;
      st.q[i] = en * en * (xv * (sh + b) - ev * (sp.xi[0] - ch));
      st.p[i] = -(xv * ch + ev * sh) / (en * k);
    }
  }
  return st;
}

}  // namespace lsreg
