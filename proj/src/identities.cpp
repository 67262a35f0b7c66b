#include "lsreg/identities.hpp"

#include <cmath>

#include "lsreg/ls_map.hpp"

namespace lsreg {

namespace {

// cyclic index triples (i, j, k) for the vector identities, 0-based spatial
constexpr int kCyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};

}  // namespace

IdentityReport verify_identities(const CartesianState& st, double base_tol) {
  const double qn = norm(st.q);
  if (!(qn > 0.0)) {
    throw CollisionState("|q| = 0");
  }
  const double pn2 = norm_sq(st.p);
  const double H = 0.5 * pn2 - 1.0 / qn;
  if (std::abs(H) < 1e-14) {
    throw ZeroEnergy("|H| < 1e-14");
  }
  const RSState rs = ls_frame(st);     // rejects the |H| < 1e-12 dead zone
  const SphereState sp = ls_rotate(rs, H);

  const double qp = dot(st.q, st.p);
  const Vec3 L = cross(st.q, st.p);
  const Vec4& r = rs.r;
  const Vec4& s = rs.s;
  const Vec4& xi = sp.xi;
  const Vec4& eta = sp.eta;

  IdentityReport rep;
  rep.sign = rs.sign;
  rep.H = H;
  rep.tolerance = base_tol * std::max(1.0, norm_sq(eta));
  auto add = [&rep](const char* name, double residual) {
    rep.entries.push_back({name, std::abs(residual)});
  };

  if (rs.sign == EnergySign::Negative) {
    const double nu = std::sqrt(-2.0 * H);
    const double en = norm(eta);
    const double phi = *sp.phi;
    const double c = std::cos(phi), sn = std::sin(phi);
    Vec3 M;
    for (int i = 0; i < 3; ++i) {
      M[i] = (st.q[i] / qn + st.p[i] * qp - st.q[i] * pn2) / nu;
    }

    add("r_unit", norm_sq(r) - 1.0);
    add("rs_orthogonal", dot(r, s));
    add("s_unit", norm_sq(s) - 1.0);
    add("xi_unit", norm_sq(xi) - 1.0);
    add("xi_eta_orthogonal", dot(xi, eta));
    add("eta_norm_energy", norm_sq(eta) + 0.5 / H);
    add("angle_frame", phi + s[0]);
    add("angle_kepler", phi - (xi[0] * sn - eta[0] / en * c));
    add("radius_frame", -2.0 * H * qn - (1.0 - r[0]));
    add("radius_kepler", -2.0 * H * qn - (1.0 - xi[0] * c - eta[0] / en * sn));
    double worst_rs = 0.0, worst_sphere = 0.0;
    for (const auto& idx : kCyc) {
      const int i = idx[0], j = idx[1] + 1, k = idx[2] + 1;
      worst_rs = std::max(worst_rs,
                          std::abs(L[i] - (r[j] * s[k] - r[k] * s[j]) / nu));
      worst_sphere = std::max(worst_sphere,
                              std::abs(L[i] - (xi[j] * eta[k] - xi[k] * eta[j])));
    }
    add("angular_momentum_frame", worst_rs);
    add("angular_momentum_sphere", worst_sphere);
    worst_rs = worst_sphere = 0.0;
    for (int i = 0; i < 3; ++i) {
      worst_rs = std::max(worst_rs,
                          std::abs(M[i] - (r[0] * s[i + 1] - r[i + 1] * s[0]) / nu));
      worst_sphere = std::max(worst_sphere,
                              std::abs(M[i] - (xi[0] * eta[i + 1] - xi[i + 1] * eta[0])));
    }
    add("laplace_frame", worst_rs);
    add("laplace_sphere", worst_sphere);
    add("energy_from_eta", H + 0.5 / norm_sq(eta));
    const double rot = H + st.q[1] * st.p[0] - st.q[0] * st.p[1];
    add("rotating_energy_frame", rot - (H + (r[2] * s[1] - r[1] * s[2]) / nu));
    add("rotating_energy_sphere",
        rot - (-0.5 / norm_sq(eta) + xi[2] * eta[1] - xi[1] * eta[2]));
  } else {
    const double nu = std::sqrt(2.0 * H);
    const double el2 = eta[1] * eta[1] + eta[2] * eta[2] + eta[3] * eta[3] -
                       eta[0] * eta[0];
    const double en = std::sqrt(el2);
    const double phi = *sp.phi;
    const double ch = std::cosh(phi), sh = std::sinh(phi);
    Vec3 M;
    for (int i = 0; i < 3; ++i) {
      M[i] = (st.q[i] / qn + st.p[i] * qp - st.q[i] * pn2) / nu;
    }

    add("r_unit", lorentz_dot(r, r) - 1.0);
    add("rs_orthogonal", lorentz_dot(r, s));
    add("s_unit", lorentz_dot(s, s) + 1.0);
    add("xi_unit", lorentz_dot(xi, xi) - 1.0);
    add("xi_eta_orthogonal", lorentz_dot(xi, eta));
    add("eta_norm_energy", lorentz_dot(eta, eta) + 0.5 / H);
    add("angle_frame", phi + s[0]);
    add("angle_kepler", phi - (xi[0] * sh + eta[0] / en * ch));
    add("radius_frame", -2.0 * H * qn - (1.0 - r[0]));
    add("radius_kepler", -2.0 * H * qn - (1.0 - xi[0] * ch - eta[0] / en * sh));
    double worst_rs = 0.0, worst_sphere = 0.0;
    for (const auto& idx : kCyc) {
      const int i = idx[0], j = idx[1] + 1, k = idx[2] + 1;
      worst_rs = std::max(worst_rs,
                          std::abs(L[i] + (r[j] * s[k] - r[k] * s[j]) / nu));
      worst_sphere = std::max(worst_sphere,
                              std::abs(L[i] - (xi[j] * eta[k] - xi[k] * eta[j])));
    }
    add("angular_momentum_frame", worst_rs);
    add("angular_momentum_sphere", worst_sphere);
    worst_rs = worst_sphere = 0.0;
    for (int i = 0; i < 3; ++i) {
      worst_rs = std::max(worst_rs,
                          std::abs(M[i] + (r[0] * s[i + 1] - r[i + 1] * s[0]) / nu));
      worst_sphere = std::max(worst_sphere,
                              std::abs(M[i] - (xi[0] * eta[i + 1] - xi[i + 1] * eta[0])));
    }
    add("laplace_frame", worst_rs);
    add("laplace_sphere", worst_sphere);
    add("energy_from_eta", H + 0.5 / lorentz_dot(eta, eta));
    const double rot = H + st.q[1] * st.p[0] - st.q[0] * st.p[1];
    add("rotating_energy_frame", rot - (H - (r[2] * s[1] - r[1] * s[2]) / nu));
    add("rotating_energy_sphere",
        rot - (-0.5 / lorentz_dot(eta, eta) + xi[2] * eta[1] - xi[1] * eta[2]));
  }

  for (const auto& e : rep.entries) {
    rep.max_residual = std::max(rep.max_residual, e.residual);
  }
  rep.pass = rep.max_residual <= rep.tolerance;
  return rep;
}

}  // namespace lsreg
