#include "lsreg/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lsreg {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double wrap_2pi(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

}  // namespace

double period(double H) {
  if (!(H < 0.0)) {
    throw NonNegativeEnergy("period requires H < 0");
  }
  return kTwoPi / std::pow(-2.0 * H, 1.5);
}

SphereState delaunay_flow(const SphereState& sp, double t) {
  if (sp.sign != EnergySign::Negative) {
    throw NonNegativeEnergy("flow is defined on the bound branch only");
  }
  const double en = norm(sp.eta);
  if (!(en > 0.0)) {
    throw DegenerateDenominator("|eta| = 0");
  }
  const double angle = t / (en * en * en);
  const double c = std::cos(angle), s = std::sin(angle);
  SphereState out;
  out.sign = sp.sign;
  for (int i = 0; i < 4; ++i) {
    out.xi[i] = c * sp.xi[i] + s * sp.eta[i] / en;
    out.eta[i] = -en * s * sp.xi[i] + c * sp.eta[i];
  }
  return out;
}

CartesianState propagate(const CartesianState& st, double t) {
  const double H = st.hamiltonian();
  if (!(H < 0.0)) {
    throw NonNegativeEnergy("propagation by the flow requires a bound state");
  }
  return ls_inverse(delaunay_flow(ls_forward(st), t));
}

ElementSet elements(const CartesianState& st) {
  const double H = st.hamiltonian();
  if (!(H < 0.0)) {
    throw NonNegativeEnergy("elements are defined for bound states");
  }
  const double qn = norm(st.q);
  const double qp = dot(st.q, st.p);
  const Vec3 L = cross(st.q, st.p);
  const double Ln = norm(L);
  const double a = -0.5 / H;
  const Vec3 evec = cross(st.p, L) - st.q / qn;
  const double e = norm(evec);

  const double tiny = 1e-12;
  const double inc =
      (Ln > 0.0) ? std::acos(std::clamp(L[2] / Ln, -1.0, 1.0)) : 0.0;
  const Vec3 node{-L[1], L[0], 0.0};  // z-hat x L
  const double nn = norm(node);
  const bool equatorial = inc < tiny || nn == 0.0;
  const double Omega = equatorial ? 0.0 : wrap_2pi(std::atan2(node[1], node[0]));
  const Vec3 ref = equatorial ? Vec3{1.0, 0.0, 0.0} : node / nn;
  const Vec3 lhat = (Ln > 0.0) ? L / Ln : Vec3{0.0, 0.0, 1.0};

  // in-plane angle from u to v, oriented by the angular momentum
  auto plane_angle = [&lhat](const Vec3& u, const Vec3& v) {
    return std::atan2(dot(cross(u, v), lhat), dot(u, v));
  };

  const bool circular = e < tiny;
  double omega = 0.0;
  if (!circular) omega = wrap_2pi(plane_angle(ref, evec / e));

  const Vec3 qhat = st.q / qn;
  double ecc_anom;
  double true_anom;
  if (circular) {
    // pericenter undefined; measure both anomalies from the reference axis
    ecc_anom = wrap_2pi(plane_angle(ref, qhat));
    true_anom = ecc_anom;
  } else {
    // e sin E = q.p / sqrt(a), e cos E = 1 - |q|/a, exact for Kepler states
    ecc_anom = wrap_2pi(std::atan2(qp / std::sqrt(a), 1.0 - qn / a));
    true_anom = wrap_2pi(plane_angle(evec / e, qhat));
  }
  const double mean_anom = wrap_2pi(ecc_anom - e * std::sin(ecc_anom));
  const double T = period(H);
  const double tau = -mean_anom * T / kTwoPi;

  ElementSet out;
  out.kepler = {a, e, inc, Omega, omega, tau};
  out.delaunay = {mean_anom, omega, Omega, 1.0 / std::sqrt(-2.0 * H), Ln, L[2]};
  out.anomalies = {true_anom, ecc_anom, mean_anom};
  return out;
}

namespace {

struct State6 {
  Vec3 q, p;
};

State6 deriv(const State6& y) {
  const double r2 = norm_sq(y.q);
  const double inv_r3 = 1.0 / (r2 * std::sqrt(r2));
  return {y.p, -inv_r3 * y.q};
}

State6 axpy(const State6& y, double h, const State6& d) {
  return {y.q + h * d.q, y.p + h * d.p};
}

State6 rk4_step(const State6& y, double h) {
  const State6 k1 = deriv(y);
  const State6 k2 = deriv(axpy(y, 0.5 * h, k1));
  const State6 k3 = deriv(axpy(y, 0.5 * h, k2));
  const State6 k4 = deriv(axpy(y, h, k3));
  State6 out = y;
  for (int i = 0; i < 3; ++i) {
    out.q[i] += h / 6.0 * (k1.q[i] + 2.0 * k2.q[i] + 2.0 * k3.q[i] + k4.q[i]);
    out.p[i] += h / 6.0 * (k1.p[i] + 2.0 * k2.p[i] + 2.0 * k3.p[i] + k4.p[i]);
  }
  return out;
}

double step_diff(const State6& a, const State6& b) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i) {
    m = std::max(m, std::abs(a.q[i] - b.q[i]));
    m = std::max(m, std::abs(a.p[i] - b.p[i]));
  }
  return m;
}

}  // namespace

CartesianState rk4_reference_propagate(const CartesianState& st, double t_end,
                                       double tol) {
  State6 y{st.q, st.p};
  const double dir = (t_end >= 0.0) ? 1.0 : -1.0;
  double remaining = std::abs(t_end);
  double h = std::min(1e-3, remaining);
  std::size_t steps = 0;
  while (remaining > 0.0) {
    h = std::min(h, remaining);
    const State6 full = rk4_step(y, dir * h);
    const State6 half = rk4_step(rk4_step(y, dir * 0.5 * h), dir * 0.5 * h);
    const double err = step_diff(full, half);
    const double factor =
        (err > 0.0) ? std::clamp(0.9 * std::pow(tol / err, 0.2), 0.2, 5.0)
                    : 2.0;
    if (err <= tol) {
      // accept with the fifth-order correction
      y = half;
      for (int i = 0; i < 3; ++i) {
        y.q[i] += (half.q[i] - full.q[i]) / 15.0;
        y.p[i] += (half.p[i] - full.p[i]) / 15.0;
      }
      remaining -= h;
    }
    h *= factor;
    if (++steps > 50'000'000) {
      throw std::runtime_error("reference integrator exceeded its step budget");
    }
  }
  return {y.q, y.p};
}

}  // namespace lsreg
