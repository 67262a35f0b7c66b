#include "lsreg/projections.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace lsreg {

SphereState stereo_forward(const PlanarCotangent& pc) {
  const double rho = norm_sq(pc.x);
  const double A = 0.5 * (rho + 1.0);
  const double B = dot(pc.x, pc.y);
  SphereState sp;
  sp.sign = EnergySign::Negative;
  sp.xi = {(rho - 1.0) / (rho + 1.0), pc.x[0] / A, pc.x[1] / A, 0.0};
  sp.eta = {B, A * pc.y[0] - B * pc.x[0], A * pc.y[1] - B * pc.x[1], 0.0};
  return sp;
}

PlanarCotangent stereo_inverse(const SphereState& sp) {
  if (sp.xi[0] >= 1.0 - 1e-14) {
    throw NorthPole("xi0 >= 1 - 1e-14, outside the chart");
  }
  const double d = 1.0 - sp.xi[0];
  PlanarCotangent pc;
  pc.x = {sp.xi[1] / d, sp.xi[2] / d};
  pc.y = {sp.eta[0] * sp.xi[1] + d * sp.eta[1],
          sp.eta[0] * sp.xi[2] + d * sp.eta[2]};
  return pc;
}

PlanarCotangent levi_civita_forward(const ComplexPair& cp) {
  const std::complex<double> w(cp.w[0], cp.w[1]);
  const std::complex<double> z(cp.z[0], cp.z[1]);
  if (std::abs(z) <= 1e-14) {
    throw ZeroZ("|z| <= 1e-14");
  }
  const std::complex<double> x = std::conj(w) / z;
  const std::complex<double> zc = std::conj(z);
  const std::complex<double> y = 2.0 * zc * zc;
  return {{x.real(), x.imag()}, {y.real(), y.imag()}};
}

ComplexPair levi_civita_inverse(const PlanarCotangent& pc) {
  const std::complex<double> x(pc.x[0], pc.x[1]);
  const std::complex<double> y(pc.y[0], pc.y[1]);
  if (std::abs(y) <= 1e-14) {
    throw ZeroY("|y| <= 1e-14");
  }
  const std::complex<double> zbar = std::sqrt(0.5 * y);  // principal branch
  const std::complex<double> z = std::conj(zbar);
  const std::complex<double> w = std::conj(x) * zbar;
  return {{w.real(), w.imag()}, {z.real(), z.imag()}};
}

Vec2 shift_heavy_primary(const Vec2& q, double mu, ShiftDirection dir) {
  if (!(mu >= 0.0 && mu <= 0.5)) {
    throw std::invalid_argument("mass ratio must lie in [0, 0.5]");
  }
  const double s = (dir == ShiftDirection::RegToFrame) ? -mu : mu;
  return {q[0] + s, q[1]};
}

}  // namespace lsreg
