#include "lsreg/state.hpp"

#include <cmath>

namespace lsreg {

double CartesianState::hamiltonian() const {
  const double qn = norm(q);
  if (!(qn > 0.0)) {
    throw CollisionState("|q| = 0, Hamiltonian undefined");
  }
  return 0.5 * norm_sq(p) - 1.0 / qn;
}

EnergySign classify_energy(double H) {
  if (std::abs(H) < 1e-12) {
    throw ZeroEnergy("|H| < 1e-12, too close to the parabolic boundary");
  }
  return H < 0.0 ? EnergySign::Negative : EnergySign::Positive;
}

ConservedQuantities conserved(const CartesianState& st) {
  const double qn = norm(st.q);
  if (!(qn > 0.0)) {
    throw CollisionState("|q| = 0");
  }
  const double H = st.hamiltonian();
  const EnergySign sign = classify_energy(H);
  const double nu = std::sqrt(sign == EnergySign::Negative ? -2.0 * H : 2.0 * H);
  const double qp = dot(st.q, st.p);
  const double pn2 = norm_sq(st.p);
  ConservedQuantities c;
  c.H = H;
  c.L = cross(st.q, st.p);
  for (int i = 0; i < 3; ++i) {
    c.M[i] = (st.q[i] / qn + st.p[i] * qp - st.q[i] * pn2) / nu;
  }
  return c;
}

}  // namespace lsreg
