#include "lsreg/kepler_equation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lsreg {

namespace {

inline double f_ell(double phi, double x, double y) {
  return phi - x * std::sin(phi) + y * std::cos(phi);
}

inline double df_ell(double phi, double x, double y) {
  return 1.0 - x * std::cos(phi) - y * std::sin(phi);
}

// Newton with a bisection safeguard on a bracket [lo, hi] known to contain a
// root. Whenever the Newton step leaves the bracket (or the derivative
// vanishes) the bracket is halved instead, so progress never stalls.
KeplerRoot newton_elliptic(double x, double y, double phi0, double lo, double hi) {
  double phi = phi0;
  double flo = f_ell(lo, x, y);
  int it = 0;
  while (it < 100) {
    const double fv = f_ell(phi, x, y);
    const double dv = df_ell(phi, x, y);
    double nxt = std::numeric_limits<double>::infinity();
    if (dv != 0.0) nxt = phi - fv / dv;
    if (!(nxt >= lo && nxt <= hi) || !std::isfinite(nxt)) {
      // keep the sign change inside [lo, hi]
      if (flo * fv <= 0.0) {
        hi = phi;
      } else {
        lo = phi;
        flo = fv;
      }
      nxt = 0.5 * (lo + hi);
    }
    const double step = std::abs(nxt - phi);
    phi = nxt;
    ++it;
    if (step < 1e-14 && std::abs(f_ell(phi, x, y)) < 1e-13) break;
  }
  return {phi, f_ell(phi, x, y), it};
}

// Plain bisection used to pin down roots found by scanning.
double bisect_ell(double x, double y, double lo, double hi) {
  double flo = f_ell(lo, x, y);
  for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f_ell(mid, x, y);
    if (flo * fm <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

KeplerRoot solve_elliptic(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw NonFinite("solve_elliptic needs finite (x, y)");
  }
  const double r = std::hypot(x, y);
  if (r == 0.0) return {0.0, 0.0, 0};

  if (x * x + y * y > 1.0) {
    // Possibly several roots. Scan [-r, r] at resolution r/1024, refine every
    // sign-change interval and keep the root closest to zero, then polish
    // inside its own subinterval so Newton cannot wander to a neighbor.
    const int n = 2048;
    const double step = 2.0 * r / n;
    double best = std::numeric_limits<double>::infinity();
    double best_lo = 0.0, best_hi = 0.0;
    bool have = false;
    double a = -r;
    double fa = f_ell(a, x, y);
    for (int i = 0; i < n; ++i) {
      const double b = -r + (i + 1) * step;
      const double fb = f_ell(b, x, y);
      if (fa == 0.0) {
        if (std::abs(a) < std::abs(best)) {
          best = a;
          best_lo = a;
          best_hi = a;
          have = true;
        }
      } else if (fa * fb < 0.0) {
        const double cand = bisect_ell(x, y, a, b);
        if (std::abs(cand) < std::abs(best)) {
          best = cand;
          best_lo = a;
          best_hi = b;
          have = true;
        }
      }
      a = b;
      fa = fb;
    }
    if (!have) {
      // f(-r) <= 0 <= f(r) guarantees at least one sign change at this
      // resolution unless the root sits exactly on a grid node; fall back to
      // the full bracket.
      best = bisect_ell(x, y, -r, r);
      best_lo = -r;
      best_hi = r;
    }
    if (best_lo == best_hi) return {best, f_ell(best, x, y), 0};
    return newton_elliptic(x, y, best, best_lo, best_hi);
  }

  // Single root: the derivative 1 - x cos - y sin stays nonnegative on the
  // unit disk, so f is monotone and Newton from the small-angle solution -y
  // is safe with the [-r, r] safeguard.
  return newton_elliptic(x, y, -y, -r, r);
}

namespace {

inline double f_hyp(double phi, double x, double y) {
  return phi - x * std::sinh(phi) - y * std::cosh(phi);
}

inline double df_hyp(double phi, double x, double y) {
  return 1.0 - x * std::cosh(phi) - y * std::sinh(phi);
}

}  // namespace

KeplerRoot solve_hyperbolic(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw NonFinite("solve_hyperbolic needs finite (x, y)");
  }
  // No closed bracket this time; expand until a sign change shows up. 50 is
  // far beyond any state the maps produce (sinh(50) ~ 2.6e21).
  double lo = 0.0, hi = 0.0;
  bool have = false;
  for (double b = 1.0; b <= 64.0 && !have; b *= 2.0) {
    const double edge = std::min(b, 50.0);
    const int n = 512;
    double a = -edge;
    double fa = f_hyp(a, x, y);
    double best_mid = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      const double c = -edge + (i + 1) * (2.0 * edge / n);
      const double fc = f_hyp(c, x, y);
      if (fa * fc <= 0.0) {
        const double mid = 0.5 * (a + c);
        if (std::abs(mid) < std::abs(best_mid)) {
          best_mid = mid;
          lo = a;
          hi = c;
          have = true;
        }
      }
      a = c;
      fa = fc;
    }
    if (b >= 50.0) break;
  }
  if (!have) {
    throw NoRootInBracket("no sign change of phi - x sinh(phi) - y cosh(phi) in [-50, 50]");
  }

  double phi = 0.5 * (lo + hi);
  double flo = f_hyp(lo, x, y);
  int it = 0;
  while (it < 100) {
    const double fv = f_hyp(phi, x, y);
    const double dv = df_hyp(phi, x, y);
    double nxt = std::numeric_limits<double>::infinity();
    if (dv != 0.0) nxt = phi - fv / dv;
    if (!(nxt >= lo && nxt <= hi) || !std::isfinite(nxt)) {
      if (flo * fv <= 0.0) {
        hi = phi;
      } else {
        lo = phi;
        flo = fv;
      }
      nxt = 0.5 * (lo + hi);
    }
    const double step = std::abs(nxt - phi);
    phi = nxt;
    ++it;
    if (step < 1e-14 && std::abs(f_hyp(phi, x, y)) < 1e-13) break;
  }
  return {phi, f_hyp(phi, x, y), it};
}

GridReport kepler_function_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi > lo)) {
    throw NonFinite("grid needs hi > lo and step > 0");
  }
  GridReport rep;
  rep.lo = lo;
  rep.hi = hi;
  rep.step = step;
  rep.n = static_cast<int>(std::floor((hi - lo) / step + 0.5)) + 1;
  rep.axis.resize(rep.n);
  for (int i = 0; i < rep.n; ++i) rep.axis[i] = lo + i * step;
  rep.phi.assign(static_cast<std::size_t>(rep.n) * rep.n, 0.0);

  auto worse = [](GridExtreme& e, double v, double x, double y, bool min_side) {
    if (min_side ? v < e.value : v > e.value) e = {v, x, y};
  };
  const double inf = std::numeric_limits<double>::infinity();
  rep.phi_min = {inf, 0, 0};
  rep.phi_max = {-inf, 0, 0};
  rep.dphi_dx_min = {inf, 0, 0};
  rep.dphi_dx_max = {-inf, 0, 0};
  rep.dphi_dy_min = {inf, 0, 0};
  rep.dphi_dy_max = {-inf, 0, 0};
  rep.grad_mag_max = {-inf, 0, 0};

  for (int ix = 0; ix < rep.n; ++ix) {
    const double x = rep.axis[ix];
    for (int iy = 0; iy < rep.n; ++iy) {
      const double y = rep.axis[iy];
      const double phi = solve_elliptic(x, y).phi;
      rep.phi[static_cast<std::size_t>(ix) * rep.n + iy] = phi;
      worse(rep.phi_min, phi, x, y, true);
      worse(rep.phi_max, phi, x, y, false);

      const double d = 1.0 - x * std::cos(phi) - y * std::sin(phi);
      if (std::abs(d) <= 1e-9) {
        ++rep.masked;
        continue;
      }
      const double gx = std::sin(phi) / d;
      const double gy = -std::cos(phi) / d;
      worse(rep.dphi_dx_min, gx, x, y, true);
      worse(rep.dphi_dx_max, gx, x, y, false);
      worse(rep.dphi_dy_min, gy, x, y, true);
      worse(rep.dphi_dy_max, gy, x, y, false);
      worse(rep.grad_mag_max, std::hypot(gx, gy), x, y, false);
    }
  }
  rep.max_abs_dphi_dx =
      std::max(std::abs(rep.dphi_dx_min.value), std::abs(rep.dphi_dx_max.value));
  return rep;
}

}  // namespace lsreg
