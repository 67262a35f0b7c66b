#include "lsreg/scan.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lsreg/curvature.hpp"
#include "lsreg/json_io.hpp"

namespace lsreg {

namespace {

struct Partial {
  std::vector<RadialBin> bins;
  std::vector<CurvatureSample> negatives;
  std::vector<CurvatureSample> samples;
  std::size_t retained = 0;
  std::size_t chain_errors = 0;
  std::size_t curvature_errors = 0;
};

std::vector<RadialBin> fresh_bins() {
  std::vector<RadialBin> bins(100);
  for (int k = 0; k < 100; ++k) {
    bins[k].lo = k * 0.01;
    bins[k].hi = (k + 1) * 0.01;
    bins[k].min_curvature = std::numeric_limits<double>::infinity();
  }
  return bins;
}

// rel_dist_heavy in (0, 1] -> bin index; right-closed bins (0.01k, 0.01(k+1)]
int bin_index(double r) {
  int k = static_cast<int>(std::ceil(r * 100.0)) - 1;
  return std::clamp(k, 0, 99);
}

void scan_slab(const ScanOptions& opt, double cap, double dist_heavy,
               const std::vector<double>& axis, int i_begin, int i_end,
               Partial& out) {
  out.bins = fresh_bins();
  const int n = opt.n_per_axis;
  auto field = [&](const Vec4& u) {
    return cr3bp_chain_energy(ComplexPair{{u[0], u[1]}, {u[2], u[3]}}, opt.mu,
                              dist_heavy)
        .energy;
  };
  for (int i1 = i_begin; i1 < i_end; ++i1) {
    for (int i2 = 0; i2 < n; ++i2) {
      for (int i3 = 0; i3 < n; ++i3) {
        for (int i4 = 0; i4 < n; ++i4) {
          const Vec4 pt{axis[i1], axis[i2], axis[i3], axis[i4]};
          ChainEval ce;
          try {
            ce = cr3bp_chain_energy(ComplexPair{{pt[0], pt[1]}, {pt[2], pt[3]}},
                                    opt.mu, dist_heavy);
          } catch (const DomainError&) {
            ++out.chain_errors;
            continue;
          }
          if (!(ce.energy <= cap && ce.rel_dist_heavy <= 1.0)) continue;
          double curv;
          try {
            curv = tangential_curvature(field, pt);
          } catch (const DomainError&) {
            ++out.curvature_errors;
            continue;
          }
          if (!std::isfinite(curv)) {
            ++out.curvature_errors;
            continue;
          }
          ++out.retained;
          RadialBin& bin = out.bins[bin_index(ce.rel_dist_heavy)];
          ++bin.count;
          if (curv < bin.min_curvature) {
            bin.min_curvature = curv;
            bin.argmin = pt;
          }
          if (curv <= 0.0) {
            out.negatives.push_back({pt, ce.q, ce.energy, ce.rel_dist_heavy, curv});
          }
          if (opt.keep_samples) {
            out.samples.push_back({pt, ce.q, ce.energy, ce.rel_dist_heavy, curv});
          }
        }
      }
    }
  }
}

}  // namespace

ScanReport grid_scan(const ScanOptions& opt) {
  if (opt.n_per_axis < 2) {
    throw std::invalid_argument("need at least 2 points per axis");
  }
  if (!(opt.extent > 0.0)) {
    throw std::invalid_argument("extent must be positive");
  }
  const LagrangePointL1 l1 = locate_L1(opt.mu);
  const double cap = std::isnan(opt.energy_cap) ? l1.energy : opt.energy_cap;

  const int n = opt.n_per_axis;
  std::vector<double> axis(n);
  for (int i = 0; i < n; ++i) {
    axis[i] = -opt.extent + i * (2.0 * opt.extent / (n - 1));
  }

  const int workers = std::clamp(opt.workers, 1, n);
  std::vector<Partial> parts(workers);
  if (workers == 1) {
    scan_slab(opt, cap, l1.dist_heavy, axis, 0, n, parts[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int k = 0; k < workers; ++k) {
      // contiguous slabs along the first axis, remainder spread over the
      // leading workers
      const int base = n / workers, extra = n % workers;
      const int i_begin = k * base + std::min(k, extra);
      const int i_end = i_begin + base + (k < extra ? 1 : 0);
      threads.emplace_back([&, k, i_begin, i_end] {
        scan_slab(opt, cap, l1.dist_heavy, axis, i_begin, i_end, parts[k]);
      });
    }
    for (auto& t : threads) t.join();
  }

  ScanReport rep;
  rep.mu = opt.mu;
  rep.energy_cap = cap;
  rep.extent = opt.extent;
  rep.n_per_axis = n;
  rep.grid_total = static_cast<std::size_t>(n) * n * n * n;
  rep.bins = fresh_bins();
  rep.l1 = l1;
  // merge in slab order; strict < keeps the earliest grid point on ties, so
  // the result does not depend on the worker count
  for (const Partial& p : parts) {
    rep.retained += p.retained;
    rep.chain_errors += p.chain_errors;
    rep.curvature_errors += p.curvature_errors;
    for (int k = 0; k < 100; ++k) {
      rep.bins[k].count += p.bins[k].count;
      if (p.bins[k].count > 0 && p.bins[k].min_curvature < rep.bins[k].min_curvature) {
        rep.bins[k].min_curvature = p.bins[k].min_curvature;
        rep.bins[k].argmin = p.bins[k].argmin;
      }
    }
    rep.negatives.insert(rep.negatives.end(), p.negatives.begin(), p.negatives.end());
    rep.samples.insert(rep.samples.end(), p.samples.begin(), p.samples.end());
  }
  for (auto& bin : rep.bins) {
    if (bin.count == 0) bin.min_curvature = 0.0;  // empty bins read as 0
  }
  return rep;
}

double threshold_estimate(const ScanReport& report) {
  int top = -1;    // highest non-empty bin
  int worst = -1;  // highest non-empty bin with non-positive minimum
  for (int k = 0; k < static_cast<int>(report.bins.size()); ++k) {
    if (report.bins[k].count == 0) continue;
    top = k;
    if (report.bins[k].min_curvature <= 0.0) worst = k;
  }
  if (top < 0) {
    throw AllNegative("report holds no retained samples");
  }
  if (worst < 0) return 0.0;
  if (worst == top) {
    throw AllNegative("non-positive curvature reaches the outermost sampled bin");
  }
  return report.bins[worst].hi;
}

void write_scan_csv(const ScanReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  out << "w1,w2,z1,z2,q1,q2,energy,rel_dist_heavy,curvature\n";
  for (const CurvatureSample& s : report.samples) {
    out << fmt17(s.point[0]) << ',' << fmt17(s.point[1]) << ','
        << fmt17(s.point[2]) << ',' << fmt17(s.point[3]) << ','
        << fmt17(s.q[0]) << ',' << fmt17(s.q[1]) << ','
        << fmt17(s.energy) << ',' << fmt17(s.rel_dist_heavy) << ','
        << fmt17(s.curvature) << '\n';
  }
}

std::vector<CurvatureSample> read_scan_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error(path + " is empty");
  }
  std::vector<CurvatureSample> samples;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    double v[9];
    for (int i = 0; i < 9; ++i) {
      if (!std::getline(ss, cell, ',')) {
        throw std::runtime_error("short row in " + path);
      }
      v[i] = std::stod(cell);
    }
    CurvatureSample s;
    s.point = {v[0], v[1], v[2], v[3]};
    s.q = {v[4], v[5]};
    s.energy = v[6];
    s.rel_dist_heavy = v[7];
    s.curvature = v[8];
    samples.push_back(s);
  }
  return samples;
}

}  // namespace lsreg
