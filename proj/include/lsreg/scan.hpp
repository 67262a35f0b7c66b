#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "lsreg/hamiltonians.hpp"
#include "lsreg/vec.hpp"

namespace lsreg {

struct CurvatureSample {
  Vec4 point{};              // (w1, w2, z1, z2)
  Vec2 q{};                  // rotating-frame position of the recovered state
  double energy = 0.0;
  double rel_dist_heavy = 0.0;
  double curvature = 0.0;
};

struct RadialBin {
  double lo = 0.0;           // bin covers (lo, hi] in rel_dist_heavy
  double hi = 0.0;
  std::size_t count = 0;
  double min_curvature = 0.0;
  Vec4 argmin{};             // grid point attaining the minimum
};

struct ScanOptions {
  double mu = 0.0;
  // Retention cap on the rotating-frame energy. NaN means "use the L1 rest
  // energy", the boundary below which the region around the heavy primary is
  // dynamically closed off.
  double energy_cap = std::numeric_limits<double>::quiet_NaN();
  double extent = 1.5;
  int n_per_axis = 21;
  int workers = 1;
  bool keep_samples = false;  // retain every sample, not just bin summaries
};

struct ScanReport {
  double mu = 0.0;
  double energy_cap = 0.0;
  double extent = 0.0;
  int n_per_axis = 0;
  std::size_t grid_total = 0;
  std::size_t retained = 0;        // samples that passed both filters and
                                   // produced a finite curvature
  std::size_t chain_errors = 0;    // grid points the chain refused
  std::size_t curvature_errors = 0;  // retained points whose probes failed
  std::vector<RadialBin> bins;     // 100 bins of width 0.01 over (0, 1]
  std::vector<CurvatureSample> negatives;  // retained samples with curvature <= 0
  std::vector<CurvatureSample> samples;    // only if keep_samples
  LagrangePointL1 l1{};
};

// Uniform grid over [-extent, extent]^4 in (w1, w2, z1, z2). Each grid point
// runs the full chain; points that error out are counted and skipped, the
// rest are kept when energy <= energy_cap and rel_dist_heavy <= 1, and every
// kept point gets a finite-difference tangential curvature. Results are
// accumulated into 0.01-wide bins of rel_dist_heavy.
//
// The grid splits into contiguous slabs along the first axis, one per
// worker. Merging follows slab order, bin minima break ties toward the
// earlier grid index, and each sample is computed identically regardless of
// the split, so the report is bit-for-bit independent of the worker count.
ScanReport grid_scan(const ScanOptions& opt);

// Smallest bin boundary above which every non-empty bin has strictly
// positive minimum curvature; 0 when no bin dips to zero at all. Throws
// AllNegative when even the outermost non-empty bin is non-positive (no
// usable boundary exists) or when the report holds no samples.
double threshold_estimate(const ScanReport& report);

// Retained samples as CSV with header
//   w1,w2,z1,z2,q1,q2,energy,rel_dist_heavy,curvature
// (requires keep_samples). Values are printed with 17 significant digits.
void write_scan_csv(const ScanReport& report, const std::string& path);

// Reads the CSV format above back into samples.
std::vector<CurvatureSample> read_scan_csv(const std::string& path);

}  // namespace lsreg
