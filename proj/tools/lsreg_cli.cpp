// Command-line front end. Every subcommand prints a JSON document to stdout
// (CSV table output goes to --out files); errors go to stderr. Exit codes:
//   0  success
//   1  verification sweep failed
//   2  domain error from the maps (collision, north pole, zero energy, ...)
//   64 usage, config or input-file problems
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lsreg/curvature.hpp"
#include "lsreg/hamiltonians.hpp"
#include "lsreg/json_io.hpp"
#include "lsreg/kepler_equation.hpp"
#include "lsreg/ls_map.hpp"
#include "lsreg/minimize.hpp"
#include "lsreg/orbit.hpp"
#include "lsreg/scan.hpp"
#include "lsreg/verify.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return json::parse(f);
}

// Fills `target` from config section `sec` unless the flag was given on the
// command line. Config keys are the long option names without the dashes.
template <class T>
void config_override(const json& sec, const char* key, const CLI::Option* opt,
                     T& target) {
  if (opt->count() > 0) return;
  if (!sec.is_object() || !sec.contains(key)) return;
  target = sec.at(key).get<T>();
}

ordered_json extreme_json(const lsreg::GridExtreme& e) {
  return {{"value", e.value}, {"x", e.x}, {"y", e.y}};
}

ordered_json l1_json(const lsreg::LagrangePointL1& l1) {
  return {{"position", l1.position},
          {"energy", l1.energy},
          {"dist_heavy", l1.dist_heavy}};
}

ordered_json minimum_json(const lsreg::MinimizeResult& r) {
  return {{"point", r.point},
          {"curvature", r.curvature},
          {"energy", r.energy},
          {"rel_dist_heavy", r.rel_dist_heavy},
          {"constraint_violation", r.constraint_violation},
          {"converged", r.converged},
          {"stages", r.stages},
          {"total_iterations", r.total_iterations}};
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  return f;
}

lsreg::ComplexPair pair_at(const lsreg::Vec4& pt) {
  return {{pt[0], pt[1]}, {pt[2], pt[3]}};
}

int run(int argc, char** argv) {
  CLI::App app{"Ligon-Schaaf regularization toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path,
                 "JSON file with per-subcommand option defaults");

  // kepler-fn: the transcendental angle equation on its own
  auto* kep = app.add_subcommand(
      "kepler-fn", "Root and grid sweeps of phi = x sin(phi) - y cos(phi)");
  kep->require_subcommand(1);

  double kx = 0.0, ky = 0.0;
  auto* kep_solve = kep->add_subcommand("solve", "Solve for one (x, y)");
  kep_solve->add_option("x", kx, "sin coefficient")->required();
  kep_solve->add_option("y", ky, "cos coefficient")->required();

  double glo = -1.0, ghi = 1.0, gstep = 0.01;
  std::string gout;
  auto* kep_grid =
      kep->add_subcommand("grid", "Tabulate the root over a square grid");
  auto* o_glo = kep_grid->add_option("--lo", glo, "grid start (both axes)");
  auto* o_ghi = kep_grid->add_option("--hi", ghi, "grid end");
  auto* o_gstep = kep_grid->add_option("--step", gstep, "grid spacing");
  kep_grid->add_option("--out", gout, "write x,y,phi rows as CSV");

  // map: one state through the regularization, either direction
  std::string map_dir, map_in, map_out;
  auto* map_cmd =
      app.add_subcommand("map", "Apply the regularizing map to a JSON state");
  map_cmd->add_option("direction", map_dir, "fwd or inv")
      ->required()
      ->check(CLI::IsMember({"fwd", "inv"}));
  map_cmd->add_option("--in", map_in, "input state file (default: stdin)");
  map_cmd->add_option("--out", map_out, "output file (default: stdout)");

  // orbit: propagate a bound state and tabulate elements
  std::vector<double> oq, op;
  double t_end = 0.0;
  int samples = 100;
  std::string orbit_out;
  auto* orbit_cmd = app.add_subcommand(
      "orbit", "Propagate a bound state by the regularized flow");
  orbit_cmd->add_option("--q", oq, "initial position (3 values)")
      ->expected(3)
      ->required();
  orbit_cmd->add_option("--p", op, "initial momentum (3 values)")
      ->expected(3)
      ->required();
  auto* o_tend =
      orbit_cmd->add_option("--t-end", t_end, "final time")->required();
  auto* o_samples =
      orbit_cmd->add_option("--samples", samples, "number of output rows");
  orbit_cmd->add_option("--out", orbit_out, "write the table as CSV");

  // curvature: one tangential-curvature evaluation
  std::string cv_system = "kepler";
  double cv_mu = 0.0;
  std::vector<double> cv_point;
  bool cv_rich = false;
  auto* cv_cmd = app.add_subcommand(
      "curvature", "Tangential curvature of an energy level set");
  auto* o_cvsys =
      cv_cmd->add_option("--system", cv_system, "kepler, rotating or cr3bp")
          ->check(CLI::IsMember({"kepler", "rotating", "cr3bp"}));
  auto* o_cvmu = cv_cmd->add_option("--mu", cv_mu, "mass ratio (cr3bp only)");
  cv_cmd->add_option("--point", cv_point, "evaluation point (w1 w2 z1 z2)")
      ->expected(4)
      ->required();
  auto* o_cvrich = cv_cmd->add_flag("--richardson", cv_rich,
                                    "extrapolated finite differences");

  // scan: curvature over a grid in the squared coordinates
  double sc_mu = 0.0, sc_cap = std::numeric_limits<double>::quiet_NaN();
  double sc_extent = 1.5;
  int sc_n = 21;
  int sc_workers = std::max(1u, std::thread::hardware_concurrency());
  std::string sc_out;
  auto* sc_cmd =
      app.add_subcommand("scan", "Grid scan of the chain curvature");
  auto* o_scmu = sc_cmd->add_option("--mu", sc_mu, "mass ratio");
  auto* o_sccap = sc_cmd->add_option("--energy-cap", sc_cap,
                                     "retention cap (default: L1 energy)");
  auto* o_scext = sc_cmd->add_option("--extent", sc_extent, "grid half-width");
  auto* o_scn = sc_cmd->add_option("--n", sc_n, "grid points per axis");
  auto* o_scw = sc_cmd->add_option("--workers", sc_workers, "thread count");
  sc_cmd->add_option("--out", sc_out, "write retained samples as CSV");

  // minimize: polish the best scan samples
  double mn_mu = 0.0, mn_cap = std::numeric_limits<double>::quiet_NaN();
  double mn_floor = 0.0;
  int mn_top = 20;
  std::string mn_starts, mn_out;
  auto* mn_cmd = app.add_subcommand(
      "minimize", "Constrained curvature minimization from scan samples");
  auto* o_mnmu = mn_cmd->add_option("--mu", mn_mu, "mass ratio");
  auto* o_mncap = mn_cmd->add_option("--energy-cap", mn_cap,
                                     "feasibility cap (default: L1 energy)");
  auto* o_mnstarts = mn_cmd->add_option("--starts-from", mn_starts,
                                        "scan CSV to draw starts from");
  auto* o_mntop =
      mn_cmd->add_option("--top", mn_top, "number of starts to polish");
  auto* o_mnfloor = mn_cmd->add_option(
      "--min-rel-dist", mn_floor,
      "only start from samples with rel_dist_heavy above this");
  mn_cmd->add_option("--out", mn_out, "write the minima as CSV");

  // l1: the collinear equilibrium on its own
  double l1_mu = 0.0;
  auto* l1_cmd =
      app.add_subcommand("l1", "Locate the collinear point between the primaries");
  auto* o_l1mu = l1_cmd->add_option("--mu", l1_mu, "mass ratio");

  // verify: the invariant sweep
  unsigned vf_seed = 19937;
  auto* vf_cmd = app.add_subcommand("verify", "Run the invariant sweeps");
  auto* o_vfseed = vf_cmd->add_option("--seed", vf_seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  json cfg = json::object();
  if (!config_path.empty()) cfg = load_json_file(config_path);
  auto section = [&cfg](const char* name) -> json {
    return cfg.is_object() && cfg.contains(name) ? cfg.at(name)
                                                 : json::object();
  };

  if (kep_solve->parsed()) {
    const lsreg::KeplerRoot root = lsreg::solve_elliptic(kx, ky);
    print_json({{"phi", root.phi},
                {"residual", root.residual},
                {"iterations", root.iterations}});
    return 0;
  }

  if (kep_grid->parsed()) {
    const json sec = section("kepler-fn");
    config_override(sec, "lo", o_glo, glo);
    config_override(sec, "hi", o_ghi, ghi);
    config_override(sec, "step", o_gstep, gstep);
    const lsreg::GridReport rep = lsreg::kepler_function_grid(glo, ghi, gstep);
    ordered_json j{{"lo", rep.lo},
                   {"hi", rep.hi},
                   {"step", rep.step},
                   {"n", rep.n},
                   {"phi_min", extreme_json(rep.phi_min)},
                   {"phi_max", extreme_json(rep.phi_max)},
                   {"dphi_dx_min", extreme_json(rep.dphi_dx_min)},
                   {"dphi_dx_max", extreme_json(rep.dphi_dx_max)},
                   {"dphi_dy_min", extreme_json(rep.dphi_dy_min)},
                   {"dphi_dy_max", extreme_json(rep.dphi_dy_max)},
                   {"grad_mag_max", extreme_json(rep.grad_mag_max)},
                   {"max_abs_dphi_dx", rep.max_abs_dphi_dx},
                   {"masked", rep.masked}};
    if (!gout.empty()) {
      std::ofstream f = open_out(gout);
      f << "x,y,phi\n";
      for (int ix = 0; ix < rep.n; ++ix) {
        for (int iy = 0; iy < rep.n; ++iy) {
          f << lsreg::fmt17(rep.axis[ix]) << ',' << lsreg::fmt17(rep.axis[iy])
            << ',' << lsreg::fmt17(rep.phi[ix * rep.n + iy]) << '\n';
        }
      }
      j["out"] = gout;
    }
    print_json(j);
    return 0;
  }

  if (map_cmd->parsed()) {
    json in;
    if (map_in.empty()) {
      in = json::parse(std::cin);
    } else {
      in = load_json_file(map_in);
    }
    ordered_json out;
    if (map_dir == "fwd") {
      if (lsreg::is_sphere_json(in)) {
        throw std::runtime_error(
            "fwd expects a cartesian state {\"q\": [...], \"p\": [...]}");
      }
      out = lsreg::to_json(lsreg::ls_forward(lsreg::cartesian_from_json(in)));
    } else {
      if (!lsreg::is_sphere_json(in)) {
        throw std::runtime_error(
            "inv expects a sphere state {\"xi\": [...], \"eta\": [...]}");
      }
      out = lsreg::to_json(lsreg::ls_inverse(lsreg::sphere_from_json(in)));
    }
    if (map_out.empty()) {
      print_json(out);
    } else {
      open_out(map_out) << out.dump(2) << "\n";
    }
    return 0;
  }

  if (orbit_cmd->parsed()) {
    const json sec = section("orbit");
    config_override(sec, "t-end", o_tend, t_end);
    config_override(sec, "samples", o_samples, samples);
    if (samples < 2) throw std::runtime_error("--samples must be at least 2");
    const lsreg::CartesianState st{{oq[0], oq[1], oq[2]},
                                   {op[0], op[1], op[2]}};
    const double T = lsreg::period(st.hamiltonian());
    const std::vector<std::string> columns{"t",  "q1", "q2", "q3", "p1",
                                           "p2", "p3", "ell", "g",  "h",
                                           "Lc", "Gc", "Hc"};
    std::vector<std::vector<double>> rows;
    rows.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
      const double t = t_end * i / (samples - 1);
      const lsreg::CartesianState cur = lsreg::propagate(st, t);
      const lsreg::ElementSet es = lsreg::elements(cur);
      rows.push_back({t, cur.q[0], cur.q[1], cur.q[2], cur.p[0], cur.p[1],
                      cur.p[2], es.delaunay.ell, es.delaunay.g, es.delaunay.h,
                      es.delaunay.L, es.delaunay.G, es.delaunay.H});
    }
    if (orbit_out.empty()) {
      print_json({{"columns", columns}, {"rows", rows}});
    } else {
      std::ofstream f = open_out(orbit_out);
      for (std::size_t c = 0; c < columns.size(); ++c) {
        f << columns[c] << (c + 1 < columns.size() ? ',' : '\n');
      }
      for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          f << lsreg::fmt17(row[c]) << (c + 1 < row.size() ? ',' : '\n');
        }
      }
      print_json({{"out", orbit_out},
                  {"rows", samples},
                  {"t_end", t_end},
                  {"period", T}});
    }
    return 0;
  }

  if (cv_cmd->parsed()) {
    const json sec = section("curvature");
    config_override(sec, "system", o_cvsys, cv_system);
    config_override(sec, "mu", o_cvmu, cv_mu);
    config_override(sec, "richardson", o_cvrich, cv_rich);
    const lsreg::Vec4 pt{cv_point[0], cv_point[1], cv_point[2], cv_point[3]};
    ordered_json j{{"system", cv_system}, {"point", pt}};
    auto curvature_of = [&](auto&& field) {
      return cv_rich ? lsreg::tangential_curvature_richardson(field, pt)
                     : lsreg::tangential_curvature(field, pt);
    };
    if (cv_system == "kepler") {
      j["curvature"] = curvature_of([](const lsreg::Vec4& v) {
        return lsreg::regularized_kepler_energy(pair_at(v));
      });
      j["closed_form"] = lsreg::kepler_curvature_closed(pt);
    } else if (cv_system == "rotating") {
      j["curvature"] = curvature_of([](const lsreg::Vec4& v) {
        return lsreg::regularized_rotating_energy(pair_at(v));
      });
      j["closed_form"] = lsreg::rotating_curvature_closed(pt);
    } else {
      const lsreg::LagrangePointL1 l1 = lsreg::locate_L1(cv_mu);
      j["mu"] = cv_mu;
      j["curvature"] =
          curvature_of([&, dh = l1.dist_heavy](const lsreg::Vec4& v) {
            return lsreg::cr3bp_chain_energy(pair_at(v), cv_mu, dh).energy;
          });
      // at mu = 0 the chain energy coincides with the rotating form exactly
      if (cv_mu == 0.0) j["closed_form"] = lsreg::rotating_curvature_closed(pt);
      const lsreg::ChainEval ce =
          lsreg::cr3bp_chain_energy(pair_at(pt), cv_mu, l1.dist_heavy);
      j["energy"] = ce.energy;
      j["q"] = ce.q;
      j["p"] = ce.p;
      j["rel_dist_heavy"] = ce.rel_dist_heavy;
    }
    j["richardson"] = cv_rich;
    print_json(j);
    return 0;
  }

  if (sc_cmd->parsed()) {
    const json sec = section("scan");
    config_override(sec, "mu", o_scmu, sc_mu);
    config_override(sec, "energy-cap", o_sccap, sc_cap);
    config_override(sec, "extent", o_scext, sc_extent);
    config_override(sec, "n", o_scn, sc_n);
    config_override(sec, "workers", o_scw, sc_workers);
    if (o_scmu->count() == 0 && !sec.contains("mu")) {
      throw std::runtime_error("scan requires --mu (or a config value)");
    }
    lsreg::ScanOptions opt;
    opt.mu = sc_mu;
    opt.energy_cap = sc_cap;
    opt.extent = sc_extent;
    opt.n_per_axis = sc_n;
    opt.workers = sc_workers;
    opt.keep_samples = !sc_out.empty();
    const lsreg::ScanReport rep = lsreg::grid_scan(opt);
    ordered_json j{{"mu", rep.mu},
                   {"energy_cap", rep.energy_cap},
                   {"extent", rep.extent},
                   {"n_per_axis", rep.n_per_axis},
                   {"workers", opt.workers},
                   {"grid_total", rep.grid_total},
                   {"retained", rep.retained},
                   {"chain_errors", rep.chain_errors},
                   {"curvature_errors", rep.curvature_errors},
                   {"l1", l1_json(rep.l1)},
                   {"negatives_count", rep.negatives.size()}};
    try {
      j["threshold"] = lsreg::threshold_estimate(rep);
      j["all_negative"] = false;
    } catch (const lsreg::AllNegative&) {
      j["all_negative"] = true;
    }
    ordered_json bins = ordered_json::array();
    for (const auto& b : rep.bins) {
      if (b.count == 0) continue;
      bins.push_back({{"lo", b.lo},
                      {"hi", b.hi},
                      {"count", b.count},
                      {"min_curvature", b.min_curvature},
                      {"argmin", b.argmin}});
    }
    j["bins"] = bins;
    if (!sc_out.empty()) {
      lsreg::write_scan_csv(rep, sc_out);
      j["out"] = sc_out;
      j["samples_written"] = rep.samples.size();
    }
    print_json(j);
    return 0;
  }

  if (mn_cmd->parsed()) {
    const json sec = section("minimize");
    config_override(sec, "mu", o_mnmu, mn_mu);
    config_override(sec, "energy-cap", o_mncap, mn_cap);
    config_override(sec, "starts-from", o_mnstarts, mn_starts);
    config_override(sec, "top", o_mntop, mn_top);
    config_override(sec, "min-rel-dist", o_mnfloor, mn_floor);
    if (o_mnmu->count() == 0 && !sec.contains("mu")) {
      throw std::runtime_error("minimize requires --mu (or a config value)");
    }
    if (mn_starts.empty()) {
      throw std::runtime_error("minimize requires --starts-from");
    }
    std::vector<lsreg::CurvatureSample> samples_in =
        lsreg::read_scan_csv(mn_starts);
    samples_in.erase(
        std::remove_if(samples_in.begin(), samples_in.end(),
                       [&](const lsreg::CurvatureSample& s) {
                         return !(s.rel_dist_heavy > mn_floor);
                       }),
        samples_in.end());
    std::stable_sort(samples_in.begin(), samples_in.end(),
                     [](const auto& a, const auto& b) {
                       return a.curvature < b.curvature;
                     });
    if (samples_in.empty()) {
      throw std::runtime_error("no usable starts in " + mn_starts);
    }
    if (static_cast<int>(samples_in.size()) > mn_top) {
      samples_in.resize(static_cast<std::size_t>(mn_top));
    }

    std::vector<lsreg::MinimizeResult> minima;
    ordered_json infeasible = ordered_json::array();
    for (const auto& s : samples_in) {
      try {
        minima.push_back(lsreg::constrained_minimize(mn_mu, s.point, mn_cap));
      } catch (const lsreg::InfeasibleStart& e) {
        infeasible.push_back({{"point", s.point}, {"error", e.what()}});
      }
    }
    std::stable_sort(minima.begin(), minima.end(),
                     [](const auto& a, const auto& b) {
                       if (std::isnan(a.curvature)) return false;
                       if (std::isnan(b.curvature)) return true;
                       return a.curvature < b.curvature;
                     });
    // polishing nearby starts lands on the same minimum; keep one of each
    std::vector<lsreg::MinimizeResult> unique;
    for (const auto& r : minima) {
      bool dup = false;
      for (const auto& u : unique) {
        if (lsreg::max_abs_diff(r.point, u.point) < 1e-4) {
          dup = true;
          break;
        }
      }
      if (!dup) unique.push_back(r);
    }

    const double cap_used =
        std::isnan(mn_cap) ? lsreg::locate_L1(mn_mu).energy : mn_cap;
    ordered_json results = ordered_json::array();
    for (const auto& r : unique) results.push_back(minimum_json(r));
    ordered_json j{{"mu", mn_mu},
                   {"energy_cap", cap_used},
                   {"starts_used", samples_in.size()},
                   {"results", results}};
    if (!infeasible.empty()) j["infeasible_starts"] = infeasible;
    if (!mn_out.empty()) {
      std::ofstream f = open_out(mn_out);
      f << "w1,w2,z1,z2,curvature,energy,rel_dist_heavy,constraint_violation,"
           "converged\n";
      for (const auto& r : unique) {
        for (int i = 0; i < 4; ++i) f << lsreg::fmt17(r.point[i]) << ',';
        f << lsreg::fmt17(r.curvature) << ',' << lsreg::fmt17(r.energy) << ','
          << lsreg::fmt17(r.rel_dist_heavy) << ','
          << lsreg::fmt17(r.constraint_violation) << ','
          << (r.converged ? 1 : 0) << '\n';
      }
      j["out"] = mn_out;
    }
    print_json(j);
    return 0;
  }

  if (l1_cmd->parsed()) {
    const json sec = section("l1");
    config_override(sec, "mu", o_l1mu, l1_mu);
    const lsreg::LagrangePointL1 l1v = lsreg::locate_L1(l1_mu);
    print_json({{"mu", l1_mu},
                {"position", l1v.position},
                {"energy", l1v.energy},
                {"dist_heavy", l1v.dist_heavy}});
    return 0;
  }

  if (vf_cmd->parsed()) {
    const json sec = section("verify");
    config_override(sec, "seed", o_vfseed, vf_seed);
    const std::vector<lsreg::SuiteResult> suites =
        lsreg::run_verification(vf_seed);
    bool all = true;
    ordered_json arr = ordered_json::array();
    for (const auto& s : suites) {
      all = all && s.pass;
      arr.push_back({{"name", s.name},
                     {"cases", s.cases},
                     {"max_residual", s.max_residual},
                     {"tolerance", s.tolerance},
                     {"pass", s.pass}});
    }
    print_json({{"seed", vf_seed}, {"pass", all}, {"suites", arr}});
    return all ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const lsreg::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  }
}
