// wpent: wavepacket entanglement / nonclassicality toolkit CLI.
// Subcommands: run, verify, sweep.  Exit codes: 0 success, 1 verification
// failure, 2 configuration error.

#include <cinttypes>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wpent/config.hpp"
#include "wpent/oracle.hpp"
#include "wpent/scenarios.hpp"

using nlohmann::json;
using namespace wpent;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(const std::filesystem::path& path, const TimeSeries& ts) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  for (size_t c = 0; c < ts.columns.size(); ++c)
    out << (c ? "," : "") << ts.columns[c];
  out << "\n";
  for (const auto& row : ts.rows) {
    for (size_t c = 0; c < row.size(); ++c)
      out << (c ? "," : "") << fmt17(row[c]);
    out << "\n";
  }
}

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

json params_echo(const RunConfig& cfg) {
  json j = json::object();
  for (const auto& [k, v] : cfg.entries()) j[k] = v;
  return j;
}

CavityParams cavity_from(const RunConfig& cfg, const std::string& sec,
                         double a0_default) {
  CavityParams p;
  p.Omega = cfg.get_num(sec + ".omega", 1.0);
  p.gamma = cfg.get_num(sec + ".gamma", 0.01);
  p.g = cfg.get_num(sec + ".g", 1.0);
  p.a0 = cplx(cfg.get_num(sec + ".a0_re", a0_default),
              cfg.get_num(sec + ".a0_im", 0.0));
  return p;
}

AtomParams atom_from(const RunConfig& cfg) {
  AtomParams p;
  p.omega_eg = cfg.get_num("atom.omega_eg", 1.0);
  p.Gamma = cfg.get_num("atom.gamma", 0.01);
  p.g = cfg.get_num("atom.g", 1.0);
  return p;
}

EnsembleParams ensemble_from(const RunConfig& cfg, std::uint64_t seed) {
  const int N = static_cast<int>(cfg.get_int("ensemble.n", 10));
  const double omega_eg = cfg.get_num("ensemble.omega_eg", 1.0);
  const double k0 = cfg.get_num("ensemble.k0", omega_eg);
  const std::string preset = cfg.get_str("ensemble.preset", "colocated");
  EnsembleParams e;
  if (preset == "colocated") {
    e.N = N;
    e.positions = Eigen::MatrixXd::Zero(N, 3);
    e.k0 = Eigen::Vector3d(0.0, 0.0, k0);
  } else if (preset == "random") {
    const double lambda0 = 2.0 * std::numbers::pi / k0;
    const double side = cfg.get_num("ensemble.side", 10.0 * lambda0);
    e = random_ensemble(N, k0, side, seed);
  } else {
    throw ConfigError("ensemble.preset must be colocated or random");
  }
  e.omega_eg = omega_eg;
  e.gamma_N = cfg.get_num("ensemble.gamma_n", 0.01);
  e.g = cfg.get_num("ensemble.g", 1.0);
  return e;
}

struct CliOptions {
  std::string config_path;
  std::string out_dir = "out";
  std::uint64_t seed = 1;
  double tol = -1.0;  // < 0: use per-check defaults
};

json witness_json(const WitnessReport& r) {
  return json{{"name", r.name},
              {"value", r.value},
              {"flagged", r.flagged},
              {"moments", r.moments}};
}

int cmd_run(const RunConfig& cfg, const CliOptions& opt) {
  const std::string scenario = cfg.get_str("run.scenario");
  std::filesystem::create_directories(opt.out_dir);
  json summary;
  summary["version"] = kVersion;
  summary["seed"] = opt.seed;
  summary["scenario"] = scenario;
  summary["params"] = params_echo(cfg);

  auto emit = [&](const TimeSeries& ts) {
    write_csv(std::filesystem::path(opt.out_dir) / (scenario + ".csv"), ts);
    for (const auto& [k, v] : ts.metadata) summary[k] = v;
  };

  if (scenario == "two_cavity") {
    const CavityParams p1 = cavity_from(cfg, "cavity1", 1.0 / std::sqrt(2.0));
    const CavityParams p2 = cavity_from(cfg, "cavity2", 1.0 / std::sqrt(2.0));
    const double gt_max = cfg.get_num("time.t_max_gamma", 10.0);
    const int n = static_cast<int>(cfg.get_int("time.points", 2000));
    const TimeSeries ts = run_two_cavity(p1, p2, time_grid(gt_max / p1.gamma, n));
    double vmin = 0.0;
    for (const auto& row : ts.rows) vmin = std::min(vmin, row[2]);
    summary["lambda_hz_min"] = vmin;
    summary["lambda_hz_final_scaled"] = ts.rows.back()[3];
    emit(ts);
  } else if (scenario == "spontaneous") {
    const AtomParams p = atom_from(cfg);
    const double gt_max = cfg.get_num("time.t_max_gamma", 12.0);
    const int n = static_cast<int>(cfg.get_int("time.points", 2000));
    const TimeSeries ts = run_spontaneous(p, time_grid(gt_max / p.Gamma, n));
    emit(ts);
  } else if (scenario == "superradiance") {
    const EnsembleParams e = ensemble_from(cfg, opt.seed);
    const double gt_max = cfg.get_num("time.t_max_gamma", 12.0);
    const int n = static_cast<int>(cfg.get_int("time.points", 2000));
    const TimeSeries ts = run_superradiance(e, time_grid(gt_max / e.gamma_N, n));
    emit(ts);
  } else if (scenario == "wp_squeezed" || scenario == "wp_profile" ||
             scenario == "wp_entangled") {
    const double r = cfg.get_num("squeeze.r", 1.0);
    WpNonclassicalityResult res;
    if (scenario == "wp_squeezed") {
      const double r2 = cfg.get_num("squeeze.r2", r);
      res = run_wp_squeezed_modes({r, r2}, cfg.get_num("squeeze.eps", 0.01));
    } else if (scenario == "wp_profile") {
      const int M = static_cast<int>(cfg.get_int("squeeze.modes", 8));
      res = run_wp_profile(std::vector<double>(M, r));
    } else {
      res = run_wp_entangled_pair(r, cfg.get_num("squeeze.eps", 0.01));
    }
    summary["lambda_sm"] = witness_json(res.sm);
    summary["bs_sph"] = witness_json(res.bs);
    summary["lambda_sm_closed_form"] = res.closed_form;
    TimeSeries ts;
    ts.columns = {"lambda_sm", "bs_sph"};
    ts.rows.push_back({res.sm.value, res.bs.value});
    write_csv(std::filesystem::path(opt.out_dir) / (scenario + ".csv"), ts);
  } else if (scenario == "efield_onset") {
    const CavityParams p1 = cavity_from(cfg, "cavity1", 1.0 / std::sqrt(2.0));
    const CavityParams p2 = cavity_from(cfg, "cavity2", 1.0 / std::sqrt(2.0));
    const double zmax = cfg.get_num("efield.z_max", 200.0);
    const int zn = static_cast<int>(cfg.get_int("efield.z_points", 20));
    const double tmax = cfg.get_num("efield.t_max", 200.0);
    const int tn = static_cast<int>(cfg.get_int("efield.t_points", 20));
    std::vector<double> zg(zn), tg(tn);
    for (int i = 0; i < zn; ++i) zg[i] = zmax * i / (zn - 1);
    for (int i = 0; i < tn; ++i) tg[i] = tmax * (i + 1) / tn;
    const TimeSeries ts = run_efield_onset(p1, p2, zg, tg);
    emit(ts);
  } else {
    throw ConfigError("unknown scenario: " + scenario);
  }

  write_json(std::filesystem::path(opt.out_dir) / (scenario + "_summary.json"),
             summary);
  return 0;
}

struct VerifyRow {
  std::string quantity;
  double closed = 0.0, oracle_v = 0.0, relerr = 0.0, tol = 0.0;
  bool pass = false;
};

int cmd_verify(const RunConfig& cfg, const CliOptions& opt) {
  (void)cfg;
  std::vector<VerifyRow> rows;
  auto add = [&](const std::string& q, double closed, double oracle_v,
                 double tol) {
    VerifyRow r;
    r.quantity = q;
    r.closed = closed;
    r.oracle_v = oracle_v;
    const double denom = std::max(std::abs(closed), 1e-300);
    r.relerr = std::abs(closed - oracle_v) / denom;
    r.tol = tol;
    r.pass = r.relerr <= tol;
    rows.push_back(r);
  };

  CavityParams p;  // Omega = 1, gamma = 0.01, g = 1
  p.a0 = 1.0;

  // Radial quadrature vs closed form, log-spaced gamma*t.
  const double quad_tol = opt.tol > 0.0 ? opt.tol : 1e-6;
  for (double gt : {0.01, 0.1, 1.0, 10.0}) {
    const double t = gt / p.gamma;
    const cplx jc = j_closed(p, t);
    const cplx jr = oracle::j_numeric_radial(p, t);
    add("j_radial gt=" + std::to_string(gt), std::abs(jc), std::abs(jr),
        quad_tol);
  }
  // k-space double sum.
  for (double gt : {0.1, 0.5, 1.0}) {
    const double t = gt / p.gamma;
    const cplx jc = j_closed(p, t);
    const cplx jk = oracle::j_numeric_ksum(p, t);
    add("j_ksum gt=" + std::to_string(gt),
        0.0, std::abs(jc - jk) / std::abs(jc), 1e-3);
    rows.back().closed = std::abs(jc);
    rows.back().oracle_v = std::abs(jk);
    rows.back().relerr = std::abs(jc - jk) / std::abs(jc);
    rows.back().pass = rows.back().relerr <= 1e-3;
  }
  // Discrete-mode ODE vs Wigner-Weisskopf decay.
  {
    const oracle::OdeResult ode = oracle::amplitudes_ode(1.0, 3.0, 400);
    double maxdev = 0.0;
    for (size_t i = 0; i < ode.times.size(); ++i)
      maxdev = std::max(maxdev,
                        std::abs(std::abs(ode.b[i]) - std::exp(-0.5 * ode.times[i])));
    VerifyRow r;
    r.quantity = "ode_b_decay (bandwidth " + std::to_string(ode.bandwidth) + ")";
    r.closed = 0.0;
    r.oracle_v = maxdev;
    r.relerr = maxdev;
    r.tol = 0.02;
    r.pass = maxdev <= 0.02;
    rows.push_back(r);
  }
  // Truncated-Fock squeezed vacuum vs covariance engine.
  {
    const oracle::FockMoments fm = oracle::fock_squeezed_moments(1.0, 0.0, 41);
    CovarianceState s = squeeze_mode(CovarianceState::vacuum(1), 0, 1.0);
    add("fock_sq n", corr_adag_a(s, 0, 0).real(), fm.n1, 1e-4);
    add("fock_sq aa", corr_aa(s, 0, 0).real(), fm.aa1.real(), 1e-4);
  }
  {
    const oracle::FockMoments fm = oracle::fock_tmsv_moments(0.5, 0.0, 30);
    CovarianceState s =
        two_mode_squeeze(CovarianceState::vacuum(2), PairSqueezing{0, 1, 0.5});
    add("fock_tmsv a1a2", corr_aa(s, 0, 1).real(), fm.a1_a2.real(), 1e-8);
    add("fock_tmsv n", corr_adag_a(s, 0, 0).real(), fm.n1, 1e-8);
  }
  // lambda_sm closed forms vs Wick bruteforce.
  {
    const WpNonclassicalityResult res = run_wp_entangled_pair(1.0, 0.01);
    add("lambda_sm pair", res.closed_form, res.sm.value, 1e-9);
  }
  // ppt vs sph verdict agreement on seeded random Gaussian pairs.
  {
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> ur(0.0, 1.0);
    int agree = 0;
    const int trials = 100;
    for (int i = 0; i < trials; ++i) {
      CovarianceState s = CovarianceState::vacuum(2);
      if (ur(rng) < 0.5)
        s = two_mode_squeeze(s, PairSqueezing{0, 1, 1.2 * ur(rng), 6.28 * ur(rng)});
      s = squeeze_mode(s, 0, 0.8 * ur(rng), 6.28 * ur(rng));
      s = squeeze_mode(s, 1, 0.8 * ur(rng), 6.28 * ur(rng));
      const FourPartition fp = FourPartition::from_covariance(s);
      const bool sph_ent = lambda_sph(fp).flagged;
      const bool ppt_ent = oracle::ppt_check(fp) < 0.5 - 1e-10;
      if (sph_ent == ppt_ent) ++agree;
    }
    add("ppt_vs_sph agreement", 1.0, agree / double(trials), 1e-12);
  }
  // Spontaneous-emission minimum vs dense scan.
  {
    AtomParams ap;
    auto mu = [&](double t) {
      return -std::exp(-ap.Gamma * t) * std::norm(j_closed(ap, t));
    };
    const TimeSeries ts = run_spontaneous(ap, time_grid(12.0 / ap.Gamma, 4001));
    const oracle::ScanMinimum sm = oracle::scan_minimum(mu, 0.0, 12.0 / ap.Gamma, 8000);
    add("mu_hz min depth", ts.metadata.at("mu_min"), sm.value, 1e-3);
  }

  std::printf("%-34s %14s %14s %10s %9s  %s\n", "quantity", "closed", "oracle",
              "relerr", "tol", "status");
  bool all_pass = true;
  for (const auto& r : rows) {
    std::printf("%-34s %14.6e %14.6e %10.2e %9.1e  %s\n", r.quantity.c_str(),
                r.closed, r.oracle_v, r.relerr, r.tol,
                r.pass ? "PASS" : "FAIL");
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}

int cmd_sweep(const RunConfig& cfg, const CliOptions& opt) {
  const std::string axis = cfg.get_str("sweep.axis");
  const double start = cfg.get_num("sweep.start");
  const double stop = cfg.get_num("sweep.stop");
  const int n = static_cast<int>(cfg.get_int("sweep.points"));
  if (n < 1 || !(stop >= start)) throw ConfigError("sweep: empty or bad range");
  std::filesystem::create_directories(opt.out_dir);

  TimeSeries ts;
  json summary;
  summary["version"] = kVersion;
  summary["seed"] = opt.seed;
  summary["axis"] = axis;
  summary["params"] = params_echo(cfg);

  for (int i = 0; i < n; ++i) {
    const double x = (n == 1) ? start : start + (stop - start) * i / (n - 1);
    if (axis == "r") {
      const double eps = cfg.get_num("squeeze.eps", 0.01);
      const WpNonclassicalityResult res = run_wp_entangled_pair(x, eps);
      ts.columns = {"r", "lambda_sm", "bs_sph"};
      ts.rows.push_back({x, res.sm.value, res.bs.value});
    } else if (axis == "gamma_n") {
      EnsembleParams e = ensemble_from(cfg, opt.seed);
      e.gamma_N = x;
      const TimeSeries run = run_superradiance(e, time_grid(12.0 / x, 2000));
      ts.columns = {"gamma_n", "mu_min", "gamma_n_t_min"};
      ts.rows.push_back({x, run.metadata.at("mu_min"),
                         run.metadata.at("gamma_n_t_min")});
    } else if (axis == "n") {
      EnsembleParams e = ensemble_from(cfg, opt.seed);
      e.N = static_cast<int>(x);
      e.positions = Eigen::MatrixXd::Zero(e.N, 3);
      ts.columns = {"n", "zeta_abs2"};
      ts.rows.push_back({x, std::norm(coherence_zeta(e))});
    } else {
      throw ConfigError("sweep.axis must be r, gamma_n or n");
    }
  }
  write_csv(std::filesystem::path(opt.out_dir) / ("sweep_" + axis + ".csv"), ts);
  write_json(std::filesystem::path(opt.out_dir) / ("sweep_" + axis + "_summary.json"),
             summary);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wavepacket entanglement witness toolkit"};
  app.require_subcommand(1);
  CliOptions opt;
  bool seed_given = false, tol_given = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config_path, "configuration file path");
    sub->add_option("--out", opt.out_dir, "output directory");
    sub->add_option("--seed", opt.seed, "RNG seed")
        ->each([&](const std::string&) { seed_given = true; });
    sub->add_option("--tol", opt.tol, "tolerance override")
        ->each([&](const std::string&) { tol_given = true; });
  };
  CLI::App* run = app.add_subcommand("run", "run a scenario");
  CLI::App* verify = app.add_subcommand("verify", "closed form vs oracle table");
  CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep");
  add_common(run);
  add_common(verify);
  add_common(sweep);

  CLI11_PARSE(app, argc, argv);

  try {
    // Environment overrides (lower priority than explicit flags).
    if (const char* v = std::getenv("WPENT_CONFIG"); v && opt.config_path.empty())
      opt.config_path = v;
    if (const char* v = std::getenv("WPENT_OUT"); v && opt.out_dir == "out")
      opt.out_dir = v;
    if (const char* v = std::getenv("WPENT_SEED"); v && !seed_given)
      opt.seed = std::strtoull(v, nullptr, 10);
    if (const char* v = std::getenv("WPENT_TOL"); v && !tol_given)
      opt.tol = std::strtod(v, nullptr);

    RunConfig cfg;
    if (!opt.config_path.empty()) cfg = RunConfig::from_file(opt.config_path);
    if (cfg.has("run.seed") && !seed_given && !std::getenv("WPENT_SEED"))
      opt.seed = static_cast<std::uint64_t>(cfg.get_int("run.seed"));
    if (cfg.has("run.tol") && !tol_given && !std::getenv("WPENT_TOL"))
      opt.tol = cfg.get_num("run.tol");
    if (cfg.has("output.dir") && opt.out_dir == "out" && !std::getenv("WPENT_OUT"))
      opt.out_dir = cfg.get_str("output.dir");

    if (run->parsed()) return cmd_run(cfg, opt);
    if (verify->parsed()) return cmd_verify(cfg, opt);
    if (sweep->parsed()) return cmd_sweep(cfg, opt);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
