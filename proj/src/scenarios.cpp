#include "wpent/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace wpent {

namespace {

void check_tgrid(const std::vector<double>& tgrid) {
  if (tgrid.empty()) throw std::invalid_argument("empty time grid");
  if (tgrid.front() < 0.0) throw std::invalid_argument("negative time");
  for (size_t i = 1; i < tgrid.size(); ++i)
    if (!(tgrid[i] > tgrid[i - 1]))
      throw std::invalid_argument("time grid must be strictly increasing");
}

// |J(t->inf)| = |2 b0 K g / alpha^2|
double j_plateau_abs(double omega, double half_rate, double g, cplx b0) {
  const cplx alpha(-half_rate, -omega);
  return std::abs(2.0 * b0 * omega * g / (alpha * alpha));
}

}  // namespace

std::vector<double> time_grid(double t_max, int n) {
  if (n < 2 || !(t_max > 0.0)) throw std::invalid_argument("bad time grid");
  std::vector<double> t(n);
  for (int i = 0; i < n; ++i) t[i] = t_max * i / (n - 1);
  return t;
}

TimeSeries run_two_cavity(const CavityParams& p1, const CavityParams& p2,
                          const std::vector<double>& tgrid) {
  p1.validate();
  p2.validate();
  check_tgrid(tgrid);
  if (std::abs(std::norm(p1.a0) + std::norm(p2.a0) - 1.0) > 1e-9)
    throw std::invalid_argument(
        "run_two_cavity: |a1(0)|^2 + |a2(0)|^2 must be 1");
  const double plateau = j_plateau_abs(p1.Omega, 0.5 * p1.gamma, p1.g, p1.a0) *
                         j_plateau_abs(p2.Omega, 0.5 * p2.gamma, p2.g, p2.a0);
  const double scale = plateau * plateau;  // |lambda_HZ(t->inf)|

  TimeSeries ts;
  ts.columns = {"gamma_t",        "omega_t",       "lambda_hz_raw",
                "lambda_hz_scaled", "lambda_sph_raw", "lambda_sph_scaled"};
  ts.metadata["plateau_abs_lambda_hz"] = scale;
  for (double t : tgrid) {
    const cplx J1 = j_closed(p1, t);
    const cplx J2 = j_closed(p2, t);
    // Single-excitation sector: A2 A1 |psi> = 0, so the fourth moment
    // vanishes exactly and lambda_HZ = -|J1|^2 |J2|^2.
    const WitnessReport hz = lambda_hz(0.0, std::conj(J2) * J1);
    const WitnessReport sph = lambda_sph(FourPartition::from_single_photon(J1, J2));
    ts.rows.push_back({p1.gamma * t, p1.Omega * t, hz.value, hz.value / scale,
                       sph.value, sph.value / scale});
  }
  return ts;
}

TimeSeries run_spontaneous(const AtomParams& p,
                           const std::vector<double>& tgrid) {
  p.validate();
  check_tgrid(tgrid);
  TimeSeries ts;
  ts.columns = {"gamma_t", "omega_t", "mu_hz"};
  double mu_min = 0.0, t_min = 0.0;
  for (double t : tgrid) {
    const cplx JA = j_closed(p, t);
    const double beta2 = std::exp(-p.Gamma * t);
    const WitnessReport r = mu_hz(0.0, std::sqrt(beta2) * std::conj(JA));
    ts.rows.push_back({p.Gamma * t, p.omega_eg * t, r.value});
    if (r.value < mu_min) {
      mu_min = r.value;
      t_min = t;
    }
  }
  ts.metadata["mu_min"] = mu_min;
  ts.metadata["gamma_t_min"] = p.Gamma * t_min;
  return ts;
}

TimeSeries run_superradiance(const EnsembleParams& e,
                             const std::vector<double>& tgrid) {
  e.validate();
  check_tgrid(tgrid);
  const cplx zeta = coherence_zeta(e);
  TimeSeries ts;
  ts.columns = {"gamma_n_t", "omega_t", "mu_hz_sr"};
  ts.metadata["zeta_abs2"] = std::norm(zeta);
  double mu_min = 0.0, t_min = 0.0;
  for (double t : tgrid) {
    const cplx JA = j_closed_core(e.omega_eg, e.gamma_N, e.g, 1.0, t);
    const double value =
        -std::exp(-2.0 * e.gamma_N * t) * std::norm(zeta) * std::norm(JA);
    ts.rows.push_back({e.gamma_N * t, e.omega_eg * t, value});
    if (value < mu_min) {
      mu_min = value;
      t_min = t;
    }
  }
  ts.metadata["mu_min"] = mu_min;
  ts.metadata["gamma_n_t_min"] = e.gamma_N * t_min;
  return ts;
}

EnsembleParams random_ensemble(int N, double k0_mag, double side,
                               std::uint64_t seed) {
  if (N < 1) throw std::invalid_argument("random_ensemble: N < 1");
  EnsembleParams e;
  e.N = N;
  e.positions = Eigen::MatrixXd(N, 3);
  e.k0 = Eigen::Vector3d(0.0, 0.0, k0_mag);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, side);
  for (int j = 0; j < N; ++j)
    for (int ax = 0; ax < 3; ++ax) e.positions(j, ax) = uni(rng);
  return e;
}

namespace {

WpNonclassicalityResult finish_wp(const CovarianceState& s,
                                  const ModeWeights& w, double closed_form) {
  WpNonclassicalityResult out;
  out.sm = lambda_sm(collective_moments(s, w));
  out.bs = bs_nonclassicality(s, w);
  out.closed_form = closed_form;
  return out;
}

}  // namespace

WpNonclassicalityResult run_wp_squeezed_modes(const std::vector<double>& r,
                                              double eps) {
  const int M = static_cast<int>(r.size());
  if (M < 1) throw std::invalid_argument("run_wp_squeezed_modes: no modes");
  CovarianceState s = CovarianceState::vacuum(M);
  double cf = 0.5;
  std::vector<int> modes(M);
  for (int i = 0; i < M; ++i) {
    modes[i] = i;
    s = squeeze_mode(s, i, r[i]);
    const double S = std::sinh(r[i]), C = std::cosh(r[i]);
    cf += eps * (S * S - S * C);
  }
  return finish_wp(s, isolated_mode_weights(M, modes, eps), cf);
}

WpNonclassicalityResult run_wp_profile(const std::vector<double>& r) {
  const int M = static_cast<int>(r.size());
  if (M < 1) throw std::invalid_argument("run_wp_profile: no modes");
  CovarianceState s = CovarianceState::vacuum(M);
  double cf = 0.5;
  for (int i = 0; i < M; ++i) {
    s = squeeze_mode(s, i, r[i]);
    const double S = std::sinh(r[i]), C = std::cosh(r[i]);
    cf += S * S - S * C;
  }
  return finish_wp(s, profile_weights(M), cf);
}

WpNonclassicalityResult run_wp_entangled_pair(double r, double eps) {
  CovarianceState s = CovarianceState::vacuum(2);
  s = two_mode_squeeze(s, PairSqueezing{0, 1, r, 0.0});
  const double S = std::sinh(r), C = std::cosh(r);
  const double cf = 0.5 + 2.0 * eps * (S * S - S * C);
  return finish_wp(s, isolated_mode_weights(2, {0, 1}, eps), cf);
}

TimeSeries run_efield_onset(const CavityParams& p1, const CavityParams& p2,
                            const std::vector<double>& zgrid,
                            const std::vector<double>& tgrid, double V) {
  p1.validate();
  p2.validate();
  check_tgrid(tgrid);
  if (zgrid.empty()) throw std::invalid_argument("run_efield_onset: empty z grid");
  TimeSeries ts;
  ts.columns = {"z1", "z2", "t", "lambda_raw", "lambda_scaled"};
  for (double z1 : zgrid)
    for (double z2 : zgrid)
      for (double t : tgrid) {
        const EfieldHz v = efield_hz(p1, p2, z1, z2, t, V);
        ts.rows.push_back({z1, z2, t, v.raw, v.scaled});
      }
  return ts;
}

}  // namespace wpent
