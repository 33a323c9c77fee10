#pragma once
// End-to-end reproductions of the physical setups, producing witness time
// series.

#include <map>
#include <string>
#include <vector>

#include "wpent/gaussian.hpp"
#include "wpent/singlephoton.hpp"
#include "wpent/witnesses.hpp"

namespace wpent {

struct TimeSeries {
  std::string time_column = "t";
  std::vector<std::string> columns;          // includes the time column(s)
  std::vector<std::vector<double>> rows;     // one row per time point
  std::map<std::string, double> metadata;    // normalization constants etc.
};

// Uniform time grid helper (n points over [0, t_max], t_0 = 0).
std::vector<double> time_grid(double t_max, int n);

// Two damped cavities, single shared excitation.  Columns: gamma_t, omega_t,
// lambda_hz_raw, lambda_hz_scaled, lambda_sph_raw, lambda_sph_scaled; scaled
// values are divided by the analytic t->infinity plateau of |lambda_HZ|.
TimeSeries run_two_cavity(const CavityParams& p1, const CavityParams& p2,
                          const std::vector<double>& tgrid);

// Spontaneous emission: mu_HZ(t) = -e^{-Gamma t} |J_A(t)|^2.
TimeSeries run_spontaneous(const AtomParams& p,
                           const std::vector<double>& tgrid);

// Single-photon superradiance: mu^{SR}(t) = -e^{-2 gamma_N t} |zeta|^2
// |J_A(t, gamma_N)|^2.  (Sign chosen by witness semantics; see notes.)
TimeSeries run_superradiance(const EnsembleParams& e,
                             const std::vector<double>& tgrid);

// Uniformly random atom positions in a cube of side `side` (default 10
// wavelengths), deterministic in the seed.
EnsembleParams random_ensemble(int N, double k0_mag, double side,
                               std::uint64_t seed);

struct WpNonclassicalityResult {
  WitnessReport sm;        // lambda_sm of the collective mode
  WitnessReport bs;        // BS-SPH verdict on the same state
  double closed_form = 0.0;  // analytic lambda_sm where available, else NaN
};

// (a) isolated squeezed modes with weight sqrt(eps) each,
// (b) continuous profile (per-mode weight 1),
// (c) entangled constituent pair with weight sqrt(eps) each.
WpNonclassicalityResult run_wp_squeezed_modes(const std::vector<double>& r,
                                              double eps);
WpNonclassicalityResult run_wp_profile(const std::vector<double>& r);
WpNonclassicalityResult run_wp_entangled_pair(double r, double eps);

// E-field HZ correlation map over (z1, z2, t); exact zero outside either
// light cone.  Columns: z1, z2, t, lambda_raw, lambda_scaled.
TimeSeries run_efield_onset(const CavityParams& p1, const CavityParams& p2,
                            const std::vector<double>& zgrid,
                            const std::vector<double>& tgrid, double V = 1.0);

}  // namespace wpent
