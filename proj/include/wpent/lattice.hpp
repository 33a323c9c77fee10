#pragma once
// Discrete spatial / momentum grids and the collective-mode weights that
// realize A = sum_r a(r).  Natural units: c = hbar = eps0 = 1.

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace wpent {

using cplx = std::complex<double>;

struct GridSpec {
  int dimension = 1;  // 1 or 3
  double extent = 1.0;  // length per axis
  int points_per_axis = 2;

  int total_points() const;
  double volume() const;       // extent^dimension
  double cell_volume() const;  // (extent/points)^dimension
  void validate() const;       // throws std::invalid_argument
};

// r-points laid out as j*dx per axis, row-major over axes.
struct RGrid {
  int dimension = 1;
  double spacing = 0.0;
  Eigen::MatrixXd points;  // N x dimension
};

// DFT-commensurate k-grid: k_n = 2*pi*n/L, n in {-floor(N/2) .. ceil(N/2)-1}.
struct KGrid {
  int dimension = 1;
  double dk = 0.0;
  Eigen::MatrixXd k;  // N x dimension
  // Per-mode weight for sum_k -> V/(2pi)^d int d^dk; equals 1 on a
  // commensurate grid (V/(2pi)^d * dk^d = 1).
  double integral_weight = 1.0;
};

std::pair<RGrid, KGrid> build_grids(const GridSpec& spec);

enum class RegionKind { FullSpace, Subvolume, IsolatedMode };

struct ModeWeights {
  RegionKind kind = RegionKind::FullSpace;
  Eigen::VectorXcd w;  // one complex weight per k-mode
};

// w_k = (1/N_region) sum_{r in region} e^{i k.r}; region given as r-point
// indices into rgrid.points.
ModeWeights detector_weights(const RGrid& rgrid, const KGrid& kgrid,
                             const std::vector<int>& region);

// Full-space region on a commensurate grid: w = delta_{k,0}.
ModeWeights full_space_weights(const KGrid& kgrid);

// Isolated-mode prescription of the wavepacket noise analysis: each listed
// mode carries weight sqrt(eps), eps = (dr)^3/V by default.  eps is an
// explicit parameter because the literal discrete region sum gives a
// Dirichlet kernel, not a flat 1/N_r.
ModeWeights isolated_mode_weights(int n_modes, const std::vector<int>& modes,
                                  double eps);

// Uniform per-mode weight 1: the "profile" preset used for continuous
// squeezing profiles (the sum over r collapses mode by mode).
ModeWeights profile_weights(int n_modes);

// sum_k |w_k|^2; equals 1 for full-space weights so [A, A^dag] = 1.
double commutator_norm(const ModeWeights& w);

}  // namespace wpent
