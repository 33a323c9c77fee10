#include "wpent/lattice.hpp"

#include <cmath>
#include <numbers>

namespace wpent {

int GridSpec::total_points() const {
  int n = 1;
  for (int d = 0; d < dimension; ++d) n *= points_per_axis;
  return n;
}

double GridSpec::volume() const { return std::pow(extent, dimension); }

double GridSpec::cell_volume() const {
  return std::pow(extent / points_per_axis, dimension);
}

void GridSpec::validate() const {
  if (dimension != 1 && dimension != 3)
    throw std::invalid_argument("GridSpec: dimension must be 1 or 3");
  if (!(extent > 0.0))
    throw std::invalid_argument("GridSpec: extent must be positive");
  if (points_per_axis < 2)
    throw std::invalid_argument("GridSpec: points_per_axis must be >= 2");
}

std::pair<RGrid, KGrid> build_grids(const GridSpec& spec) {
  spec.validate();
  const int d = spec.dimension;
  const int n = spec.points_per_axis;
  const int ntot = spec.total_points();
  const double dx = spec.extent / n;
  const double dk = 2.0 * std::numbers::pi / spec.extent;

  RGrid rg{d, dx, Eigen::MatrixXd(ntot, d)};
  KGrid kg{d, dk, Eigen::MatrixXd(ntot, d), 1.0};

  const int nlo = -(n / 2);  // DFT index range {-floor(n/2) .. ceil(n/2)-1}
  for (int idx = 0; idx < ntot; ++idx) {
    int rem = idx;
    for (int ax = d - 1; ax >= 0; --ax) {
      const int j = rem % n;
      rem /= n;
      rg.points(idx, ax) = j * dx;
      kg.k(idx, ax) = (nlo + j) * dk;
    }
  }
  return {std::move(rg), std::move(kg)};
}

ModeWeights detector_weights(const RGrid& rgrid, const KGrid& kgrid,
                             const std::vector<int>& region) {
  if (region.empty())
    throw std::invalid_argument("detector_weights: empty region");
  const int nk = static_cast<int>(kgrid.k.rows());
  ModeWeights mw;
  mw.kind = (static_cast<int>(region.size()) == rgrid.points.rows())
                ? RegionKind::FullSpace
                : RegionKind::Subvolume;
  mw.w = Eigen::VectorXcd::Zero(nk);
  for (int ik = 0; ik < nk; ++ik) {
    cplx acc = 0.0;
    for (int ir : region) {
      if (ir < 0 || ir >= rgrid.points.rows())
        throw std::invalid_argument("detector_weights: region index out of grid");
      const double phase = kgrid.k.row(ik).dot(rgrid.points.row(ir));
      acc += std::polar(1.0, phase);
    }
    mw.w[ik] = acc / static_cast<double>(region.size());
  }
  return mw;
}

ModeWeights full_space_weights(const KGrid& kgrid) {
  const int nk = static_cast<int>(kgrid.k.rows());
  ModeWeights mw;
  mw.kind = RegionKind::FullSpace;
  mw.w = Eigen::VectorXcd::Zero(nk);
  for (int ik = 0; ik < nk; ++ik)
    if (kgrid.k.row(ik).norm() == 0.0) mw.w[ik] = 1.0;
  return mw;
}

ModeWeights isolated_mode_weights(int n_modes, const std::vector<int>& modes,
                                  double eps) {
  if (!(eps > 0.0 && eps <= 1.0))
    throw std::invalid_argument("isolated_mode_weights: eps must be in (0,1]");
  ModeWeights mw;
  mw.kind = RegionKind::IsolatedMode;
  mw.w = Eigen::VectorXcd::Zero(n_modes);
  for (int m : modes) {
    if (m < 0 || m >= n_modes)
      throw std::invalid_argument("isolated_mode_weights: mode out of range");
    mw.w[m] = std::sqrt(eps);
  }
  return mw;
}

ModeWeights profile_weights(int n_modes) {
  ModeWeights mw;
  mw.kind = RegionKind::IsolatedMode;
  mw.w = Eigen::VectorXcd::Ones(n_modes);
  return mw;
}

double commutator_norm(const ModeWeights& w) { return w.w.squaredNorm(); }

}  // namespace wpent
