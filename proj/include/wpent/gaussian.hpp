#pragma once
// Multimode Gaussian-state engine: covariance matrices over quadratures
// x = (a^dag + a)/sqrt(2), p = i(a^dag - a)/sqrt(2); vacuum variance 1/2.
// Quadrature ordering is (x1, p1, x2, p2, ...).

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "wpent/lattice.hpp"

namespace wpent {

struct CovarianceState {
  int M = 0;
  Eigen::VectorXd mean;  // length 2M
  Eigen::MatrixXd cov;   // 2M x 2M, V_ij = <{xi_i, xi_j}>/2 - <xi_i><xi_j>

  static CovarianceState vacuum(int modes);
  static CovarianceState thermal(int modes, const std::vector<double>& nbar);

  // Positive imaginary parts of eig(Omega * cov); all >= 1/2 for physical states.
  Eigen::VectorXd symplectic_eigenvalues() const;
  bool is_physical(double tol = 1e-9) const;
};

struct SqueezingProfile {
  std::vector<int> modes;
  std::vector<double> r;
  std::vector<double> theta;
};

struct PairSqueezing {
  int mode1 = 0;
  int mode2 = 1;
  double r = 0.0;
  double phi = 0.0;  // beta = r e^{i phi}; phi = 0 default
};

// Single-mode squeeze; sign convention: on vacuum <a^2> = -e^{i theta} S C,
// <a^dag a> = S^2 (S = sinh r, C = cosh r).
CovarianceState squeeze_mode(const CovarianceState& s, int mode, double r,
                             double theta = 0.0);

// a -> e^{-i phi} a (Heisenberg); on states, <a^2> picks up e^{-2 i phi}.
CovarianceState phase_rotate(const CovarianceState& s, int mode, double phi);

// Two-mode squeeze a1 -> C a1 + e^{i phi} S a2^dag; on vacuum
// <a1 a2> = e^{i phi} C S, <a_i^dag a_i> = S^2.
CovarianceState two_mode_squeeze(const CovarianceState& s,
                                 const PairSqueezing& pair);

// Transmittance tau in [0, 1]; rotation by arccos(sqrt(tau)) on (a, b).
CovarianceState beam_splitter(const CovarianceState& s, int mode_a, int mode_b,
                              double tau);

// Complex noise correlators from the covariance block of modes (i, j);
// central moments (displacements never enter the noise analysis).
cplx corr_aa(const CovarianceState& s, int i, int j);      // <a_i a_j>
cplx corr_adag_a(const CovarianceState& s, int i, int j);  // <a_i^dag a_j>

struct CollectiveMoments {
  cplx mean_a;  // <A>
  double n;     // <A^dag A>
  cplx aa;      // <A^2>
};

CollectiveMoments collective_moments(const CovarianceState& s,
                                     const ModeWeights& w);

// All second moments of two collective modes A_1 = sum w1_k a_k,
// A_2 = sum w2_k a_k (needed by the two-wavepacket witnesses).
struct TwoCollectiveMoments {
  double n1, n2;    // <A_i^dag A_i>
  cplx aa1, aa2;    // <A_i^2>
  cplx a2dag_a1;    // <A_2^dag A_1>
  cplx a1_a2;       // <A_1 A_2>
};

TwoCollectiveMoments two_collective_moments(const CovarianceState& s,
                                            const ModeWeights& w1,
                                            const ModeWeights& w2);

// Reduced 1-mode covariance of the canonical collective mode w/|w|.
CovarianceState collective_reduced_state(const CovarianceState& s,
                                         const ModeWeights& w);

double total_photon_number(const CovarianceState& s);

}  // namespace wpent
