#pragma once
// Entanglement / nonclassicality functionals, evaluated from moments.
// Both state backends (single-excitation algebra, Gaussian covariance) feed
// the same formulas here.

#include <complex>
#include <map>
#include <string>

#include <Eigen/Dense>

#include "wpent/gaussian.hpp"
#include "wpent/lattice.hpp"
#include "wpent/singlephoton.hpp"

namespace wpent {

struct WitnessReport {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;  // entangled/nonclassical iff value < threshold
  bool flagged = false;
  std::map<std::string, double> moments;
};

// 2x2 blocks of the 4x4 two-collective-mode covariance matrix
// V = [A, C; C^T, B].
struct FourPartition {
  Eigen::Matrix2d A, B, C;

  Eigen::Matrix4d assemble() const;
  static FourPartition from_covariance(const CovarianceState& s, int mode1 = 0,
                                       int mode2 = 1);
  // Two-cavity single-excitation blocks: A = l1*I, B = l2*I,
  // l_i = 1/2 + |J_i|^2, C = [[a, b], [b, -a]] with a = Re(J2* J1),
  // b = -Im(J2* J1).
  static FourPartition from_single_photon(cplx J1, cplx J2);
};

// Default tolerance for classifying boundary cases as "not witnessed".
inline constexpr double kWitnessTol = 1e-10;

// lambda_HZ = <A2^dag A2 A1^dag A1> - |<A2^dag A1>|^2
WitnessReport lambda_hz(double m_2211, cplx m_21, double tol = kWitnessTol);

// lambda = Var(alpha X1 + beta X2) + Var(alpha P1 - beta P2) - (alpha^2+beta^2)
// V4: covariance of (x1, p1, x2, p2) of the two canonical collective modes.
WitnessReport lambda_dgcz(const Eigen::Matrix4d& V4, double alpha, double beta,
                          double tol = kWitnessTol);

// Simon-style functional
// det A det B + (1/4 - |det C|)^2 - tr(A J C J B J C^T J) - (det A + det B)/4
WitnessReport lambda_sph(const FourPartition& V4, double tol = kWitnessTol);

// mu_HZ = <S+ S- A^dag A> - |<S+ A>|^2
WitnessReport mu_hz(double m_ssaa, cplx m_sa, double tol = kWitnessTol);

struct SpinFieldMoments {
  double sx = 0.0, sy = 0.0;      // <Sx>, <Sy>
  double sx2 = 0.0, sy2 = 0.0;    // <Sx^2>, <Sy^2>
  double x = 0.0, p = 0.0;        // <X>, <P>
  double x2 = 0.0, p2 = 0.0;      // <X^2>, <P^2>
  double sx_x = 0.0, sy_p = 0.0;  // symmetrized <Sx X>, <Sy P>
};

// Raw variance sum Var(Sx + X) + Var(Sy - P); no separability verdict (the
// bound for this hybrid pair is an open question).
double mu_dgcz_varsum(const SpinFieldMoments& m);

// lambda_sm = 1/2 + <A^dag A> - |<A^2>|; nonclassical iff < 1/2.
WitnessReport lambda_sm(double n, cplx aa, double tol = kWitnessTol);
WitnessReport lambda_sm(const CollectiveMoments& cm, double tol = kWitnessTol);

// Mix the collective mode of s with vacuum on a tau = 1/2 beam splitter and
// evaluate lambda_sph on the two outputs.
WitnessReport bs_nonclassicality(const CovarianceState& s, const ModeWeights& w,
                                 double tol = kWitnessTol);

struct EfieldHz {
  double raw = 0.0;     // includes the -4 gamma1 gamma2 eps1 eps2 prefactor
  double scaled = 0.0;  // raw divided by |prefactor|, in [-1, 0]
};

// E-field HZ correlation at detector positions z1, z2 on the two emission
// axes; exactly 0 outside either light cone.  eps_i = sqrt(K_i / V).
EfieldHz efield_hz(const CavityParams& p1, const CavityParams& p2, double z1,
                   double z2, double t, double V = 1.0);

}  // namespace wpent
