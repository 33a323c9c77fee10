#pragma once
// Independent brute-force verifiers for every closed form: quadrature,
// dense mode summation, direct ODE integration, truncated-Fock algebra,
// partial-transpose symplectic check.

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "wpent/gaussian.hpp"
#include "wpent/singlephoton.hpp"
#include "wpent/witnesses.hpp"

namespace wpent::oracle {

// ---- quadrature ----------------------------------------------------------

// Gauss-Legendre nodes/weights on [-1, 1], computed by Newton iteration.
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights);

// J(t) by radial quadrature: 2 b0 K g \int_0^t r e^{alpha r} dr, composite
// 16-point Gauss-Legendre.  `nodes` sets the total node budget; pass 0 for
// an automatic resolution of >= 3 segments per oscillation period.
cplx j_numeric_radial(double omega, double half_rate, double g, cplx b0,
                      double t, int nodes = 0);
cplx j_numeric_radial(const CavityParams& p, double t, int nodes = 0);

// J(t) by direct double sum over a discrete 1D radial k-grid (3D angular
// integral done analytically -> sin(kr)/kr kernel).  Band half-width W is
// auto-limited to avoid spatial wrap-around of the discrete spectrum.
cplx j_numeric_ksum(double omega, double half_rate, double g, cplx b0,
                    double t, int Mk = 256, double W = 0.0);
cplx j_numeric_ksum(const CavityParams& p, double t, int Mk = 256,
                    double W = 0.0);

// ---- discrete Wigner-Weisskopf ODE ---------------------------------------

struct OdeResult {
  std::vector<double> times;
  std::vector<cplx> b;
  double bandwidth = 0.0;  // absolute bandwidth used (recorded in output)
  double norm_drift = 0.0;
  SingleExcitationState final_state;
};

// Integrates the single-excitation Schrodinger equations for a source mode
// coupled with flat strength g = sqrt(gamma dw / 2 pi) to M reservoir modes
// spanning `bandwidth_factor * gamma` around resonance; no Wigner-Weisskopf
// approximation.  RK4 with fixed step dt_factor/gamma.
OdeResult amplitudes_ode(double gamma, double t_max, int M = 400,
                         double bandwidth_factor = 64.0,
                         double dt_factor = 2e-4, int n_samples = 200);

// ---- moments by dense expansion ------------------------------------------

struct BruteforceMoments {
  double n1 = 0.0, n2 = 0.0;  // <A_i^dag A_i>
  cplx aa1, aa2;              // <A_i^2>
  cplx a2dag_a1;              // <A_2^dag A_1>
  cplx a1_a2;                 // <A_1 A_2>
  double m_2211 = 0.0;        // <A_2^dag A_2 A_1^dag A_1> (Wick)
};

// Gaussian Wick expansion from the covariance matrix, via the complex
// ladder-basis correlation matrix (independent of gaussian.cpp's
// per-element correlator formulas).
BruteforceMoments moments_bruteforce(const CovarianceState& s,
                                     const ModeWeights& w1,
                                     const ModeWeights& w2);
BruteforceMoments moments_bruteforce(const CovarianceState& s,
                                     const ModeWeights& w);

// Truncated-Fock oracles (explicit ladder matrices + Taylor-stepped
// matrix-exponential applied to the state vector).
struct FockMoments {
  double n1 = 0.0, n2 = 0.0;
  cplx aa1, aa2;
  cplx a1_a2;
};

// Squeezed vacuum, single mode: exp(r/2 (e^{-i th} a^2 - e^{i th} a^dag2))|0>.
FockMoments fock_squeezed_moments(double r, double theta, int nmax);

// Two-mode squeezed vacuum: exp(beta a1^dag a2^dag - beta* a1 a2)|00>,
// beta = r e^{i phi}.
FockMoments fock_tmsv_moments(double r, double phi, int nmax);

// ---- partial transpose ---------------------------------------------------

// Smallest symplectic eigenvalue of the partially transposed two-mode
// covariance; < 1/2 iff Gaussian-entangled.
double ppt_check(const FourPartition& V4);

// ---- scan ----------------------------------------------------------------

struct ScanMinimum {
  double x = 0.0;
  double value = 0.0;
};

// Dense coarse grid followed by golden-section refinement of the best
// bracket.
ScanMinimum scan_minimum(const std::function<double(double)>& f, double a,
                         double b, int n_coarse = 4000, int n_refine = 200);

}  // namespace wpent::oracle
