#pragma once
// Closed-form single-excitation amplitudes for the three emission problems:
// damped cavity pair, spontaneous emission, single-photon superradiance.
// Natural units, c = 1.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "wpent/lattice.hpp"

namespace wpent {

struct CavityParams {
  double Omega = 1.0;   // resonance frequency
  double gamma = 0.01;  // damping rate
  double g = 1.0;       // cavity-reservoir coupling at resonance
  cplx a0 = 1.0;        // initial amplitude
  double K() const { return Omega; }  // K = Omega/c
  void validate() const;
};

struct AtomParams {
  double omega_eg = 1.0;
  double Gamma = 0.01;
  double g = 1.0;
  Eigen::Vector3d r0 = Eigen::Vector3d::Zero();
  void validate() const;
};

struct EnsembleParams {
  int N = 1;
  Eigen::MatrixXd positions;  // N x 3
  Eigen::Vector3d k0 = Eigen::Vector3d::Zero();
  double gamma_N = 0.01;  // collective decay rate (Gamma/2 -> gamma_N)
  double omega_eg = 1.0;
  double g = 1.0;
  void validate() const;
};

struct SingleExcitationState {
  double t = 0.0;
  cplx source = 0.0;       // b(t), beta(t) or collective source amplitude
  Eigen::VectorXcd d;      // reservoir amplitudes on a KGrid
  const KGrid* grid = nullptr;
};

// b(t) = e^{-gamma t/2} a0 and d_k(t) on every grid mode, with
// d_k = g a0 (1 - e^{-i(Omega-w_k)t - gamma t/2}) / ((w_k - Omega) + i gamma/2),
// w_k = |k|.
SingleExcitationState cavity_amplitudes(const CavityParams& p, double t,
                                        const KGrid& grid);

// I(r,t) = [V b(0) K g / (2 pi r)] e^{-(i Omega + gamma/2) r} Theta(t - r).
// The 1/r point r = 0 is disallowed (radial quadrature uses the r^2 dr
// measure and never needs it).
cplx spatial_profile_cavity(const CavityParams& p, double r, double t,
                            double V);

// Core closed form J(t) = 2 b0 K g (1 - e^x + x e^x) / alpha^2 with
// x = alpha t, alpha = -(i omega + half_rate).  half_rate is gamma/2 for a
// cavity, Gamma/2 for an atom, gamma_N for the superradiant collective form.
cplx j_closed_core(double omega, double half_rate, double g, cplx b0, double t);

cplx j_closed(const CavityParams& p, double t);
cplx j_closed(const AtomParams& p, double t);

// zeta = sum_j e^{i k0 . r_j} / sqrt(N)
cplx coherence_zeta(const EnsembleParams& e);

// J_A(t, gamma_N) * zeta  (single-atom closed form with Gamma/2 -> gamma_N)
cplx j_superradiant(const EnsembleParams& e, double t);

// Collective annihilator on the one-photon sector: returns the vacuum
// coefficient sum_k w_k d_k(t), the discrete counterpart of J = sum_r I(r,t).
cplx apply_collective(const SingleExcitationState& state, const ModeWeights& w);

// |source|^2 + sum_k |d_k|^2 (per-mode integration weight 1 on a
// commensurate grid).
double excitation_norm(const SingleExcitationState& state);

}  // namespace wpent
