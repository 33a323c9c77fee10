#include "wpent/singlephoton.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wpent {

void CavityParams::validate() const {
  if (!(Omega > 0.0)) throw std::invalid_argument("CavityParams: Omega <= 0");
  if (!(gamma > 0.0)) throw std::invalid_argument("CavityParams: gamma <= 0");
}

void AtomParams::validate() const {
  if (!(omega_eg > 0.0)) throw std::invalid_argument("AtomParams: omega_eg <= 0");
  if (!(Gamma > 0.0)) throw std::invalid_argument("AtomParams: Gamma <= 0");
}

void EnsembleParams::validate() const {
  if (N < 1) throw std::invalid_argument("EnsembleParams: N < 1");
  if (positions.rows() != N || positions.cols() != 3)
    throw std::invalid_argument("EnsembleParams: positions must be N x 3");
  if (!(gamma_N > 0.0)) throw std::invalid_argument("EnsembleParams: gamma_N <= 0");
}

SingleExcitationState cavity_amplitudes(const CavityParams& p, double t,
                                        const KGrid& grid) {
  p.validate();
  if (t < 0.0) throw std::invalid_argument("cavity_amplitudes: t < 0");
  SingleExcitationState st;
  st.t = t;
  st.grid = &grid;
  st.source = p.a0 * std::exp(-0.5 * p.gamma * t);
  const int nk = static_cast<int>(grid.k.rows());
  st.d = Eigen::VectorXcd::Zero(nk);
  const cplx I(0.0, 1.0);
  for (int ik = 0; ik < nk; ++ik) {
    const double wk = grid.k.row(ik).norm();
    const cplx num =
        1.0 - std::exp((-I * (p.Omega - wk) - 0.5 * p.gamma) * t);
    st.d[ik] = p.g * p.a0 * num / ((wk - p.Omega) + I * 0.5 * p.gamma);
  }
  return st;
}

cplx spatial_profile_cavity(const CavityParams& p, double r, double t,
                            double V) {
  p.validate();
  if (t < 0.0 || r < 0.0)
    throw std::invalid_argument("spatial_profile_cavity: negative r or t");
  if (r == 0.0)
    throw std::domain_error("spatial_profile_cavity: r = 0 is singular");
  if (r > t) return 0.0;  // Theta(t - r); Theta(0) = 1
  const cplx alpha(-0.5 * p.gamma, -p.Omega);
  return V * p.a0 * p.K() * p.g / (2.0 * std::numbers::pi * r) *
         std::exp(alpha * r);
}

cplx j_closed_core(double omega, double half_rate, double g, cplx b0,
                   double t) {
  if (t < 0.0) throw std::invalid_argument("j_closed: t < 0");
  const cplx alpha(-half_rate, -omega);
  const cplx x = alpha * t;
  const cplx ex = std::exp(x);
  return 2.0 * b0 * omega * g * (1.0 - ex + x * ex) / (alpha * alpha);
}

cplx j_closed(const CavityParams& p, double t) {
  p.validate();
  return j_closed_core(p.Omega, 0.5 * p.gamma, p.g, p.a0, t);
}

cplx j_closed(const AtomParams& p, double t) {
  p.validate();
  return j_closed_core(p.omega_eg, 0.5 * p.Gamma, p.g, 1.0, t);
}

cplx coherence_zeta(const EnsembleParams& e) {
  e.validate();
  cplx z = 0.0;
  for (int j = 0; j < e.N; ++j)
    z += std::polar(1.0, e.k0.dot(e.positions.row(j)));
  return z / std::sqrt(static_cast<double>(e.N));
}

cplx j_superradiant(const EnsembleParams& e, double t) {
  e.validate();
  return j_closed_core(e.omega_eg, e.gamma_N, e.g, 1.0, t) * coherence_zeta(e);
}

cplx apply_collective(const SingleExcitationState& state,
                      const ModeWeights& w) {
  if (state.d.size() != w.w.size())
    throw std::invalid_argument("apply_collective: grid mismatch");
  return (w.w.array() * state.d.array()).sum();
}

double excitation_norm(const SingleExcitationState& state) {
  return std::norm(state.source) + state.d.squaredNorm();
}

}  // namespace wpent
