#include "wpent/witnesses.hpp"

#include <cmath>
#include <stdexcept>

namespace wpent {

namespace {
const Eigen::Matrix2d kJ = (Eigen::Matrix2d() << 0.0, 1.0, -1.0, 0.0).finished();
}

Eigen::Matrix4d FourPartition::assemble() const {
  Eigen::Matrix4d V;
  V.block<2, 2>(0, 0) = A;
  V.block<2, 2>(0, 2) = C;
  V.block<2, 2>(2, 0) = C.transpose();
  V.block<2, 2>(2, 2) = B;
  return V;
}

FourPartition FourPartition::from_covariance(const CovarianceState& s,
                                             int mode1, int mode2) {
  if (mode1 < 0 || mode2 < 0 || mode1 >= s.M || mode2 >= s.M || mode1 == mode2)
    throw std::invalid_argument("FourPartition: bad mode indices");
  FourPartition fp;
  fp.A = s.cov.block<2, 2>(2 * mode1, 2 * mode1);
  fp.B = s.cov.block<2, 2>(2 * mode2, 2 * mode2);
  fp.C = s.cov.block<2, 2>(2 * mode1, 2 * mode2);
  return fp;
}

FourPartition FourPartition::from_single_photon(cplx J1, cplx J2) {
  FourPartition fp;
  fp.A = (0.5 + std::norm(J1)) * Eigen::Matrix2d::Identity();
  fp.B = (0.5 + std::norm(J2)) * Eigen::Matrix2d::Identity();
  const cplx cross = std::conj(J2) * J1;
  fp.C << cross.real(), -cross.imag(), -cross.imag(), -cross.real();
  return fp;
}

WitnessReport lambda_hz(double m_2211, cplx m_21, double tol) {
  if (m_2211 < -tol)
    throw std::invalid_argument("lambda_hz: negative fourth-order moment");
  WitnessReport r;
  r.name = "HZ";
  r.value = m_2211 - std::norm(m_21);
  r.threshold = 0.0;
  r.flagged = r.value < -tol;
  r.moments = {{"m_2211", m_2211},
               {"re_m_21", m_21.real()},
               {"im_m_21", m_21.imag()}};
  return r;
}

WitnessReport lambda_dgcz(const Eigen::Matrix4d& V4, double alpha, double beta,
                          double tol) {
  if (alpha == 0.0 && beta == 0.0)
    throw std::invalid_argument("lambda_dgcz: alpha and beta both zero");
  const double var_u = alpha * alpha * V4(0, 0) + beta * beta * V4(2, 2) +
                       2.0 * alpha * beta * V4(0, 2);
  const double var_v = alpha * alpha * V4(1, 1) + beta * beta * V4(3, 3) -
                       2.0 * alpha * beta * V4(1, 3);
  WitnessReport r;
  r.name = "DGCZ";
  r.value = var_u + var_v - (alpha * alpha + beta * beta);
  r.threshold = 0.0;
  r.flagged = r.value < -tol;
  r.moments = {{"var_u", var_u}, {"var_v", var_v}};
  return r;
}

WitnessReport lambda_sph(const FourPartition& V4, double tol) {
  const Eigen::Matrix4d V = V4.assemble();
  if ((V - V.transpose()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("lambda_sph: asymmetric covariance matrix");
  const double detA = V4.A.determinant();
  const double detB = V4.B.determinant();
  const double detC = V4.C.determinant();
  const double trterm =
      (V4.A * kJ * V4.C * kJ * V4.B * kJ * V4.C.transpose() * kJ).trace();
  WitnessReport r;
  r.name = "SPH";
  r.value = detA * detB + (0.25 - std::abs(detC)) * (0.25 - std::abs(detC)) -
            trterm - 0.25 * (detA + detB);
  r.threshold = 0.0;
  r.flagged = r.value < -tol;
  r.moments = {{"detA", detA}, {"detB", detB}, {"detC", detC}, {"tr", trterm}};
  return r;
}

WitnessReport mu_hz(double m_ssaa, cplx m_sa, double tol) {
  if (m_ssaa < -tol)
    throw std::invalid_argument("mu_hz: negative fourth-order moment");
  WitnessReport r;
  r.name = "muHZ";
  r.value = m_ssaa - std::norm(m_sa);
  r.threshold = 0.0;
  r.flagged = r.value < -tol;
  r.moments = {{"m_ssaa", m_ssaa},
               {"re_m_sa", m_sa.real()},
               {"im_m_sa", m_sa.imag()}};
  return r;
}

double mu_dgcz_varsum(const SpinFieldMoments& m) {
  const double var_sx = m.sx2 - m.sx * m.sx;
  const double var_sy = m.sy2 - m.sy * m.sy;
  const double var_x = m.x2 - m.x * m.x;
  const double var_p = m.p2 - m.p * m.p;
  const double cov_sx_x = m.sx_x - m.sx * m.x;
  const double cov_sy_p = m.sy_p - m.sy * m.p;
  return var_sx + var_x + 2.0 * cov_sx_x + var_sy + var_p - 2.0 * cov_sy_p;
}

WitnessReport lambda_sm(double n, cplx aa, double tol) {
  if (n < -tol) throw std::invalid_argument("lambda_sm: <A^dag A> < 0");
  WitnessReport r;
  r.name = "lambda_sm";
  r.value = 0.5 + n - std::abs(aa);
  r.threshold = 0.5;
  r.flagged = r.value < 0.5 - tol;
  r.moments = {{"n", n}, {"re_aa", aa.real()}, {"im_aa", aa.imag()}};
  return r;
}

WitnessReport lambda_sm(const CollectiveMoments& cm, double tol) {
  return lambda_sm(cm.n, cm.aa, tol);
}

WitnessReport bs_nonclassicality(const CovarianceState& s, const ModeWeights& w,
                                 double tol) {
  const CovarianceState wp = collective_reduced_state(s, w);
  CovarianceState two = CovarianceState::vacuum(2);
  two.cov.block<2, 2>(0, 0) = wp.cov;
  two.mean.head<2>() = wp.mean;
  const CovarianceState out = beam_splitter(two, 0, 1, 0.5);
  WitnessReport r = lambda_sph(FourPartition::from_covariance(out), tol);
  r.name = "BS-SPH";
  return r;
}

EfieldHz efield_hz(const CavityParams& p1, const CavityParams& p2, double z1,
                   double z2, double t, double V) {
  p1.validate();
  p2.validate();
  if (z1 < 0.0 || z2 < 0.0 || t < 0.0)
    throw std::invalid_argument("efield_hz: negative z or t");
  const double eps1 = std::sqrt(p1.K() / V), eps2 = std::sqrt(p2.K() / V);
  const double prefactor = 4.0 * p1.gamma * p2.gamma * eps1 * eps2;
  EfieldHz out;
  if (t < z1 || t < z2) return out;  // outside a light cone: exactly zero
  out.scaled = -std::exp(-0.5 * p1.gamma * std::abs(z1 - t)) *
               std::exp(-0.5 * p2.gamma * std::abs(z2 - t));
  out.raw = prefactor * out.scaled;
  return out;
}

}  // namespace wpent
