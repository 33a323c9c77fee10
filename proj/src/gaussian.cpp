#include "wpent/gaussian.hpp"

#include <cmath>
#include <stdexcept>

namespace wpent {

namespace {

Eigen::MatrixXd symplectic_form(int M) {
  Eigen::MatrixXd om = Eigen::MatrixXd::Zero(2 * M, 2 * M);
  for (int i = 0; i < M; ++i) {
    om(2 * i, 2 * i + 1) = 1.0;
    om(2 * i + 1, 2 * i) = -1.0;
  }
  return om;
}

// Embed a 2x2 (or 4x4) symplectic block acting on the listed modes.
CovarianceState apply_symplectic(const CovarianceState& s,
                                 const std::vector<int>& modes,
                                 const Eigen::MatrixXd& block) {
  for (int m : modes)
    if (m < 0 || m >= s.M)
      throw std::invalid_argument("mode index out of range");
  Eigen::MatrixXd S = Eigen::MatrixXd::Identity(2 * s.M, 2 * s.M);
  const int nb = static_cast<int>(modes.size());
  for (int bi = 0; bi < nb; ++bi)
    for (int bj = 0; bj < nb; ++bj)
      S.block<2, 2>(2 * modes[bi], 2 * modes[bj]) =
          block.block<2, 2>(2 * bi, 2 * bj);
  CovarianceState out;
  out.M = s.M;
  out.mean = S * s.mean;
  out.cov = S * s.cov * S.transpose();
  out.cov = 0.5 * (out.cov + out.cov.transpose().eval());  // keep symmetric
  return out;
}

Eigen::Matrix2d rot2(double phi) {
  // x -> cos(phi) x + sin(phi) p, p -> -sin(phi) x + cos(phi) p, i.e.
  // a -> e^{-i phi} a.
  Eigen::Matrix2d r;
  r << std::cos(phi), std::sin(phi), -std::sin(phi), std::cos(phi);
  return r;
}

}  // namespace

CovarianceState CovarianceState::vacuum(int modes) {
  if (modes < 1) throw std::invalid_argument("vacuum: need at least one mode");
  CovarianceState s;
  s.M = modes;
  s.mean = Eigen::VectorXd::Zero(2 * modes);
  s.cov = 0.5 * Eigen::MatrixXd::Identity(2 * modes, 2 * modes);
  return s;
}

CovarianceState CovarianceState::thermal(int modes,
                                         const std::vector<double>& nbar) {
  if (static_cast<int>(nbar.size()) != modes)
    throw std::invalid_argument("thermal: nbar size mismatch");
  CovarianceState s = vacuum(modes);
  for (int i = 0; i < modes; ++i) {
    if (nbar[i] < 0.0) throw std::invalid_argument("thermal: nbar < 0");
    s.cov(2 * i, 2 * i) = s.cov(2 * i + 1, 2 * i + 1) = nbar[i] + 0.5;
  }
  return s;
}

Eigen::VectorXd CovarianceState::symplectic_eigenvalues() const {
  Eigen::MatrixXd m = symplectic_form(M) * cov;
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, /*computeEigenvectors=*/false);
  std::vector<double> nus;
  for (int i = 0; i < 2 * M; ++i) {
    const double im = es.eigenvalues()[i].imag();
    if (im > 0.0) nus.push_back(im);
  }
  std::sort(nus.begin(), nus.end());
  return Eigen::Map<Eigen::VectorXd>(nus.data(), static_cast<long>(nus.size()));
}

bool CovarianceState::is_physical(double tol) const {
  const Eigen::VectorXd nu = symplectic_eigenvalues();
  return nu.size() == M && nu.minCoeff() >= 0.5 - tol;
}

CovarianceState squeeze_mode(const CovarianceState& s, int mode, double r,
                             double theta) {
  if (r < 0.0) throw std::invalid_argument("squeeze_mode: r < 0");
  Eigen::Matrix2d sq = Eigen::Matrix2d::Zero();
  sq(0, 0) = std::exp(-r);
  sq(1, 1) = std::exp(r);
  // Similarity by a rotation points the squeezed axis at theta/2, giving
  // <a^2> = -e^{i theta} sinh(r) cosh(r) on vacuum.
  const Eigen::Matrix2d blk = rot2(-theta / 2.0) * sq * rot2(theta / 2.0);
  return apply_symplectic(s, {mode}, blk);
}

CovarianceState phase_rotate(const CovarianceState& s, int mode, double phi) {
  return apply_symplectic(s, {mode}, rot2(phi));
}

CovarianceState two_mode_squeeze(const CovarianceState& s,
                                 const PairSqueezing& pair) {
  if (pair.mode1 == pair.mode2)
    throw std::invalid_argument("two_mode_squeeze: modes must differ");
  if (pair.r < 0.0) throw std::invalid_argument("two_mode_squeeze: r < 0");
  const double C = std::cosh(pair.r), S = std::sinh(pair.r);
  Eigen::MatrixXd blk = Eigen::MatrixXd::Zero(4, 4);
  // phi = 0: x1 -> C x1 + S x2, p1 -> C p1 - S p2 (and 1 <-> 2).
  blk(0, 0) = C; blk(0, 2) = S;
  blk(1, 1) = C; blk(1, 3) = -S;
  blk(2, 0) = S; blk(2, 2) = C;
  blk(3, 1) = -S; blk(3, 3) = C;
  CovarianceState out = apply_symplectic(s, {pair.mode1, pair.mode2}, blk);
  if (pair.phi != 0.0) out = phase_rotate(out, pair.mode2, -pair.phi);
  return out;
}

CovarianceState beam_splitter(const CovarianceState& s, int mode_a, int mode_b,
                              double tau) {
  if (tau < 0.0 || tau > 1.0)
    throw std::invalid_argument("beam_splitter: tau must be in [0,1]");
  if (mode_a == mode_b)
    throw std::invalid_argument("beam_splitter: modes must differ");
  const double c = std::sqrt(tau), q = std::sqrt(1.0 - tau);
  Eigen::MatrixXd blk = Eigen::MatrixXd::Zero(4, 4);
  for (int quad = 0; quad < 2; ++quad) {
    blk(quad, quad) = c; blk(quad, 2 + quad) = q;
    blk(2 + quad, quad) = -q; blk(2 + quad, 2 + quad) = c;
  }
  return apply_symplectic(s, {mode_a, mode_b}, blk);
}

cplx corr_aa(const CovarianceState& s, int i, int j) {
  const double vxx = s.cov(2 * i, 2 * j), vpp = s.cov(2 * i + 1, 2 * j + 1);
  const double vxp = s.cov(2 * i, 2 * j + 1), vpx = s.cov(2 * i + 1, 2 * j);
  return 0.5 * cplx(vxx - vpp, vxp + vpx);
}

cplx corr_adag_a(const CovarianceState& s, int i, int j) {
  const double vxx = s.cov(2 * i, 2 * j), vpp = s.cov(2 * i + 1, 2 * j + 1);
  const double vxp = s.cov(2 * i, 2 * j + 1), vpx = s.cov(2 * i + 1, 2 * j);
  const double delta = (i == j) ? 1.0 : 0.0;
  return 0.5 * cplx(vxx + vpp - delta, vxp - vpx);
}

CollectiveMoments collective_moments(const CovarianceState& s,
                                     const ModeWeights& w) {
  if (w.w.size() != s.M)
    throw std::invalid_argument("collective_moments: weight support mismatch");
  CollectiveMoments cm{0.0, 0.0, 0.0};
  cplx n_acc = 0.0;
  for (int i = 0; i < s.M; ++i) {
    cm.mean_a += w.w[i] * cplx(s.mean[2 * i], s.mean[2 * i + 1]) / std::sqrt(2.0);
    for (int j = 0; j < s.M; ++j) {
      cm.aa += w.w[i] * w.w[j] * corr_aa(s, i, j);
      n_acc += std::conj(w.w[i]) * w.w[j] * corr_adag_a(s, i, j);
    }
  }
  cm.n = n_acc.real();
  return cm;
}

TwoCollectiveMoments two_collective_moments(const CovarianceState& s,
                                            const ModeWeights& w1,
                                            const ModeWeights& w2) {
  if (w1.w.size() != s.M || w2.w.size() != s.M)
    throw std::invalid_argument("two_collective_moments: support mismatch");
  TwoCollectiveMoments m{};
  cplx n1 = 0.0, n2 = 0.0;
  for (int i = 0; i < s.M; ++i)
    for (int j = 0; j < s.M; ++j) {
      const cplx aa = corr_aa(s, i, j);
      const cplx ada = corr_adag_a(s, i, j);
      n1 += std::conj(w1.w[i]) * w1.w[j] * ada;
      n2 += std::conj(w2.w[i]) * w2.w[j] * ada;
      m.aa1 += w1.w[i] * w1.w[j] * aa;
      m.aa2 += w2.w[i] * w2.w[j] * aa;
      m.a2dag_a1 += std::conj(w2.w[i]) * w1.w[j] * ada;
      m.a1_a2 += w1.w[i] * w2.w[j] * aa;
    }
  m.n1 = n1.real();
  m.n2 = n2.real();
  return m;
}

CovarianceState collective_reduced_state(const CovarianceState& s,
                                         const ModeWeights& w) {
  const double norm = std::sqrt(commutator_norm(w));
  if (norm == 0.0)
    throw std::invalid_argument("collective_reduced_state: zero weights");
  ModeWeights wn = w;
  wn.w /= norm;
  const CollectiveMoments cm = collective_moments(s, wn);
  CovarianceState out = CovarianceState::vacuum(1);
  out.mean[0] = std::sqrt(2.0) * cm.mean_a.real();
  out.mean[1] = std::sqrt(2.0) * cm.mean_a.imag();
  out.cov(0, 0) = 0.5 + cm.n + cm.aa.real();
  out.cov(1, 1) = 0.5 + cm.n - cm.aa.real();
  out.cov(0, 1) = out.cov(1, 0) = cm.aa.imag();
  return out;
}

double total_photon_number(const CovarianceState& s) {
  double n = 0.0;
  for (int i = 0; i < s.M; ++i) n += corr_adag_a(s, i, i).real();
  return n;
}

}  // namespace wpent
