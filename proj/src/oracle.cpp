#include "wpent/oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace wpent::oracle {

using std::numbers::pi;

void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
}

cplx j_numeric_radial(double omega, double half_rate, double g, cplx b0,
                      double t, int nodes) {
  if (t < 0.0) throw std::invalid_argument("j_numeric_radial: t < 0");
  if (t == 0.0) return 0.0;
  constexpr int kPerSeg = 16;
  int nseg;
  if (nodes <= 0) {
    nseg = std::max(4, static_cast<int>(std::ceil(3.0 * omega * t / (2.0 * pi))));
  } else {
    if (nodes < 64)
      throw std::invalid_argument("j_numeric_radial: need >= 64 nodes");
    nseg = std::max(1, nodes / kPerSeg);
  }
  std::vector<double> xs, ws;
  gauss_legendre(kPerSeg, xs, ws);
  const cplx alpha(-half_rate, -omega);
  cplx acc = 0.0;
  const double h = t / nseg;
  for (int s = 0; s < nseg; ++s) {
    const double mid = (s + 0.5) * h;
    for (int q = 0; q < kPerSeg; ++q) {
      const double r = mid + 0.5 * h * xs[q];
      acc += ws[q] * r * std::exp(alpha * r);
    }
  }
  acc *= 0.5 * h;
  return 2.0 * b0 * omega * g * acc;
}

cplx j_numeric_radial(const CavityParams& p, double t, int nodes) {
  p.validate();
  return j_numeric_radial(p.Omega, 0.5 * p.gamma, p.g, p.a0, t, nodes);
}

cplx j_numeric_ksum(double omega, double half_rate, double g, cplx b0,
                    double t, int Mk, double W) {
  if (t < 0.0) throw std::invalid_argument("j_numeric_ksum: t < 0");
  if (t == 0.0) return 0.0;
  const double K = omega;  // c = 1
  const double ext = 1.25;  // integrate past the light cone through the ringing
  const double taper = 0.3;
  // Spatial period of the discrete spectrum is L = pi Mk / W; keep L >= 2 rmax.
  const double wmax = 0.9 * pi * Mk / (2.0 * ext * t);
  if (W <= 0.0) W = std::min(6.0 * omega, wmax);
  if (W > wmax) W = wmax;
  const double dk = 2.0 * W / Mk;
  const cplx I(0.0, 1.0);

  std::vector<cplx> dvals(Mk);
  std::vector<double> ks(Mk), win(Mk);
  for (int m = 0; m < Mk; ++m) {
    ks[m] = K - W + (m + 0.5) * dk;
    const cplx num = 1.0 - std::exp((-I * (omega - ks[m]) - half_rate) * t);
    dvals[m] = g * b0 * num / ((ks[m] - omega) + I * half_rate);
    const double u = std::abs(ks[m] - K) / W;
    win[m] = (u > 1.0 - taper)
                 ? std::pow(std::cos(0.5 * pi * (u - (1.0 - taper)) / taper), 2)
                 : 1.0;
  }
  const double rmax = ext * t;
  const int Nr =
      static_cast<int>(rmax * std::max(K + W, 1.0) / (2.0 * pi) * 8.0) + 64;
  const double dr = rmax / Nr;
  cplx total = 0.0;
  for (int ir = 0; ir < Nr; ++ir) {
    const double r = (ir + 0.5) * dr;
    cplx s = 0.0;
    for (int m = 0; m < Mk; ++m)
      s += std::sin(r * ks[m]) * (K * dvals[m] * win[m] * dk);
    total += r * s;
  }
  return (2.0 / pi) * total * dr;
}

cplx j_numeric_ksum(const CavityParams& p, double t, int Mk, double W) {
  p.validate();
  return j_numeric_ksum(p.Omega, 0.5 * p.gamma, p.g, p.a0, t, Mk, W);
}

OdeResult amplitudes_ode(double gamma, double t_max, int M,
                         double bandwidth_factor, double dt_factor,
                         int n_samples) {
  if (!(gamma > 0.0) || !(t_max > 0.0) || M < 2)
    throw std::invalid_argument("amplitudes_ode: bad parameters");
  const double B = bandwidth_factor * gamma;
  const double dw = B / M;
  const double g = std::sqrt(gamma * dw / (2.0 * pi));
  Eigen::VectorXd dets(M);  // Delta_k = Omega - omega_k, symmetric about 0
  for (int m = 0; m < M; ++m) dets[m] = (m - (M - 1) / 2.0) * dw;

  cplx b = 1.0;
  Eigen::VectorXcd d = Eigen::VectorXcd::Zero(M);
  long nsteps = static_cast<long>(std::ceil(t_max / (dt_factor / gamma)));
  nsteps = std::max(nsteps, static_cast<long>(n_samples));
  const double dt = t_max / nsteps;
  const long stride = std::max(1L, nsteps / n_samples);

  Eigen::VectorXcd ph(M), kd1(M), kd2(M), kd3(M), kd4(M);
  auto rhs = [&](double tt, cplx bb, const Eigen::VectorXcd& dd, cplx& db,
                 Eigen::VectorXcd& ddout) {
    for (int m = 0; m < M; ++m) ph[m] = std::polar(1.0, dets[m] * tt);
    db = -cplx(0.0, 1.0) * g * (ph.array() * dd.array()).sum();
    ddout = (-cplx(0.0, 1.0) * g * bb) * ph.conjugate();
  };

  OdeResult out;
  out.bandwidth = B;
  double tt = 0.0;
  Eigen::VectorXcd dtmp(M);
  for (long i = 0; i < nsteps; ++i) {
    cplx kb1, kb2, kb3, kb4;
    rhs(tt, b, d, kb1, kd1);
    dtmp = d + (0.5 * dt) * kd1;
    rhs(tt + 0.5 * dt, b + 0.5 * dt * kb1, dtmp, kb2, kd2);
    dtmp = d + (0.5 * dt) * kd2;
    rhs(tt + 0.5 * dt, b + 0.5 * dt * kb2, dtmp, kb3, kd3);
    dtmp = d + dt * kd3;
    rhs(tt + dt, b + dt * kb3, dtmp, kb4, kd4);
    b += dt / 6.0 * (kb1 + 2.0 * kb2 + 2.0 * kb3 + kb4);
    d += dt / 6.0 * (kd1 + 2.0 * kd2 + 2.0 * kd3 + kd4);
    tt += dt;
    if ((i + 1) % stride == 0 || i + 1 == nsteps) {
      out.times.push_back(tt);
      out.b.push_back(b);
    }
  }
  out.norm_drift = std::abs(std::norm(b) + d.squaredNorm() - 1.0);
  out.final_state.t = tt;
  out.final_state.source = b;
  out.final_state.d = d;
  return out;
}

BruteforceMoments moments_bruteforce(const CovarianceState& s,
                                     const ModeWeights& w1,
                                     const ModeWeights& w2) {
  if (w1.w.size() != s.M || w2.w.size() != s.M)
    throw std::invalid_argument("moments_bruteforce: support mismatch");
  const int M = s.M;
  Eigen::MatrixXcd U = Eigen::MatrixXcd::Zero(2 * M, 2 * M);
  const double rs2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < M; ++i) {
    U(i, 2 * i) = rs2;
    U(i, 2 * i + 1) = cplx(0.0, rs2);
    U(M + i, 2 * i) = rs2;
    U(M + i, 2 * i + 1) = cplx(0.0, -rs2);
  }
  const Eigen::MatrixXcd G = U * s.cov.cast<cplx>() * U.transpose();

  // Ordered pair expectation <u v> for ladder entries u = row(i), v = col(j):
  // sym value + half the commutator [u, v].
  auto ordered = [&](int i, int j) -> cplx {
    cplx comm = 0.0;  // [row_i, col_j]
    if (i < M && j >= M && j - M == i) comm = 1.0;        // [a, a^dag] = 1
    else if (i >= M && j < M && i - M == j) comm = -1.0;  // [a^dag, a] = -1
    return G(i, j) + 0.5 * comm;
  };

  // Collective ladder vectors: A = sum w_k a_k, A^dag = sum w_k* a_k^dag.
  auto pair_exp = [&](const Eigen::VectorXcd& u,
                      const Eigen::VectorXcd& v) -> cplx {
    cplx acc = 0.0;
    for (int i = 0; i < 2 * M; ++i) {
      if (u[i] == cplx(0.0)) continue;
      for (int j = 0; j < 2 * M; ++j)
        if (v[j] != cplx(0.0)) acc += u[i] * v[j] * ordered(i, j);
    }
    return acc;
  };

  Eigen::VectorXcd A1 = Eigen::VectorXcd::Zero(2 * M),
                   A2 = Eigen::VectorXcd::Zero(2 * M),
                   A1d = Eigen::VectorXcd::Zero(2 * M),
                   A2d = Eigen::VectorXcd::Zero(2 * M);
  for (int i = 0; i < M; ++i) {
    A1[i] = w1.w[i];
    A2[i] = w2.w[i];
    A1d[M + i] = std::conj(w1.w[i]);
    A2d[M + i] = std::conj(w2.w[i]);
  }

  BruteforceMoments m;
  m.n1 = pair_exp(A1d, A1).real();
  m.n2 = pair_exp(A2d, A2).real();
  m.aa1 = pair_exp(A1, A1);
  m.aa2 = pair_exp(A2, A2);
  m.a2dag_a1 = pair_exp(A2d, A1);
  m.a1_a2 = pair_exp(A1, A2);
  // Wick: <A2^dag A2 A1^dag A1> = <A2^dag A2><A1^dag A1>
  //   + <A2^dag A1^dag><A2 A1> + <A2^dag A1><A2 A1^dag>  (zero-mean Gaussian)
  const cplx t1 = pair_exp(A2d, A2) * pair_exp(A1d, A1);
  const cplx t2 = pair_exp(A2d, A1d) * pair_exp(A2, A1);
  const cplx t3 = pair_exp(A2d, A1) * pair_exp(A2, A1d);
  m.m_2211 = (t1 + t2 + t3).real();
  return m;
}

BruteforceMoments moments_bruteforce(const CovarianceState& s,
                                     const ModeWeights& w) {
  return moments_bruteforce(s, w, w);
}

namespace {

// psi <- exp(G) psi with G supplied as a matrix-vector product, by Taylor
// series over substeps sized so each converges fast.
template <typename MatVec>
void apply_exp(const MatVec& gv, Eigen::VectorXcd& psi, double gnorm) {
  const int nsteps = std::max(1, static_cast<int>(std::ceil(gnorm)));
  const double inv = 1.0 / nsteps;
  for (int s = 0; s < nsteps; ++s) {
    Eigen::VectorXcd term = psi;
    Eigen::VectorXcd acc = psi;
    for (int k = 1; k < 200; ++k) {
      Eigen::VectorXcd next = gv(term) * (inv / k);
      acc += next;
      term.swap(next);
      if (term.norm() < 1e-17 * acc.norm()) break;
    }
    psi = acc;
  }
}

}  // namespace

FockMoments fock_squeezed_moments(double r, double theta, int nmax) {
  if (nmax < 2) throw std::invalid_argument("fock_squeezed_moments: nmax < 2");
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(nmax, nmax);
  for (int n = 1; n < nmax; ++n) a(n - 1, n) = std::sqrt(double(n));
  const Eigen::MatrixXcd ad = a.adjoint();
  const cplx eth = std::polar(1.0, theta);
  const Eigen::MatrixXcd G =
      0.5 * r * (std::conj(eth) * (a * a) - eth * (ad * ad));
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(nmax);
  psi[0] = 1.0;
  apply_exp([&](const Eigen::VectorXcd& v) { return (G * v).eval(); }, psi,
            r * nmax);
  psi.normalize();  // truncation leaks a little norm
  FockMoments fm;
  fm.n1 = psi.dot((ad * a) * psi).real();
  fm.aa1 = psi.dot((a * a) * psi);
  return fm;
}

FockMoments fock_tmsv_moments(double r, double phi, int nmax) {
  if (nmax < 2) throw std::invalid_argument("fock_tmsv_moments: nmax < 2");
  // State as psi(n1, n2); beta a1^dag a2^dag - beta* a1 a2 applied directly.
  using Mat = Eigen::MatrixXcd;
  const cplx beta = std::polar(r, phi);
  auto gv = [&](const Eigen::VectorXcd& v) {
    Eigen::Map<const Mat> p(v.data(), nmax, nmax);
    Mat out = Mat::Zero(nmax, nmax);
    for (int n = 0; n < nmax; ++n)
      for (int m = 0; m < nmax; ++m) {
        cplx acc = 0.0;
        if (n > 0 && m > 0)
          acc += beta * std::sqrt(double(n) * m) * p(n - 1, m - 1);
        if (n + 1 < nmax && m + 1 < nmax)
          acc -= std::conj(beta) * std::sqrt(double(n + 1) * (m + 1)) *
                 p(n + 1, m + 1);
        out(n, m) = acc;
      }
    return Eigen::VectorXcd(Eigen::Map<Eigen::VectorXcd>(out.data(), nmax * nmax));
  };
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(nmax * nmax);
  psi[0] = 1.0;
  apply_exp(gv, psi, 2.0 * r * nmax);
  psi.normalize();
  Eigen::Map<const Mat> p(psi.data(), nmax, nmax);
  FockMoments fm;
  for (int n = 0; n < nmax; ++n)
    for (int m = 0; m < nmax; ++m) {
      const double pr = std::norm(p(n, m));
      fm.n1 += n * pr;
      fm.n2 += m * pr;
      if (n + 1 < nmax && m + 1 < nmax)
        fm.a1_a2 += std::conj(p(n, m)) * std::sqrt(double(n + 1) * (m + 1)) *
                    p(n + 1, m + 1);
      if (n + 2 < nmax)
        fm.aa1 += std::conj(p(n, m)) *
                  std::sqrt(double(n + 1) * (n + 2)) * p(n + 2, m);
    }
  return fm;
}

double ppt_check(const FourPartition& V4) {
  Eigen::Matrix4d V = V4.assemble();
  Eigen::Matrix4d lam = Eigen::Matrix4d::Identity();
  lam(3, 3) = -1.0;  // p2 -> -p2
  const Eigen::Matrix4d Vpt = lam * V * lam;
  Eigen::Matrix4d Om = Eigen::Matrix4d::Zero();
  Om(0, 1) = 1.0; Om(1, 0) = -1.0;
  Om(2, 3) = 1.0; Om(3, 2) = -1.0;
  Eigen::EigenSolver<Eigen::Matrix4d> es(Om * Vpt, false);
  double nu_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 4; ++i) {
    const double im = es.eigenvalues()[i].imag();
    if (im > 0.0) nu_min = std::min(nu_min, im);
  }
  return nu_min;
}

ScanMinimum scan_minimum(const std::function<double(double)>& f, double a,
                         double b, int n_coarse, int n_refine) {
  if (!(b > a) || n_coarse < 3)
    throw std::invalid_argument("scan_minimum: bad interval or grid");
  double best_x = a, best_f = f(a);
  const double h = (b - a) / n_coarse;
  for (int i = 1; i <= n_coarse; ++i) {
    const double x = a + i * h;
    const double fx = f(x);
    if (fx < best_f) {
      best_f = fx;
      best_x = x;
    }
  }
  double lo = std::max(a, best_x - h), hi = std::min(b, best_x + h);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < n_refine; ++it) {
    if (f1 < f2) {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - gr * (hi - lo); f1 = f(x1);
    } else {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + gr * (hi - lo); f2 = f(x2);
    }
  }
  const double xm = 0.5 * (lo + hi);
  return {xm, f(xm)};
}

}  // namespace wpent::oracle
