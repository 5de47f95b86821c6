#include "nanobeam/fd_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SparseLU>
#include <unsupported/Eigen/MatrixFunctions>

#include "nanobeam/errors.hpp"
#include "nanobeam/modal_assembly.hpp"

namespace nanobeam {

using Sparse = Eigen::SparseMatrix<double>;
using Triplets = std::vector<Eigen::Triplet<double>>;

Sparse staggered_gradient(int M, double h) {
  Triplets t;
  for (int j = 0; j < M; ++j) {
    if (j < M - 1) t.emplace_back(j, j, 1.0 / h);  // u_{j+1}, node j+1 is column j
    if (j > 0) t.emplace_back(j, j - 1, -1.0 / h);
  }
  Sparse D(M, M - 1);
  D.setFromTriplets(t.begin(), t.end());
  return D;
}

Sparse neumann_laplacian(int M, double h) {
  const double c = 1.0 / (h * h);
  Triplets t;
  for (int j = 0; j < M; ++j) {
    // ghost cells mirror the boundary cells
    const double diag = (j == 0 || j == M - 1) ? c : 2.0 * c;
    t.emplace_back(j, j, diag);
    if (j > 0) t.emplace_back(j, j - 1, -c);
    if (j < M - 1) t.emplace_back(j, j + 1, -c);
  }
  Sparse A(M, M);
  A.setFromTriplets(t.begin(), t.end());
  return A;
}

Sparse mean_free_basis(int M) {
  Triplets t;
  for (int k = 0; k < M - 1; ++k) {
    t.emplace_back(k, k, 1.0);
    t.emplace_back(k + 1, k, -1.0);
  }
  Sparse E(M, M - 1);
  E.setFromTriplets(t.begin(), t.end());
  return E;
}

Eigen::MatrixXd fractional_laplacian(int M, double h, double a) {
  const double c = 1.0 / (h * h);
  Eigen::VectorXd diag = Eigen::VectorXd::Constant(M, 2.0 * c);
  diag(0) = diag(M - 1) = c;
  const Eigen::VectorXd sub = Eigen::VectorXd::Constant(M - 1, -c);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) throw NumericalError("Neumann Laplacian eigensolver did not converge");

  // eigenvalues ascend; index 0 is the constant null vector
  const auto& Q = es.eigenvectors();
  Eigen::VectorXd w(M - 1);
  for (int k = 1; k < M; ++k) w(k - 1) = fractional_power(std::sqrt(std::max(es.eigenvalues()(k), 0.0)), a);
  const Eigen::MatrixXd Qr = Q.rightCols(M - 1);
  return Qr * w.asDiagonal() * Qr.transpose();
}

namespace {

class BlockBuilder {
public:
  explicit BlockBuilder(int block) : block_(block) {}

  void add(int bi, int bj, const Sparse& m, double c = 1.0) {
    for (int k = 0; k < m.outerSize(); ++k)
      for (Sparse::InnerIterator it(m, k); it; ++it)
        t_.emplace_back(bi * block_ + it.row(), bj * block_ + it.col(), c * it.value());
  }

  void add_dense(int bi, int bj, const Eigen::MatrixXd& m, double c = 1.0) {
    for (int j = 0; j < m.cols(); ++j)
      for (int i = 0; i < m.rows(); ++i)
        if (m(i, j) != 0.0) t_.emplace_back(bi * block_ + i, bj * block_ + j, c * m(i, j));
  }

  void add_identity(int bi, int bj, double c = 1.0) {
    for (int i = 0; i < block_; ++i) t_.emplace_back(bi * block_ + i, bj * block_ + i, c);
  }

  // c |A x_i - B x_j|^2
  void add_difference_square(int bi, const Sparse& A, int bj, const Sparse& Bm, double c) {
    add(bi, bi, Sparse(A.transpose() * A), c);
    add(bj, bj, Sparse(Bm.transpose() * Bm), c);
    add(bi, bj, Sparse(A.transpose() * Bm), -c);
    add(bj, bi, Sparse(Bm.transpose() * A), -c);
  }

  Sparse build() const {
    Sparse S(8 * block_, 8 * block_);
    S.setFromTriplets(t_.begin(), t_.end());
    S.makeCompressed();
    return S;
  }

private:
  int block_;
  Triplets t_;
};

// E^T A^a E, sparse at the endpoints, dense otherwise.
struct FractionalBlock {
  bool dense = false;
  Sparse sparse;
  Eigen::MatrixXd full;
};

FractionalBlock fractional_block(int M, double h, double a, const Sparse& E, const Sparse& EtE,
                                 const Sparse& EtAE) {
  FractionalBlock f;
  if (a == 0.0) {
    f.sparse = EtE;  // mean-free projector
  } else if (a == 1.0) {
    f.sparse = EtAE;
  } else {
    f.dense = true;
    const Eigen::MatrixXd Ed(E);
    f.full = Ed.transpose() * fractional_laplacian(M, h, a) * Ed;
  }
  return f;
}

void add_fractional(BlockBuilder& b, int bi, int bj, const FractionalBlock& f, double c) {
  if (f.dense)
    b.add_dense(bi, bj, f.full, c);
  else
    b.add(bi, bj, f.sparse, c);
}

}  // namespace

FdOperator build_fd(const BeamParams& p, int M) {
  validate_params_allow_uncoupled(p);
  if (M < 8) throw ValidationError("FD grid needs M >= 8");
  using namespace fd_block;

  FdOperator op;
  op.M = M;
  op.h = p.l / M;
  op.block = M - 1;
  op.params = p;

  const Sparse D = staggered_gradient(M, op.h);
  const Sparse A = neumann_laplacian(M, op.h);
  const Sparse E = mean_free_basis(M);
  const Sparse Et = E.transpose();
  const Sparse Dt = D.transpose();
  const Sparse DtD = Dt * D;
  const Sparse DtE = Dt * E;
  const Sparse EtD = Et * D;
  const Sparse EtE = Et * E;
  const Sparse EtAE = Et * A * E;
  const FractionalBlock Fa = fractional_block(M, op.h, p.alpha, E, EtE, EtAE);
  const FractionalBlock Fb = fractional_block(M, op.h, p.beta, E, EtE, EtAE);

  BlockBuilder K(op.block), Mm(op.block), H(op.block), Dd(op.block);

  for (int b : {u, v, y, z}) {
    K.add_identity(b, b + 1);
    Mm.add_identity(b, b);
  }
  Mm.add_identity(u_t, u_t, p.rho1);
  Mm.add(v_t, v_t, EtE, p.rho2);
  Mm.add_identity(y_t, y_t, p.rho3);
  Mm.add(z_t, z_t, EtE, p.rho4);

  // rho1 u_tt = -kappa1 D^T (D u - v) + m (y - u) - gamma1 D^T (D u_t - v_t)
  K.add(u_t, u, DtD, -p.kappa1);
  K.add(u_t, v, DtE, p.kappa1);
  K.add_identity(u_t, u, -p.m);
  K.add_identity(u_t, y, p.m);
  K.add(u_t, u_t, DtD, -p.gamma1);
  K.add(u_t, v_t, DtE, p.gamma1);

  // rho2 v_tt = -b1 A v + kappa1 (D u - v) + gamma1 (D u_t - v_t) - gamma2 A^alpha v_t, tested with E^T
  K.add(v_t, v, EtAE, -p.b1);
  K.add(v_t, v, EtE, -p.kappa1);
  K.add(v_t, u, EtD, p.kappa1);
  K.add(v_t, u_t, EtD, p.gamma1);
  K.add(v_t, v_t, EtE, -p.gamma1);
  add_fractional(K, v_t, v_t, Fa, -p.gamma2);

  K.add(y_t, y, DtD, -p.kappa2);
  K.add(y_t, z, DtE, p.kappa2);
  K.add_identity(y_t, y, -p.m);
  K.add_identity(y_t, u, p.m);
  K.add(y_t, y_t, DtD, -p.gamma3);
  K.add(y_t, z_t, DtE, p.gamma3);

  K.add(z_t, z, EtAE, -p.b2);
  K.add(z_t, z, EtE, -p.kappa2);
  K.add(z_t, y, EtD, p.kappa2);
  K.add(z_t, y_t, EtD, p.gamma3);
  K.add(z_t, z_t, EtE, -p.gamma3);
  add_fractional(K, z_t, z_t, Fb, -p.gamma4);

  // discrete energy, h-weighted
  const double h = op.h;
  Sparse I(op.block, op.block);
  I.setIdentity();
  H.add_identity(u_t, u_t, h * p.rho1);
  H.add(v_t, v_t, EtE, h * p.rho2);
  H.add_identity(y_t, y_t, h * p.rho3);
  H.add(z_t, z_t, EtE, h * p.rho4);
  H.add_difference_square(u, D, v, E, h * p.kappa1);
  H.add_difference_square(y, D, z, E, h * p.kappa2);
  if (p.m != 0.0) H.add_difference_square(y, I, u, I, h * p.m);
  H.add(v, v, EtAE, h * p.b1);
  H.add(z, z, EtAE, h * p.b2);

  Dd.add_difference_square(u_t, D, v_t, E, h * p.gamma1);
  add_fractional(Dd, v_t, v_t, Fa, h * p.gamma2);
  Dd.add_difference_square(y_t, D, z_t, E, h * p.gamma3);
  add_fractional(Dd, z_t, z_t, Fb, h * p.gamma4);

  op.stiffness = K.build();
  op.mass = Mm.build();
  op.energy = H.build();
  op.dissipation = Dd.build();
  return op;
}

Eigen::MatrixXd fd_dense_generator(const FdOperator& op) {
  const Eigen::MatrixXd Md(op.mass), Kd(op.stiffness);
  return Md.partialPivLu().solve(Kd);
}

double fd_energy(const FdOperator& op, const Eigen::VectorXd& x) { return 0.5 * x.dot(op.energy * x); }

double fd_dissipation(const FdOperator& op, const Eigen::VectorXd& x) { return x.dot(op.dissipation * x); }

std::vector<double> fd_energy_trajectory(const FdOperator& op, const Eigen::VectorXd& x0,
                                         std::span<const double> times) {
  const Eigen::MatrixXd B = fd_dense_generator(op);
  std::vector<double> out;
  out.reserve(times.size());
  Eigen::VectorXd x = x0;
  double t_prev = 0.0;
  Eigen::MatrixXd step;
  double cached = -1.0;
  for (double t : times) {
    const double dt = t - t_prev;
    if (dt < 0.0) throw ValidationError("times must be non-decreasing from 0");
    if (dt > 0.0) {
      if (std::abs(dt - cached) > 1e-12 * dt) {
        const Eigen::MatrixXd scaled = B * dt;
        step = scaled.exp();
        cached = dt;
      }
      x = step * x;
    }
    t_prev = t;
    out.push_back(fd_energy(op, x));
  }
  return out;
}

double mode_signature(const FdOperator& op, const Eigen::VectorXcd& x, int n) {
  using namespace fd_block;
  const int M = op.M, nb = op.block;
  const double scale = std::sqrt(2.0 / M);
  Eigen::VectorXd sine(nb), cosine(M);
  for (int j = 1; j < M; ++j) sine(j - 1) = scale * std::sin(n * std::numbers::pi * j / M);
  for (int j = 0; j < M; ++j) cosine(j) = scale * std::cos(n * std::numbers::pi * (j + 0.5) / M);
  const Sparse E = mean_free_basis(M);
  const Eigen::VectorXd cos_w = E.transpose() * cosine;  // <E w, c> = <w, E^T c>

  double captured = 0.0, total = 0.0;
  for (int b = 0; b < 8; ++b) {
    const Eigen::VectorXcd part = x.segment(b * nb, nb);
    if (b == u || b == u_t || b == y || b == y_t) {
      captured += std::norm(sine.dot(part));
      total += part.squaredNorm();
    } else {
      const Eigen::VectorXcd cell = E.cast<std::complex<double>>() * part;
      captured += std::norm(cos_w.dot(part));
      total += cell.squaredNorm();
    }
  }
  return total > 0.0 ? captured / total : 0.0;
}

namespace {

struct RitzCandidate {
  std::complex<double> lambda;
  Eigen::VectorXcd vector;
  double residual = 0.0;  // relative Arnoldi residual estimate
};

// Shift-invert Arnoldi for K x = lambda Mass x near mu.
std::vector<RitzCandidate> shift_invert(const FdOperator& op, std::complex<double> mu, int krylov,
                                        std::uint64_t seed) {
  using CSparse = Eigen::SparseMatrix<std::complex<double>>;
  const CSparse Kc = op.stiffness.cast<std::complex<double>>();
  const CSparse Mc = op.mass.cast<std::complex<double>>();
  CSparse shifted = Kc - mu * Mc;
  shifted.makeCompressed();
  Eigen::SparseLU<CSparse, Eigen::COLAMDOrdering<int>> lu;
  lu.compute(shifted);
  if (lu.info() != Eigen::Success) throw NumericalError("FD shift factorization failed");

  const int n = op.dim();
  const int m = std::min(krylov, n);
  Eigen::MatrixXcd V(n, m + 1);
  Eigen::MatrixXcd Hm = Eigen::MatrixXcd::Zero(m + 1, m);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::VectorXcd v0(n);
  for (int i = 0; i < n; ++i) v0(i) = {normal(rng), normal(rng)};
  V.col(0) = v0 / v0.norm();

  int k = 0;
  for (; k < m; ++k) {
    Eigen::VectorXcd w = lu.solve(Mc * V.col(k));
    for (int pass = 0; pass < 2; ++pass) {  // reorthogonalize once
      for (int j = 0; j <= k; ++j) {
        const std::complex<double> c = V.col(j).dot(w);
        Hm(j, k) += c;
        w -= c * V.col(j);
      }
    }
    const double beta = w.norm();
    Hm(k + 1, k) = beta;
    if (beta < 1e-14 * Hm.col(k).norm()) {
      ++k;
      break;
    }
    V.col(k + 1) = w / beta;
  }

  const Eigen::MatrixXcd Hk = Hm.topLeftCorner(k, k);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(Hk);
  if (es.info() != Eigen::Success) throw NumericalError("Arnoldi Ritz eigensolver did not converge");
  const double tail = std::abs(Hm(k, k - 1));

  std::vector<RitzCandidate> out;
  for (int i = 0; i < k; ++i) {
    const std::complex<double> theta = es.eigenvalues()(i);
    if (theta == 0.0) continue;
    const Eigen::VectorXcd y = es.eigenvectors().col(i);
    RitzCandidate c;
    c.lambda = mu + 1.0 / theta;
    c.vector = V.leftCols(k) * y;
    c.residual = tail * std::abs(y(k - 1)) / std::abs(theta);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [&](const RitzCandidate& a, const RitzCandidate& b) {
    return std::abs(a.lambda - mu) < std::abs(b.lambda - mu);
  });
  return out;
}

}  // namespace

SpectrumComparison compare_spectra(const BeamParams& p, int M, int n_low) {
  if (n_low < 1) throw ValidationError("n_low must be at least 1");
  if (4 * n_low > M) throw ValidationError("n_low must be much smaller than M");
  const FdOperator op = build_fd(p, M);

  SpectrumComparison rep;
  rep.M = M;
  rep.n_low = n_low;
  std::uint64_t seed = 0x5eed;
  for (int n = 1; n <= n_low; ++n) {
    const auto eig = block_eigenvalues(assemble_block(p, n));
    for (int i = 0; i < eig.size(); ++i) {
      const std::complex<double> target = eig(i);
      if (target.imag() < 0.0) continue;
      const auto cands = shift_invert(op, target, 30, seed++);
      const RitzCandidate* chosen = nullptr;
      double sig = 0.0;
      for (const auto& c : cands) {
        if (c.residual > 1e-8) continue;
        const double s = mode_signature(op, c.vector, n);
        if (s >= 0.9) {
          chosen = &c;
          sig = s;
          break;
        }
      }
      if (!chosen)
        throw NumericalError("pairing failure: no FD eigenvector of mode " + std::to_string(n) +
                             " near modal eigenvalue (" + std::to_string(target.real()) + ", " +
                             std::to_string(target.imag()) + ") at M=" + std::to_string(M));
      SpectrumMatch match;
      match.mode = n;
      match.modal = target;
      match.fd = chosen->lambda;
      match.rel_error = std::abs(chosen->lambda - target) / std::abs(target);
      match.signature = sig;
      rep.max_rel_error = std::max(rep.max_rel_error, match.rel_error);
      if (n == 1) rep.mode1_rel_error = std::max(rep.mode1_rel_error, match.rel_error);
      rep.matches.push_back(match);
    }
  }
  return rep;
}

}  // namespace nanobeam
