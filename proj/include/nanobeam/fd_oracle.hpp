#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "nanobeam/params.hpp"

namespace nanobeam {

/// Staggered finite-difference discretization of the coupled beams on
/// [0, l] with M cells. u, y live on the M-1 interior nodes (Dirichlet ends
/// excluded); v, z live on the M cell centres, restricted to mean-free
/// vectors v = E w with E = [e_k - e_{k+1}]. The unknown vector stacks eight
/// blocks of length M-1:
///   (u, u_t, w_v, w_v_t, y, y_t, w_z, w_z_t).
/// Dynamics: mass * x' = stiffness * x.
struct FdOperator {
  using Sparse = Eigen::SparseMatrix<double>;

  int M = 0;
  double h = 0.0;
  int block = 0;  // M - 1
  BeamParams params;
  Sparse stiffness;
  Sparse mass;
  Sparse energy;       // x^T energy x = 2 * discrete energy
  Sparse dissipation;  // x^T dissipation x = discrete dissipation rate

  int dim() const { return 8 * block; }
};

namespace fd_block {
inline constexpr int u = 0;
inline constexpr int u_t = 1;
inline constexpr int v = 2;
inline constexpr int v_t = 3;
inline constexpr int y = 4;
inline constexpr int y_t = 5;
inline constexpr int z = 6;
inline constexpr int z_t = 7;
}  // namespace fd_block

/// Staggered gradient, M x (M-1): (D u)_j = (u_{j+1} - u_j) / h with zero ends.
Eigen::SparseMatrix<double> staggered_gradient(int M, double h);
/// Ghost-cell Neumann Laplacian on cell centres (-d^2/dx^2), M x M. Equals D D^T.
Eigen::SparseMatrix<double> neumann_laplacian(int M, double h);
/// Mean-free basis E, M x (M-1).
Eigen::SparseMatrix<double> mean_free_basis(int M);
/// Neumann Laplacian to the power a on the mean-free subspace (dense M x M),
/// from an eigendecomposition of the tridiagonal matrix.
Eigen::MatrixXd fractional_laplacian(int M, double h, double a);

/// Requires M >= 8. Accepts m = 0 (decoupled beams).
FdOperator build_fd(const BeamParams& p, int M);

/// mass^{-1} stiffness as a dense matrix; for small M only.
Eigen::MatrixXd fd_dense_generator(const FdOperator& op);

double fd_energy(const FdOperator& op, const Eigen::VectorXd& x);
double fd_dissipation(const FdOperator& op, const Eigen::VectorXd& x);

/// Energies along exp(t B_fd) x0 at increasing times (dense exponential, small M).
std::vector<double> fd_energy_trajectory(const FdOperator& op, const Eigen::VectorXd& x0,
                                         std::span<const double> times);

/// Fraction of the vector's squared norm carried by discrete mode n
/// (sine on nodes, cosine on cells). 1 for a pure mode-n vector.
double mode_signature(const FdOperator& op, const Eigen::VectorXcd& x, int n);

struct SpectrumMatch {
  int mode = 0;
  std::complex<double> modal;
  std::complex<double> fd;
  double rel_error = 0.0;
  double signature = 0.0;
};

struct SpectrumComparison {
  int M = 0;
  int n_low = 0;
  std::vector<SpectrumMatch> matches;  // upper half plane; conjugates implied
  double max_rel_error = 0.0;
  double mode1_rel_error = 0.0;
};

/// Every eigenvalue of modes 1..n_low is located in the FD spectrum by
/// shift-invert Arnoldi at the modal value and paired by mode signature.
/// Throws NumericalError on a pairing failure (no converged FD eigenvector
/// with the right mode pattern near the target).
SpectrumComparison compare_spectra(const BeamParams& p, int M, int n_low);

}  // namespace nanobeam
