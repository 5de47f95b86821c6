#pragma once

// Per-mode / per-frequency kernels behind the resolvent analysis.
//
// Two implementations share one contract: `reference` is plain serial code
// kept as the test oracle, `parallel` distributes the same per-item
// evaluations over OpenMP threads. Both reduce with the same tie rule
// (largest value, lowest mode on ties), so results are bitwise identical.

#include <complex>
#include <limits>
#include <span>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <Eigen/SVD>

#include "nanobeam/errors.hpp"
#include "nanobeam/modal_assembly.hpp"

namespace nanobeam::kernels {

/// Generator in energy coordinates: with H = L L^T, Bs = L^T B L^{-T}.
/// The H-norm of any operator on the mode equals the 2-norm of its
/// conjugate by L^T.
template <int Dim>
struct ScaledBlock {
  using Matrix = Eigen::Matrix<double, Dim, Dim>;
  int n = 0;
  Matrix Bs = Matrix::Zero();
  Matrix L = Matrix::Zero();
};

struct ModeMax {
  double value = -std::numeric_limits<double>::infinity();
  int mode = 0;
};

/// Larger value wins; lower mode breaks ties.
inline bool better(const ModeMax& a, const ModeMax& b) {
  return a.value > b.value || (a.value == b.value && a.mode < b.mode);
}

template <int Dim>
ScaledBlock<Dim> scale_block(const BasicModeBlock<Dim>& blk) {
  Eigen::LLT<typename ScaledBlock<Dim>::Matrix> llt(blk.H);
  if (llt.info() != Eigen::Success)
    throw NumericalError("energy Gram is not positive definite at mode " + std::to_string(blk.n));
  ScaledBlock<Dim> out;
  out.n = blk.n;
  out.L = llt.matrixL();
  // Bs^T = L^{-1} B^T L
  const typename ScaledBlock<Dim>::Matrix rhs = blk.B.transpose() * out.L;
  out.Bs = out.L.template triangularView<Eigen::Lower>().solve(rhs).transpose();
  return out;
}

/// ||(i lambda - B)^{-1}||_H for one mode; +inf when i lambda is (numerically)
/// an eigenvalue.
template <int Dim>
double block_resolvent_norm(const ScaledBlock<Dim>& blk, double lambda) {
  using CMatrix = Eigen::Matrix<std::complex<double>, Dim, Dim>;
  CMatrix shifted = -blk.Bs.template cast<std::complex<double>>();
  shifted.diagonal().array() += std::complex<double>(0.0, lambda);
  Eigen::JacobiSVD<CMatrix> svd(shifted);
  const auto& sv = svd.singularValues();
  const double smin = sv(Dim - 1);
  if (!(smin > sv(0) * std::numeric_limits<double>::epsilon()))
    return std::numeric_limits<double>::infinity();
  return 1.0 / smin;
}

template <int Dim>
double block_abscissa(const BasicModeBlock<Dim>& blk) {
  return block_eigenvalues(blk).real().maxCoeff();
}

namespace reference {

template <int Dim>
std::vector<ScaledBlock<Dim>> scale_blocks(std::span<const BasicModeBlock<Dim>> blocks);

/// max over modes of the per-mode resolvent norm at one frequency.
template <int Dim>
ModeMax resolvent_max(std::span<const ScaledBlock<Dim>> blocks, double lambda);

/// resolvent_max for every frequency of a grid.
template <int Dim>
std::vector<ModeMax> resolvent_scan(std::span<const ScaledBlock<Dim>> blocks,
                                    std::span<const double> lambdas);

/// max over modes of the largest real part of the block spectrum.
template <int Dim>
ModeMax abscissa_max(std::span<const BasicModeBlock<Dim>> blocks);

}  // namespace reference

namespace parallel {

template <int Dim>
std::vector<ScaledBlock<Dim>> scale_blocks(std::span<const BasicModeBlock<Dim>> blocks);

template <int Dim>
ModeMax resolvent_max(std::span<const ScaledBlock<Dim>> blocks, double lambda);

template <int Dim>
std::vector<ModeMax> resolvent_scan(std::span<const ScaledBlock<Dim>> blocks,
                                    std::span<const double> lambdas);

template <int Dim>
ModeMax abscissa_max(std::span<const BasicModeBlock<Dim>> blocks);

}  // namespace parallel

}  // namespace nanobeam::kernels
