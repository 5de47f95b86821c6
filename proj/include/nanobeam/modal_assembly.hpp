#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "nanobeam/modal_state.hpp"
#include "nanobeam/params.hpp"

namespace nanobeam {

/// Restriction of the generator to one sine/cosine mode pair, together with
/// the energy Gram H (x*Hx = 2 * energy) and the dissipation Gram D
/// (x*Dx = dissipation). For every complex x: Re(x*HBx) = -x*Dx.
template <int Dim>
struct BasicModeBlock {
  using Matrix = Eigen::Matrix<double, Dim, Dim>;

  int n = 0;
  double sigma = 0.0;
  Matrix B = Matrix::Zero();
  Matrix H = Matrix::Zero();
  Matrix D = Matrix::Zero();
};

using ModeBlock = BasicModeBlock<kStateSize>;
/// Single Timoshenko beam, state (u, u_t, v, v_t).
using TimoshenkoBlock = BasicModeBlock<4>;

enum class Beam { inner, outer };

struct GramPair {
  ModeBlock::Matrix H;
  ModeBlock::Matrix D;
};

ModeBlock assemble_block(const BeamParams& p, int n);
GramPair gram_block(const BeamParams& p, int n);

/// Decoupled Timoshenko beam (m ignored). Beam::inner uses
/// (rho1, rho2, kappa1, b1, gamma1, gamma2, alpha); Beam::outer the
/// second-beam constants with beta.
TimoshenkoBlock timoshenko_block(const BeamParams& p, int n, Beam beam = Beam::inner);

/// Blocks for n = 1..n_modes, built in parallel.
std::vector<ModeBlock> assemble_blocks(const BeamParams& p, int n_modes);
std::vector<TimoshenkoBlock> timoshenko_blocks(const BeamParams& p, int n_modes, Beam beam);

/// Eigenvalues of B sorted by descending real part, then descending imaginary
/// part. Throws NumericalError if the eigensolver does not converge.
template <int Dim>
Eigen::Matrix<std::complex<double>, Dim, 1> block_eigenvalues(const BasicModeBlock<Dim>& block);

/// Applies the assembled generator mode by mode.
template <typename Scalar>
BasicModalState<Scalar> apply_generator(const BeamParams& p, const BasicModalState<Scalar>& s);

}  // namespace nanobeam
