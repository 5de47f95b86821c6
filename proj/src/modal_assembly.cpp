#include "nanobeam/modal_assembly.hpp"

#include <algorithm>
#include <string>

#include <Eigen/Eigenvalues>

#include "nanobeam/errors.hpp"

namespace nanobeam {

ModeBlock assemble_block(const BeamParams& p, int n) {
  using namespace slot;
  const double s = sigma(n, p.l);
  const double s2 = s * s;

  ModeBlock blk;
  blk.n = n;
  blk.sigma = s;
  auto& B = blk.B;

  B(u, u_t) = 1.0;
  B(v, v_t) = 1.0;
  B(y, y_t) = 1.0;
  B(z, z_t) = 1.0;

  // rho1 u'' + kappa1 s (s u - v) - m (y - u) + gamma1 s (s u' - v') = 0
  B(u_t, u) = -(p.kappa1 * s2 + p.m) / p.rho1;
  B(u_t, v) = p.kappa1 * s / p.rho1;
  B(u_t, y) = p.m / p.rho1;
  B(u_t, u_t) = -p.gamma1 * s2 / p.rho1;
  B(u_t, v_t) = p.gamma1 * s / p.rho1;

  // rho2 v'' + b1 s^2 v - kappa1 (s u - v) - gamma1 (s u' - v') + gamma2 s^{2 alpha} v' = 0
  B(v_t, u) = p.kappa1 * s / p.rho2;
  B(v_t, v) = -(p.b1 * s2 + p.kappa1) / p.rho2;
  B(v_t, u_t) = p.gamma1 * s / p.rho2;
  B(v_t, v_t) = -(p.gamma1 + p.gamma2 * fractional_power(s, p.alpha)) / p.rho2;

  // rho3 y'' + kappa2 s (s y - z) + m (y - u) + gamma3 s (s y' - z') = 0
  B(y_t, y) = -(p.kappa2 * s2 + p.m) / p.rho3;
  B(y_t, z) = p.kappa2 * s / p.rho3;
  B(y_t, u) = p.m / p.rho3;
  B(y_t, y_t) = -p.gamma3 * s2 / p.rho3;
  B(y_t, z_t) = p.gamma3 * s / p.rho3;

  // rho4 z'' + b2 s^2 z - kappa2 (s y - z) - gamma3 (s y' - z') + gamma4 s^{2 beta} z' = 0
  B(z_t, y) = p.kappa2 * s / p.rho4;
  B(z_t, z) = -(p.b2 * s2 + p.kappa2) / p.rho4;
  B(z_t, y_t) = p.gamma3 * s / p.rho4;
  B(z_t, z_t) = -(p.gamma3 + p.gamma4 * fractional_power(s, p.beta)) / p.rho4;

  const GramPair g = gram_block(p, n);
  blk.H = g.H;
  blk.D = g.D;
  return blk;
}

namespace {

// c |a x_i - x_j|^2 added to a symmetric Gram.
template <typename Matrix>
void add_difference_square(Matrix& G, int i, int j, double a, double c) {
  G(i, i) += c * a * a;
  G(j, j) += c;
  G(i, j) -= c * a;
  G(j, i) -= c * a;
}

}  // namespace

GramPair gram_block(const BeamParams& p, int n) {
  using namespace slot;
  const double s = sigma(n, p.l);
  GramPair g{ModeBlock::Matrix::Zero(), ModeBlock::Matrix::Zero()};
  auto& H = g.H;
  H(u_t, u_t) = p.rho1;
  H(v_t, v_t) = p.rho2;
  H(y_t, y_t) = p.rho3;
  H(z_t, z_t) = p.rho4;
  add_difference_square(H, u, v, s, p.kappa1);
  add_difference_square(H, y, z, s, p.kappa2);
  add_difference_square(H, y, u, 1.0, p.m);
  H(v, v) += p.b1 * s * s;
  H(z, z) += p.b2 * s * s;

  auto& D = g.D;
  add_difference_square(D, u_t, v_t, s, p.gamma1);
  add_difference_square(D, y_t, z_t, s, p.gamma3);
  D(v_t, v_t) += p.gamma2 * fractional_power(s, p.alpha);
  D(z_t, z_t) += p.gamma4 * fractional_power(s, p.beta);
  return g;
}

TimoshenkoBlock timoshenko_block(const BeamParams& p, int n, Beam beam) {
  const bool inner = beam == Beam::inner;
  const double rho_a = inner ? p.rho1 : p.rho3;
  const double rho_b = inner ? p.rho2 : p.rho4;
  const double kappa = inner ? p.kappa1 : p.kappa2;
  const double b = inner ? p.b1 : p.b2;
  const double g_shear = inner ? p.gamma1 : p.gamma3;
  const double g_frac = inner ? p.gamma2 : p.gamma4;
  const double expo = inner ? p.alpha : p.beta;

  const double s = sigma(n, p.l);
  const double s2 = s * s;
  const double frac = fractional_power(s, expo);
  TimoshenkoBlock blk;
  blk.n = n;
  blk.sigma = s;

  // (u, u_t, v, v_t) = (0, 1, 2, 3)
  auto& B = blk.B;
  B(0, 1) = 1.0;
  B(2, 3) = 1.0;
  B(1, 0) = -(kappa * s2) / rho_a;
  B(1, 2) = kappa * s / rho_a;
  B(1, 1) = -g_shear * s2 / rho_a;
  B(1, 3) = g_shear * s / rho_a;
  B(3, 0) = kappa * s / rho_b;
  B(3, 2) = -(b * s2 + kappa) / rho_b;
  B(3, 1) = g_shear * s / rho_b;
  B(3, 3) = -(g_shear + g_frac * frac) / rho_b;

  auto& H = blk.H;
  H(1, 1) = rho_a;
  H(3, 3) = rho_b;
  add_difference_square(H, 0, 2, s, kappa);
  H(2, 2) += b * s * s;

  auto& D = blk.D;
  add_difference_square(D, 1, 3, s, g_shear);
  D(3, 3) += g_frac * frac;
  return blk;
}

std::vector<ModeBlock> assemble_blocks(const BeamParams& p, int n_modes) {
  std::vector<ModeBlock> blocks(static_cast<std::size_t>(n_modes));
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n_modes; ++i) blocks[static_cast<std::size_t>(i)] = assemble_block(p, i + 1);
  return blocks;
}

std::vector<TimoshenkoBlock> timoshenko_blocks(const BeamParams& p, int n_modes, Beam beam) {
  std::vector<TimoshenkoBlock> blocks(static_cast<std::size_t>(n_modes));
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n_modes; ++i)
    blocks[static_cast<std::size_t>(i)] = timoshenko_block(p, i + 1, beam);
  return blocks;
}

template <int Dim>
Eigen::Matrix<std::complex<double>, Dim, 1> block_eigenvalues(const BasicModeBlock<Dim>& block) {
  Eigen::EigenSolver<Eigen::Matrix<double, Dim, Dim>> solver(block.B, false);
  if (solver.info() != Eigen::Success)
    throw NumericalError("eigensolver did not converge for mode " + std::to_string(block.n));
  Eigen::Matrix<std::complex<double>, Dim, 1> ev = solver.eigenvalues();
  std::sort(ev.data(), ev.data() + Dim, [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return ev;
}

template Eigen::Matrix<std::complex<double>, 8, 1> block_eigenvalues(const ModeBlock&);
template Eigen::Matrix<std::complex<double>, 4, 1> block_eigenvalues(const TimoshenkoBlock&);

template <typename Scalar>
BasicModalState<Scalar> apply_generator(const BeamParams& p, const BasicModalState<Scalar>& s) {
  BasicModalState<Scalar> out(s.n_modes());
  for (int n = 1; n <= s.n_modes(); ++n)
    out.mode(n) = assemble_block(p, n).B.template cast<Scalar>() * s.mode(n);
  return out;
}

template ModalState apply_generator(const BeamParams&, const ModalState&);
template ComplexModalState apply_generator(const BeamParams&, const ComplexModalState&);

}  // namespace nanobeam
