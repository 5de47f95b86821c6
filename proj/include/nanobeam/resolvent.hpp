#pragma once

#include <span>
#include <string>
#include <vector>

#include "nanobeam/kernels.hpp"
#include "nanobeam/modal_assembly.hpp"
#include "nanobeam/modal_state.hpp"
#include "nanobeam/params.hpp"

namespace nanobeam {

using kernels::ModeMax;

/// Blockwise solver for (i lambda - B) U = F on a fixed truncation.
/// Scaled blocks are computed once and reused across frequencies.
class BlockResolvent {
public:
  BlockResolvent(const BeamParams& p, int n_modes);

  int n_modes() const { return static_cast<int>(scaled_.size()); }
  const BeamParams& params() const { return params_; }

  /// Throws NumericalError when a block is near-singular (reciprocal
  /// condition estimate below kMinRcond), i.e. i lambda sits on the spectrum.
  ComplexModalState solve(double lambda, const ComplexModalState& f) const;

  /// (i lambda - B) U.
  ComplexModalState apply_shifted(double lambda, const ComplexModalState& u) const;

  static constexpr double kMinRcond = 1e-13;

private:
  BeamParams params_;
  std::vector<ModeBlock> blocks_;
  std::vector<kernels::ScaledBlock<kStateSize>> scaled_;
};

/// U with (i lambda - B_n) U_n = F_n for every mode; lambda = 0 is the
/// static problem B U = -F.
ComplexModalState resolve(const BeamParams& p, double lambda, const ComplexModalState& f);

/// max over n = 1..N of ||(i lambda - B_n)^{-1}||_H and the attaining mode.
ModeMax resolvent_norm(const BeamParams& p, int n_modes, double lambda);

/// max over n = 1..N of max Re eig(B_n) and the attaining mode.
ModeMax spectral_abscissa(const BeamParams& p, int n_modes);

ModeMax timoshenko_abscissa(const BeamParams& p, int n_modes, Beam beam = Beam::inner);

struct ResolventPoint {
  double lambda = 0.0;
  double resolvent_norm = 0.0;
  double analyticity_value = 0.0;  // lambda * resolvent_norm
  int argmax_mode = 0;
};

struct ResolventScan {
  int n_modes = 0;
  std::vector<ResolventPoint> points;
  double sup_resolvent = 0.0;
  double sup_analyticity = 0.0;
  double lambda_at_sup_analyticity = 0.0;
};

/// Energy-norm resolvent along i*lambda for a positive frequency grid
/// (negative frequencies mirror by conjugation).
ResolventScan analyticity_scan(const BeamParams& p, int n_modes, std::span<const double> lambda_grid);

ResolventScan timoshenko_analyticity_scan(const BeamParams& p, int n_modes,
                                          std::span<const double> lambda_grid,
                                          Beam beam = Beam::inner);

struct SweepCell {
  double alpha = 0.0;
  double beta = 0.0;
  double spectral_abscissa = 0.0;
  double sup_resolvent = 0.0;
  double sup_analyticity = 0.0;
  int n_modes = 0;
  bool ok = true;
  std::string error;
};

/// Cells stored alpha-major: cell(i, j) has alpha_grid[i], beta_grid[j].
struct SweepReport {
  std::vector<double> alpha_grid;
  std::vector<double> beta_grid;
  std::vector<SweepCell> cells;

  const SweepCell& cell(std::size_t i, std::size_t j) const { return cells[i * beta_grid.size() + j]; }
};

/// Runs spectral_abscissa and analyticity_scan on every (alpha, beta) cell.
/// A failing cell is marked (ok = false) and the sweep continues.
SweepReport sweep_alpha_beta(const BeamParams& p, int n_modes, std::span<const double> alpha_grid,
                             std::span<const double> beta_grid,
                             std::span<const double> lambda_grid);

std::vector<double> log_grid(double lo, double hi, int count);
std::vector<double> linear_grid(double lo, double hi, int count);

}  // namespace nanobeam
