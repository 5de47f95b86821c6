#include "nanobeam/resolvent.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/LU>

#include "nanobeam/errors.hpp"

namespace nanobeam {

namespace {

using CVector = Eigen::Matrix<std::complex<double>, kStateSize, 1>;
using CMatrix = Eigen::Matrix<std::complex<double>, kStateSize, kStateSize>;

void require_modes(int n_modes) {
  if (n_modes < 1) throw ValidationError("n_modes must be at least 1");
}

void require_positive_grid(std::span<const double> grid) {
  if (grid.empty()) throw ValidationError("lambda grid must not be empty");
  for (double lam : grid)
    if (!std::isfinite(lam) || lam <= 0.0)
      throw ValidationError("lambda grid must contain positive finite values");
}

template <int Dim>
ResolventScan scan_blocks(std::span<const BasicModeBlock<Dim>> blocks, std::span<const double> grid) {
  require_positive_grid(grid);
  const auto scaled = kernels::parallel::scale_blocks(blocks);
  const auto maxima =
      kernels::parallel::resolvent_scan(std::span<const kernels::ScaledBlock<Dim>>(scaled), grid);

  ResolventScan scan;
  scan.n_modes = static_cast<int>(blocks.size());
  scan.points.reserve(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!std::isfinite(maxima[k].value)) {
      std::ostringstream msg;
      msg << "resolvent is singular at lambda = " << grid[k] << " (mode " << maxima[k].mode << ")";
      throw NumericalError(msg.str());
    }
    ResolventPoint pt{grid[k], maxima[k].value, grid[k] * maxima[k].value, maxima[k].mode};
    scan.sup_resolvent = std::max(scan.sup_resolvent, pt.resolvent_norm);
    if (pt.analyticity_value > scan.sup_analyticity) {
      scan.sup_analyticity = pt.analyticity_value;
      scan.lambda_at_sup_analyticity = pt.lambda;
    }
    scan.points.push_back(pt);
  }
  return scan;
}

}  // namespace

BlockResolvent::BlockResolvent(const BeamParams& p, int n_modes) : params_(validate_params(p)) {
  require_modes(n_modes);
  blocks_ = assemble_blocks(params_, n_modes);
  scaled_ = kernels::parallel::scale_blocks(std::span<const ModeBlock>(blocks_));
}

ComplexModalState BlockResolvent::solve(double lambda, const ComplexModalState& f) const {
  if (f.n_modes() != n_modes()) throw ValidationError("state truncation does not match resolvent");
  ComplexModalState u(n_modes());
  for (int n = 1; n <= n_modes(); ++n) {
    const auto& sb = scaled_[static_cast<std::size_t>(n - 1)];
    CMatrix shifted = -sb.Bs.cast<std::complex<double>>();
    shifted.diagonal().array() += std::complex<double>(0.0, lambda);
    const Eigen::PartialPivLU<CMatrix> lu(shifted);
    const double rcond = lu.rcond();
    if (!(rcond >= kMinRcond)) {
      std::ostringstream msg;
      msg << "near-singular block solve at mode " << n << " for lambda = " << lambda
          << " (rcond " << rcond << ")";
      throw NumericalError(msg.str());
    }
    const CMatrix lt = sb.L.transpose().cast<std::complex<double>>();
    const CVector w = lu.solve(lt * f.mode(n));
    u.mode(n) = lt.triangularView<Eigen::Upper>().solve(w);
  }
  return u;
}

ComplexModalState BlockResolvent::apply_shifted(double lambda, const ComplexModalState& u) const {
  if (u.n_modes() != n_modes()) throw ValidationError("state truncation does not match resolvent");
  ComplexModalState f(n_modes());
  const std::complex<double> shift(0.0, lambda);
  for (int n = 1; n <= n_modes(); ++n) {
    const auto& blk = blocks_[static_cast<std::size_t>(n - 1)];
    f.mode(n) = shift * u.mode(n) - blk.B.cast<std::complex<double>>() * u.mode(n);
  }
  return f;
}

ComplexModalState resolve(const BeamParams& p, double lambda, const ComplexModalState& f) {
  return BlockResolvent(p, f.n_modes()).solve(lambda, f);
}

ModeMax resolvent_norm(const BeamParams& p, int n_modes, double lambda) {
  validate_params(p);
  require_modes(n_modes);
  const auto blocks = assemble_blocks(p, n_modes);
  const auto scaled = kernels::parallel::scale_blocks(std::span<const ModeBlock>(blocks));
  const ModeMax r = kernels::parallel::resolvent_max(
      std::span<const kernels::ScaledBlock<kStateSize>>(scaled), lambda);
  if (!std::isfinite(r.value)) throw NumericalError("resolvent is singular at the requested lambda");
  return r;
}

ModeMax spectral_abscissa(const BeamParams& p, int n_modes) {
  validate_params(p);
  require_modes(n_modes);
  const auto blocks = assemble_blocks(p, n_modes);
  return kernels::parallel::abscissa_max(std::span<const ModeBlock>(blocks));
}

ModeMax timoshenko_abscissa(const BeamParams& p, int n_modes, Beam beam) {
  validate_params_allow_uncoupled(p);
  require_modes(n_modes);
  const auto blocks = timoshenko_blocks(p, n_modes, beam);
  return kernels::parallel::abscissa_max(std::span<const TimoshenkoBlock>(blocks));
}

ResolventScan analyticity_scan(const BeamParams& p, int n_modes, std::span<const double> lambda_grid) {
  validate_params(p);
  require_modes(n_modes);
  const auto blocks = assemble_blocks(p, n_modes);
  return scan_blocks(std::span<const ModeBlock>(blocks), lambda_grid);
}

ResolventScan timoshenko_analyticity_scan(const BeamParams& p, int n_modes,
                                          std::span<const double> lambda_grid, Beam beam) {
  validate_params_allow_uncoupled(p);
  require_modes(n_modes);
  const auto blocks = timoshenko_blocks(p, n_modes, beam);
  return scan_blocks(std::span<const TimoshenkoBlock>(blocks), lambda_grid);
}

SweepReport sweep_alpha_beta(const BeamParams& p, int n_modes, std::span<const double> alpha_grid,
                             std::span<const double> beta_grid,
                             std::span<const double> lambda_grid) {
  for (double a : alpha_grid)
    if (!(a >= 0.0 && a <= 1.0)) throw ValidationError("alpha grid must lie in [0,1]");
  for (double b : beta_grid)
    if (!(b >= 0.0 && b <= 1.0)) throw ValidationError("beta grid must lie in [0,1]");
  if (alpha_grid.empty() || beta_grid.empty()) throw ValidationError("sweep grids must not be empty");
  require_modes(n_modes);
  require_positive_grid(lambda_grid);

  SweepReport report;
  report.alpha_grid.assign(alpha_grid.begin(), alpha_grid.end());
  report.beta_grid.assign(beta_grid.begin(), beta_grid.end());
  for (double a : alpha_grid) {
    for (double b : beta_grid) {
      SweepCell cell;
      cell.alpha = a;
      cell.beta = b;
      cell.n_modes = n_modes;
      BeamParams q = p;
      q.alpha = a;
      q.beta = b;
      try {
        cell.spectral_abscissa = spectral_abscissa(q, n_modes).value;
        const ResolventScan scan = analyticity_scan(q, n_modes, lambda_grid);
        cell.sup_resolvent = scan.sup_resolvent;
        cell.sup_analyticity = scan.sup_analyticity;
      } catch (const std::exception& e) {
        cell.ok = false;
        cell.error = e.what();
        cell.spectral_abscissa = cell.sup_resolvent = cell.sup_analyticity =
            std::numeric_limits<double>::quiet_NaN();
      }
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

std::vector<double> log_grid(double lo, double hi, int count) {
  if (count < 1) throw ValidationError("grid count must be at least 1");
  if (!(lo > 0.0) || !(hi >= lo)) throw ValidationError("log grid needs 0 < lo <= hi");
  std::vector<double> g(static_cast<std::size_t>(count));
  if (count == 1) {
    g[0] = lo;
    return g;
  }
  const double a = std::log(lo), b = std::log(hi);
  for (int k = 0; k < count; ++k) g[k] = std::exp(a + (b - a) * k / (count - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

std::vector<double> linear_grid(double lo, double hi, int count) {
  if (count < 1) throw ValidationError("grid count must be at least 1");
  if (!(hi >= lo)) throw ValidationError("linear grid needs lo <= hi");
  std::vector<double> g(static_cast<std::size_t>(count));
  if (count == 1) {
    g[0] = lo;
    return g;
  }
  for (int k = 0; k < count; ++k) g[k] = lo + (hi - lo) * k / (count - 1);
  g.back() = hi;
  return g;
}

}  // namespace nanobeam
