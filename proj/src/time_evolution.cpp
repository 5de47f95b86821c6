#include "nanobeam/time_evolution.hpp"

#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include "nanobeam/errors.hpp"

namespace nanobeam {

namespace {
constexpr double kStepReuseTolerance = 1e-9;
}  // namespace

ModeBlock::Matrix block_exponential(const ModeBlock::Matrix& B, double t, ExpMethod method) {
  if (method == ExpMethod::eigen) {
    Eigen::EigenSolver<ModeBlock::Matrix> es(B);
    if (es.info() == Eigen::Success) {
      using CMatrix = Eigen::Matrix<std::complex<double>, kStateSize, kStateSize>;
      const CMatrix V = es.eigenvectors();
      const Eigen::JacobiSVD<CMatrix> svd(V);
      const auto& sv = svd.singularValues();
      if (sv(kStateSize - 1) > 0.0 && sv(0) / sv(kStateSize - 1) < 1e6) {
        const auto expl = (es.eigenvalues() * t).array().exp().matrix().asDiagonal();
        const CMatrix E = V * expl * V.inverse();
        return E.real();
      }
    }
  }
  const ModeBlock::Matrix scaled = B * t;
  return scaled.exp();
}

Trajectory propagate(const BeamParams& p, const ModalState& u0, std::span<const double> times,
                     const PropagateOptions& options) {
  validate_params(p);
  if (times.empty()) throw ValidationError("time grid must not be empty");
  if (!(times[0] >= 0.0)) throw ValidationError("times must start at t >= 0");
  for (std::size_t k = 1; k < times.size(); ++k)
    if (!(times[k] > times[k - 1])) throw ValidationError("times must be strictly increasing");
  if (!u0.all_finite()) throw ValidationError("initial state must be finite");

  const int n_modes = u0.n_modes();
  // zero modes stay zero under the flow; only the rest are advanced
  std::vector<int> active;
  for (int n = 1; n <= n_modes; ++n)
    if (!u0.mode(n).isZero(0.0)) active.push_back(n);
  const int n_active = static_cast<int>(active.size());

  std::vector<ModeBlock::Matrix> B(active.size()), step(active.size());
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n_active; ++i) B[i] = assemble_block(p, active[i]).B;
  double cached_dt = -1.0;

  Trajectory traj;
  traj.times.assign(times.begin(), times.end());
  traj.energies.reserve(times.size());
  traj.dissipations.reserve(times.size());
  if (options.keep_states) traj.states.reserve(times.size());

  ModalState current = u0;
  double t_prev = 0.0;
  for (std::size_t k = 0; k < times.size(); ++k) {
    const double dt = times[k] - t_prev;
    if (dt > 0.0) {
      // grid spacings that differ only by rounding share one exponential
      if (std::abs(dt - cached_dt) > kStepReuseTolerance * dt) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n_active; ++i) step[i] = block_exponential(B[i], dt, options.method);
        cached_dt = dt;
      }
#pragma omp parallel for schedule(static)
      for (int i = 0; i < n_active; ++i) current.mode(active[i]) = step[i] * current.mode(active[i]);
      if (!current.all_finite()) throw NumericalError("state overflow during propagation");
    }
    t_prev = times[k];
    traj.energies.push_back(energy(current, p));
    traj.dissipations.push_back(dissipation(current, p));
    if (options.keep_states) traj.states.push_back(current);
  }
  return traj;
}

EnergyIdentityReport check_energy_identity(const Trajectory& traj, const BeamParams& p) {
  (void)p;
  const auto& t = traj.times;
  if (t.size() < 3) throw ValidationError("energy identity check needs at least 3 samples");
  const double dt = t[1] - t[0];
  for (std::size_t k = 2; k < t.size(); ++k)
    if (std::abs((t[k] - t[k - 1]) - dt) > 1e-6 * dt)
      throw ValidationError("energy identity check needs a uniform time grid");

  EnergyIdentityReport rep;
  for (std::size_t k = 1; k + 1 < t.size(); ++k) {
    const double dEdt = (traj.energies[k + 1].total - traj.energies[k - 1].total) / (t[k + 1] - t[k - 1]);
    rep.max_residual = std::max(rep.max_residual, std::abs(dEdt + traj.dissipations[k]));
    ++rep.points_checked;
  }
  const double e0 = traj.energies.front().total;
  rep.normalized_residual = e0 > 0.0 ? rep.max_residual / e0 : rep.max_residual;
  return rep;
}

DecayFit fit_decay_rate(const Trajectory& traj) {
  const double floor_energy = std::numeric_limits<double>::min() * 1e16;
  std::vector<double> ts, ys;
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const double e = traj.energies[k].total;
    if (!(e > floor_energy) || !std::isfinite(e)) break;
    ts.push_back(traj.times[k]);
    ys.push_back(0.5 * std::log(e));
  }
  if (ts.size() < 2) throw NumericalError("empty fit window");

  const double n = static_cast<double>(ts.size());
  double mt = 0, my = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    mt += ts[i];
    my += ys[i];
  }
  mt /= n;
  my /= n;
  double stt = 0, sty = 0, syy = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    stt += (ts[i] - mt) * (ts[i] - mt);
    sty += (ts[i] - mt) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  DecayFit fit;
  fit.omega = sty / stt;
  fit.r_squared = syy > 0.0 ? (sty * sty) / (stt * syy) : 1.0;
  fit.points_used = static_cast<int>(ts.size());
  fit.truncated = ts.size() < traj.times.size();
  return fit;
}

ModalState random_initial_state(const BeamParams& p, int n_modes, std::uint64_t seed) {
  validate_params(p);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  ModalState s(n_modes);
  for (int n = 1; n <= n_modes; ++n) {
    const Eigen::LLT<ModeBlock::Matrix> llt(gram_block(p, n).H);
    Eigen::Matrix<double, kStateSize, 1> w;
    for (int i = 0; i < kStateSize; ++i) w[i] = normal(rng);
    s.mode(n) = llt.matrixU().solve(w);
  }
  const double norm = energy_norm(s, p);
  for (int n = 1; n <= n_modes; ++n) s.mode(n) /= norm;
  return s;
}

EigenExcitation eigenvector_excitation(const BeamParams& p, int n_modes, int mode) {
  validate_params(p);
  if (mode < 1 || mode > n_modes) throw ValidationError("excitation mode out of range");
  const ModeBlock blk = assemble_block(p, mode);
  Eigen::EigenSolver<ModeBlock::Matrix> es(blk.B);
  if (es.info() != Eigen::Success) throw NumericalError("eigensolver did not converge");

  int best = 0;
  for (int i = 1; i < kStateSize; ++i) {
    const auto a = es.eigenvalues()[i], b = es.eigenvalues()[best];
    if (a.real() > b.real() || (a.real() == b.real() && a.imag() > b.imag())) best = i;
  }
  Eigen::Matrix<std::complex<double>, kStateSize, 1> w = es.eigenvectors().col(best);
  Eigen::Index big = 0;
  w.cwiseAbs().maxCoeff(&big);
  w *= std::conj(w[big]) / std::abs(w[big]);

  EigenExcitation out{ModalState(n_modes), es.eigenvalues()[best], mode};
  out.state.mode(mode) = w.real();
  const double norm = energy_norm(out.state, p);
  out.state.mode(mode) /= norm;
  return out;
}

}  // namespace nanobeam
