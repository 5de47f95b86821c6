#include "nanobeam/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include <Eigen/Eigenvalues>

#include "nanobeam/energy.hpp"
#include "nanobeam/fd_oracle.hpp"
#include "nanobeam/kernels.hpp"
#include "nanobeam/lemma_scan.hpp"
#include "nanobeam/modal_assembly.hpp"
#include "nanobeam/resolvent.hpp"
#include "nanobeam/time_evolution.hpp"

namespace nanobeam {

namespace {

std::string sci(const char* label, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s=%.3e", label, v);
  return buf;
}

using Check = std::function<InvariantRow()>;

InvariantRow gram_definiteness(const BeamParams& p, int n_modes) {
  double min_h = INFINITY, min_d = INFINITY;
  for (int n = 1; n <= n_modes; ++n) {
    const GramPair g = gram_block(p, n);
    Eigen::SelfAdjointEigenSolver<ModeBlock::Matrix> eh(g.H, Eigen::EigenvaluesOnly), ed(g.D, Eigen::EigenvaluesOnly);
    min_h = std::min(min_h, eh.eigenvalues()(0) / eh.eigenvalues()(kStateSize - 1));
    min_d = std::min(min_d, ed.eigenvalues()(0) / std::max(ed.eigenvalues()(kStateSize - 1), 1e-300));
  }
  return {"energy Gram SPD, dissipation Gram PSD", min_h > 0.0 && min_d > -1e-12,
          sci("min eig(H)/max", min_h) + " " + sci("min eig(D)/max", min_d)};
}

InvariantRow dissipativity(const BeamParams& p, int n_modes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  double worst = 0.0;
  for (int n = 1; n <= n_modes; ++n) {
    const ModeBlock b = assemble_block(p, n);
    for (int trial = 0; trial < 50; ++trial) {
      Eigen::Matrix<std::complex<double>, kStateSize, 1> x;
      for (int i = 0; i < kStateSize; ++i) x[i] = {normal(rng), normal(rng)};
      const double lhs = (x.adjoint() * b.H * b.B * x)(0).real();
      const double d = (x.adjoint() * b.D * x)(0).real();
      const double scale = x.squaredNorm() * (b.H * b.B).norm();
      worst = std::max(worst, std::abs(lhs + d) / scale);
    }
  }
  return {"Re<HBx,x> + <Dx,x> = 0", worst <= 1e-12, sci("max rel", worst)};
}

InvariantRow abscissa(const BeamParams& p, int n_modes) {
  const auto a = spectral_abscissa(p, n_modes);
  return {"spectral abscissa < 0", a.value < 0.0, sci("omega", a.value) + " mode=" + std::to_string(a.mode)};
}

InvariantRow round_trip(const BeamParams& p, int n_modes, std::uint64_t seed) {
  std::uint64_t state = seed;
  const auto f = random_unit_forcing(p, n_modes, state);
  const BlockResolvent r(p, n_modes);
  double worst = 0.0;
  for (double lambda : {0.0, 1.0, 100.0}) {
    const auto u = r.solve(lambda, f);
    auto back = r.apply_shifted(lambda, u);
    for (int n = 1; n <= n_modes; ++n) back.mode(n) -= f.mode(n);
    worst = std::max(worst, energy_norm(back, p));
  }
  return {"resolvent round trip (lambda = 0, 1, 100)", worst <= 1e-10, sci("max residual", worst)};
}

InvariantRow resolvent_lower_bound(const BeamParams& p, int n_modes) {
  double worst = INFINITY;
  for (double lambda : {0.5, 1.0, 10.0}) {
    const ModeMax r = resolvent_norm(p, n_modes, lambda);
    const auto eig = block_eigenvalues(assemble_block(p, r.mode));
    double dist = INFINITY;
    for (int i = 0; i < eig.size(); ++i) dist = std::min(dist, std::abs(std::complex<double>(0.0, lambda) - eig(i)));
    worst = std::min(worst, r.value * dist);
  }
  return {"||R(i lambda)|| >= 1/dist(i lambda, spectrum)", worst >= 1.0 - 1e-12, sci("min ratio", worst)};
}

InvariantRow conjugate_symmetry(const BeamParams& p, int n_modes) {
  // real blocks: ||(-i lambda - B)^{-1}|| = ||(i lambda - B)^{-1}||
  double worst = 0.0;
  for (int n = 1; n <= n_modes; ++n) {
    const auto sb = kernels::scale_block(assemble_block(p, n));
    for (double lambda : {0.3, 3.0, 30.0}) {
      const double a = kernels::block_resolvent_norm(sb, lambda), b = kernels::block_resolvent_norm(sb, -lambda);
      worst = std::max(worst, std::abs(a - b) / a);
    }
  }
  return {"resolvent norm even in lambda", worst <= 1e-12, sci("max rel diff", worst)};
}

InvariantRow kernels_agree(const BeamParams& p, int n_modes) {
  const auto blocks = assemble_blocks(p, n_modes);
  const auto scaled = kernels::reference::scale_blocks<kStateSize>(blocks);
  const auto grid = log_grid(0.1, 1e4, 25);
  const auto a = kernels::reference::resolvent_scan<kStateSize>(scaled, grid);
  const auto b = kernels::parallel::resolvent_scan<kStateSize>(scaled, grid);
  bool same = a.size() == b.size();
  for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i].value == b[i].value && a[i].mode == b[i].mode;
  const auto ra = kernels::reference::abscissa_max<kStateSize>(blocks);
  const auto rb = kernels::parallel::abscissa_max<kStateSize>(blocks);
  same = same && ra.value == rb.value && ra.mode == rb.mode;
  return {"serial and OpenMP kernels bitwise equal", same, same ? "identical" : "mismatch"};
}

InvariantRow energy_identity(const BeamParams& p, int n_modes) {
  // smooth data: central differences resolve the slow mode, not the stiff ones
  const auto ex = eigenvector_excitation(p, n_modes, 1);
  const auto times = linear_grid(0.0, 1.0, 10001);
  PropagateOptions opt;
  opt.keep_states = false;
  const auto rep = check_energy_identity(propagate(p, ex.state, times, opt), p);
  return {"dE/dt = -dissipation along the flow", rep.normalized_residual <= 1e-6,
          sci("residual", rep.normalized_residual)};
}

InvariantRow energy_monotone(const BeamParams& p, int n_modes, std::uint64_t seed) {
  const auto u0 = random_initial_state(p, n_modes, seed);
  const auto times = linear_grid(0.0, 2.0, 401);
  PropagateOptions opt;
  opt.keep_states = false;
  const auto traj = propagate(p, u0, times, opt);
  double rise = 0.0;
  for (std::size_t k = 1; k < traj.energies.size(); ++k)
    rise = std::max(rise, traj.energies[k].total - traj.energies[k - 1].total);
  return {"energy non-increasing from random data", rise <= 1e-14 * traj.energies.front().total,
          sci("max rise", rise)};
}

InvariantRow fd_agreement(const BeamParams& p) {
  const auto rep = compare_spectra(p, 100, 1);
  return {"FD oracle agrees with mode 1 (M = 100)", rep.mode1_rel_error <= 1e-3, sci("rel err", rep.mode1_rel_error)};
}

InvariantRow fd_dissipative(const BeamParams& p, std::uint64_t seed) {
  const FdOperator op = build_fd(p, 16);
  const Eigen::MatrixXd B = fd_dense_generator(op);
  const Eigen::MatrixXd H(op.energy), D(op.dissipation);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  double worst = -INFINITY;
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::VectorXd x(op.dim());
    for (int i = 0; i < x.size(); ++i) x[i] = normal(rng);
    const double lhs = x.dot(H * (B * x));
    worst = std::max(worst, (lhs + x.dot(D * x)) / std::abs(x.dot(H * x)));
  }
  return {"FD generator dissipative in discrete energy", worst <= 1e-10, sci("max (x'HBx + x'Dx)/x'Hx", worst)};
}

}  // namespace

std::vector<InvariantRow> run_invariants(const RunConfig& cfg) {
  const BeamParams& p = cfg.params;
  const int small = std::min(cfg.n_modes, 64);
  const std::vector<std::pair<std::string, Check>> checks = {
      {"gram", [&] { return gram_definiteness(p, small); }},
      {"dissipativity", [&] { return dissipativity(p, small, cfg.seed); }},
      {"abscissa", [&] { return abscissa(p, cfg.n_modes); }},
      {"round trip", [&] { return round_trip(p, small, cfg.seed); }},
      {"lower bound", [&] { return resolvent_lower_bound(p, small); }},
      {"symmetry", [&] { return conjugate_symmetry(p, small); }},
      {"kernels", [&] { return kernels_agree(p, small); }},
      {"energy identity", [&] { return energy_identity(p, small); }},
      {"energy monotone", [&] { return energy_monotone(p, small, cfg.seed); }},
      {"fd dissipative", [&] { return fd_dissipative(p, cfg.seed); }},
      {"fd spectrum", [&] { return fd_agreement(p); }},
  };
  std::vector<InvariantRow> rows;
  for (const auto& [name, check] : checks) {
    try {
      rows.push_back(check());
    } catch (const std::exception& e) {
      rows.push_back({name, false, std::string("error: ") + e.what()});
    }
  }
  return rows;
}

void print_invariants(std::ostream& os, const std::vector<InvariantRow>& rows) {
  std::size_t width = 9;
  for (const auto& r : rows) width = std::max(width, r.name.size());
  for (const auto& r : rows) {
    os << (r.pass ? "pass  " : "FAIL  ") << r.name << std::string(width - r.name.size() + 2, ' ') << r.detail << '\n';
  }
}

}  // namespace nanobeam
