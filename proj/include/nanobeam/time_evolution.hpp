#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "nanobeam/energy.hpp"
#include "nanobeam/modal_assembly.hpp"
#include "nanobeam/modal_state.hpp"
#include "nanobeam/params.hpp"

namespace nanobeam {

enum class ExpMethod {
  pade,   // scaling-and-squaring Pade
  eigen,  // V exp(t Lambda) V^{-1}, Pade fallback when cond(V) >= 1e6
};

/// exp(t B) for one mode block.
ModeBlock::Matrix block_exponential(const ModeBlock::Matrix& B, double t, ExpMethod method = ExpMethod::pade);

struct Trajectory {
  std::vector<double> times;
  std::vector<ModalState> states;  // empty when states were not kept
  std::vector<EnergyBreakdown> energies;
  std::vector<double> dissipations;
};

struct PropagateOptions {
  ExpMethod method = ExpMethod::pade;
  bool keep_states = true;
};

/// Exact modal flow U_n(t) = exp(t B_n) U_n(0) sampled at increasing times
/// (times[0] >= 0). Steps equal to 1e-9 relative reuse one exponential per
/// mode; modes that start at zero are not advanced.
Trajectory propagate(const BeamParams& p, const ModalState& u0, std::span<const double> times,
                     const PropagateOptions& options = {});

struct EnergyIdentityReport {
  double max_residual = 0.0;         // max |dE/dt + dissipation| at interior points
  double normalized_residual = 0.0;  // max_residual / E(0)
  int points_checked = 0;
};

/// Central-difference check of dE/dt = -dissipation on a uniform grid.
EnergyIdentityReport check_energy_identity(const Trajectory& traj, const BeamParams& p);

struct DecayFit {
  double omega = 0.0;  // slope of (1/2) log E(t)
  double r_squared = 0.0;
  int points_used = 0;
  bool truncated = false;  // energy hit numerical zero before the last sample
};

/// Least-squares amplitude decay rate. Throws NumericalError("empty fit window")
/// when fewer than two samples carry positive energy.
DecayFit fit_decay_rate(const Trajectory& traj);

/// Unit-energy-norm random state, isotropic in energy coordinates.
ModalState random_initial_state(const BeamParams& p, int n_modes, std::uint64_t seed);

struct EigenExcitation {
  ModalState state;
  std::complex<double> eigenvalue;
  int mode = 0;
};

/// Real part of the least-damped eigenvector of mode n, unit energy norm.
EigenExcitation eigenvector_excitation(const BeamParams& p, int n_modes, int mode);

}  // namespace nanobeam
