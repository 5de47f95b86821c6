#pragma once

#include <cmath>

#include "nanobeam/modal_state.hpp"
#include "nanobeam/params.hpp"

namespace nanobeam {

/// Parts of the total energy, each already carrying the 1/2 factor.
struct EnergyBreakdown {
  double kinetic = 0.0;   // rho-weighted velocities
  double shear = 0.0;     // kappa1 |u_x - v|^2 + kappa2 |y_x - z|^2
  double coupling = 0.0;  // m |y - u|^2
  double bending = 0.0;   // b1 |v_x|^2 + b2 |z_x|^2
  double total = 0.0;

  double potential() const { return shear + coupling + bending; }
};

/// Total energy of a modal state; the sine/cosine bases are orthonormal so
/// each L2 norm reduces to a sum over modes.
template <typename Scalar>
EnergyBreakdown energy(const BasicModalState<Scalar>& s, const BeamParams& p);

/// Instantaneous dissipation rate, i.e. -dE/dt along the flow.
template <typename Scalar>
double dissipation(const BasicModalState<Scalar>& s, const BeamParams& p);

}  // namespace nanobeam

namespace nanobeam {

/// ||s||_H = sqrt(2 * energy).
template <typename Scalar>
double energy_norm(const BasicModalState<Scalar>& s, const BeamParams& p) {
  return std::sqrt(2.0 * energy(s, p).total);
}

}  // namespace nanobeam
