#pragma once

#include <cmath>
#include <numbers>

namespace nanobeam {

/// Physical constants of the double-wall nanotube model.
///
/// Beam 1 (inner tube) carries (u, v) with rho1, rho2, kappa1, b1, gamma1,
/// gamma2 and fractional exponent alpha; beam 2 (outer tube) carries (y, z)
/// with rho3, rho4, kappa2, b2, gamma3, gamma4 and exponent beta. The two
/// deflections are coupled through the Van der Waals coefficient m.
/// All quantities are dimensionless.
struct BeamParams {
  double rho1 = 1.0;
  double rho2 = 1.0;
  double rho3 = 1.0;
  double rho4 = 1.0;
  double kappa1 = 1.0;
  double kappa2 = 1.0;
  double b1 = 1.0;
  double b2 = 1.0;
  double gamma1 = 1.0;
  double gamma2 = 1.0;
  double gamma3 = 1.0;
  double gamma4 = 1.0;
  double m = 1.0;
  double l = std::numbers::pi;
  double alpha = 0.5;
  double beta = 0.5;

  bool operator==(const BeamParams&) const = default;
};

/// Checks every coefficient is strictly positive and alpha, beta lie in [0,1].
/// Throws ValidationError naming the first violated constraint.
const BeamParams& validate_params(const BeamParams& p);

/// Same checks with the coupling allowed to vanish (m >= 0); used for the
/// decoupled Timoshenko limit.
const BeamParams& validate_params_allow_uncoupled(const BeamParams& p);

/// Wavenumber n*pi/l of the n-th sine/cosine eigenpair.
inline double sigma(int n, double l) { return n * std::numbers::pi / l; }

/// sigma^(2*exponent), exact at the endpoints 0 and 1.
inline double fractional_power(double sigma_n, double exponent) {
  if (exponent == 0.0) return 1.0;
  if (exponent == 1.0) return sigma_n * sigma_n;
  return std::exp(2.0 * exponent * std::log(sigma_n));
}

/// Parameters with beam 1 and beam 2 exchanged (alpha <-> beta included).
BeamParams swap_beams(const BeamParams& p);

}  // namespace nanobeam
