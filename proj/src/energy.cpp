#include "nanobeam/energy.hpp"

#include <complex>

namespace nanobeam {

namespace {

template <typename Scalar>
double abs2(const Scalar& x) {
  return std::norm(std::complex<double>(x));
}

}  // namespace

template <typename Scalar>
EnergyBreakdown energy(const BasicModalState<Scalar>& s, const BeamParams& p) {
  EnergyBreakdown e;
  for (int n = 1; n <= s.n_modes(); ++n) {
    const double sig = sigma(n, p.l);
    const auto& x = s.mode(n);
    e.kinetic += p.rho1 * abs2(x[slot::u_t]) + p.rho2 * abs2(x[slot::v_t]) +
                 p.rho3 * abs2(x[slot::y_t]) + p.rho4 * abs2(x[slot::z_t]);
    e.shear += p.kappa1 * abs2(Scalar(sig) * x[slot::u] - x[slot::v]) +
               p.kappa2 * abs2(Scalar(sig) * x[slot::y] - x[slot::z]);
    e.coupling += p.m * abs2(x[slot::y] - x[slot::u]);
    e.bending += sig * sig * (p.b1 * abs2(x[slot::v]) + p.b2 * abs2(x[slot::z]));
  }
  e.kinetic *= 0.5;
  e.shear *= 0.5;
  e.coupling *= 0.5;
  e.bending *= 0.5;
  e.total = e.kinetic + e.shear + e.coupling + e.bending;
  return e;
}

template <typename Scalar>
double dissipation(const BasicModalState<Scalar>& s, const BeamParams& p) {
  double d = 0.0;
  for (int n = 1; n <= s.n_modes(); ++n) {
    const double sig = sigma(n, p.l);
    const auto& x = s.mode(n);
    d += p.gamma1 * abs2(Scalar(sig) * x[slot::u_t] - x[slot::v_t]) +
         p.gamma2 * fractional_power(sig, p.alpha) * abs2(x[slot::v_t]) +
         p.gamma3 * abs2(Scalar(sig) * x[slot::y_t] - x[slot::z_t]) +
         p.gamma4 * fractional_power(sig, p.beta) * abs2(x[slot::z_t]);
  }
  return d;
}

template EnergyBreakdown energy(const ModalState&, const BeamParams&);
template EnergyBreakdown energy(const ComplexModalState&, const BeamParams&);
template double dissipation(const ModalState&, const BeamParams&);
template double dissipation(const ComplexModalState&, const BeamParams&);

}  // namespace nanobeam
