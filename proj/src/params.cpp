#include "nanobeam/params.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "nanobeam/errors.hpp"

namespace nanobeam {

namespace {

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0)
    throw ValidationError(std::string(name) + " must be positive");
}

void require_unit_interval(double value, const char* name) {
  if (!std::isfinite(value) || value < 0.0 || value > 1.0)
    throw ValidationError(std::string(name) + " must lie in [0,1]");
}

void validate_common(const BeamParams& p) {
  require_positive(p.rho1, "rho1");
  require_positive(p.rho2, "rho2");
  require_positive(p.rho3, "rho3");
  require_positive(p.rho4, "rho4");
  require_positive(p.kappa1, "kappa1");
  require_positive(p.kappa2, "kappa2");
  require_positive(p.b1, "b1");
  require_positive(p.b2, "b2");
  require_positive(p.gamma1, "gamma1");
  require_positive(p.gamma2, "gamma2");
  require_positive(p.gamma3, "gamma3");
  require_positive(p.gamma4, "gamma4");
}

void validate_tail(const BeamParams& p) {
  require_positive(p.l, "l");
  require_unit_interval(p.alpha, "alpha");
  require_unit_interval(p.beta, "beta");
}

}  // namespace

const BeamParams& validate_params(const BeamParams& p) {
  validate_common(p);
  require_positive(p.m, "m");
  validate_tail(p);
  return p;
}

const BeamParams& validate_params_allow_uncoupled(const BeamParams& p) {
  validate_common(p);
  if (!std::isfinite(p.m) || p.m < 0.0) throw ValidationError("m must be non-negative");
  validate_tail(p);
  return p;
}

BeamParams swap_beams(const BeamParams& p) {
  BeamParams q = p;
  std::swap(q.rho1, q.rho3);
  std::swap(q.rho2, q.rho4);
  std::swap(q.kappa1, q.kappa2);
  std::swap(q.b1, q.b2);
  std::swap(q.gamma1, q.gamma3);
  std::swap(q.gamma2, q.gamma4);
  std::swap(q.alpha, q.beta);
  return q;
}

}  // namespace nanobeam
