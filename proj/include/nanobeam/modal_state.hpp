#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "nanobeam/errors.hpp"

namespace nanobeam {

/// Index layout of the per-mode state vector (u, u_t, v, v_t, y, y_t, z, z_t).
/// u, y are sine coefficients; v, z are cosine coefficients (mean-free).
namespace slot {
inline constexpr int u = 0;
inline constexpr int u_t = 1;
inline constexpr int v = 2;
inline constexpr int v_t = 3;
inline constexpr int y = 4;
inline constexpr int y_t = 5;
inline constexpr int z = 6;
inline constexpr int z_t = 7;
}  // namespace slot

inline constexpr int kStateSize = 8;

/// Truncated modal coefficients for modes n = 1..N.
template <typename Scalar>
class BasicModalState {
public:
  using Vector = Eigen::Matrix<Scalar, kStateSize, 1>;

  explicit BasicModalState(int n_modes) {
    if (n_modes < 1) throw ValidationError("n_modes must be at least 1");
    coeffs_.assign(static_cast<std::size_t>(n_modes), Vector::Zero());
  }

  int n_modes() const { return static_cast<int>(coeffs_.size()); }

  /// 1-based mode access.
  Vector& mode(int n) { return coeffs_[static_cast<std::size_t>(n - 1)]; }
  const Vector& mode(int n) const { return coeffs_[static_cast<std::size_t>(n - 1)]; }

  bool all_finite() const {
    for (const auto& c : coeffs_)
      if (!c.allFinite()) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.isZero(0.0)) return false;
    return true;
  }

private:
  std::vector<Vector> coeffs_;
};

using ModalState = BasicModalState<double>;
using ComplexModalState = BasicModalState<std::complex<double>>;

}  // namespace nanobeam
