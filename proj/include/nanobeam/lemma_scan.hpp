#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nanobeam/modal_state.hpp"
#include "nanobeam/params.hpp"

namespace nanobeam {

/// A-priori resolvent quantities, each measured against ||F||_H ||U||_H
/// for U = (i lambda - B)^{-1} F. Lambda-weighted quantities carry |lambda|.
namespace lemma {
inline constexpr const char* dissipation = "dissipation";            // gamma-weighted damping terms
inline constexpr const char* coupling = "lemma1_coupling";           // |l| ||y-u||^2
inline constexpr const char* shear_bending_1 = "lemma2_beam1";       // k1||u_x-v||^2 + b1||v_x||^2
inline constexpr const char* shear_bending_2 = "lemma2_beam2";       // k2||y_x-z||^2 + b2||z_x||^2
inline constexpr const char* rotation_1 = "lemma9_rotation1";        // |l|(||v_x||^2 + ||v_t||^2)
inline constexpr const char* rotation_2 = "lemma9_rotation2";        // |l|(||z_x||^2 + ||z_t||^2)
inline constexpr const char* velocity_u = "lemma9_velocity_u";       // |l| ||u_t||^2
inline constexpr const char* velocity_y = "lemma9_velocity_y";       // |l| ||y_t||^2
inline constexpr const char* shear_1 = "lemma10_shear1";             // |l| ||u_x-v||^2
inline constexpr const char* shear_2 = "lemma10_shear2";             // |l| ||y_x-z||^2
inline constexpr const char* exponential = "exponential_aggregate";  // ||U||^2
inline constexpr const char* analyticity = "analyticity_aggregate";  // |l| ||U||^2
}  // namespace lemma

/// Quantity names in output order.
const std::vector<std::string>& lemma_quantities();

/// Ratios for one (lambda, F, U) triple, in lemma_quantities() order.
/// All ratios are 0 when F = 0.
std::vector<double> lemma_ratios(const BeamParams& p, double lambda, const ComplexModalState& f,
                                 const ComplexModalState& u);

struct LemmaRow {
  double lambda = 0.0;
  std::string quantity;
  double ratio_max = 0.0;
};

struct LemmaTable {
  std::vector<LemmaRow> rows;  // lambda-major, quantities in lemma_quantities() order

  /// ratio_max at one lambda; throws std::out_of_range if absent.
  double at(double lambda, const std::string& quantity) const;
  /// max over every lambda in the table.
  double max_over_lambda(const std::string& quantity) const;
};

/// Random complex F with ||F||_H = 1, isotropic in energy coordinates.
ComplexModalState random_unit_forcing(const BeamParams& p, int n_modes, std::uint64_t& state);

/// For each lambda, solves `trials` random unit-forcing problems and records
/// the largest ratio of each quantity.
LemmaTable lemma_scan(const BeamParams& p, int n_modes, std::span<const double> lambda_grid,
                      int trials, std::uint64_t seed);

}  // namespace nanobeam
