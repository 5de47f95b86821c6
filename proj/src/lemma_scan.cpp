#include "nanobeam/lemma_scan.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include <Eigen/Cholesky>

#include "nanobeam/energy.hpp"
#include "nanobeam/errors.hpp"
#include "nanobeam/modal_assembly.hpp"
#include "nanobeam/resolvent.hpp"

namespace nanobeam {

const std::vector<std::string>& lemma_quantities() {
  static const std::vector<std::string> names = {
      lemma::dissipation, lemma::coupling,   lemma::shear_bending_1, lemma::shear_bending_2,
      lemma::rotation_1,  lemma::rotation_2, lemma::velocity_u,      lemma::velocity_y,
      lemma::shear_1,     lemma::shear_2,    lemma::exponential,     lemma::analyticity,
  };
  return names;
}

std::vector<double> lemma_ratios(const BeamParams& p, double lambda, const ComplexModalState& f,
                                 const ComplexModalState& u) {
  const std::size_t count = lemma_quantities().size();
  const double f_norm = energy_norm(f, p);
  const double u_norm = energy_norm(u, p);
  const double denom = f_norm * u_norm;
  if (f_norm == 0.0 || denom == 0.0) return std::vector<double>(count, 0.0);

  double y_minus_u = 0, shear1 = 0, shear2 = 0, bend1 = 0, bend2 = 0;
  double vel_u = 0, vel_v = 0, vel_y = 0, vel_z = 0;
  for (int n = 1; n <= u.n_modes(); ++n) {
    const double s = sigma(n, p.l);
    const auto& x = u.mode(n);
    y_minus_u += std::norm(x[slot::y] - x[slot::u]);
    shear1 += std::norm(s * x[slot::u] - x[slot::v]);
    shear2 += std::norm(s * x[slot::y] - x[slot::z]);
    bend1 += s * s * std::norm(x[slot::v]);
    bend2 += s * s * std::norm(x[slot::z]);
    vel_u += std::norm(x[slot::u_t]);
    vel_v += std::norm(x[slot::v_t]);
    vel_y += std::norm(x[slot::y_t]);
    vel_z += std::norm(x[slot::z_t]);
  }
  const double lam = std::abs(lambda);
  const double u2 = u_norm * u_norm;
  return {
      dissipation(u, p) / denom,
      lam * y_minus_u / denom,
      (p.kappa1 * shear1 + p.b1 * bend1) / denom,
      (p.kappa2 * shear2 + p.b2 * bend2) / denom,
      lam * (bend1 + vel_v) / denom,
      lam * (bend2 + vel_z) / denom,
      lam * vel_u / denom,
      lam * vel_y / denom,
      lam * shear1 / denom,
      lam * shear2 / denom,
      u2 / denom,
      lam * u2 / denom,
  };
}

double LemmaTable::at(double lambda, const std::string& quantity) const {
  for (const auto& r : rows)
    if (r.lambda == lambda && r.quantity == quantity) return r.ratio_max;
  throw std::out_of_range("no lemma row for " + quantity);
}

double LemmaTable::max_over_lambda(const std::string& quantity) const {
  double best = 0.0;
  bool found = false;
  for (const auto& r : rows)
    if (r.quantity == quantity) {
      best = std::max(best, r.ratio_max);
      found = true;
    }
  if (!found) throw std::out_of_range("no lemma row for " + quantity);
  return best;
}

ComplexModalState random_unit_forcing(const BeamParams& p, int n_modes, std::uint64_t& state) {
  std::mt19937_64 rng(state);
  std::normal_distribution<double> normal;
  ComplexModalState f(n_modes);
  for (int n = 1; n <= n_modes; ++n) {
    const GramPair g = gram_block(p, n);
    const Eigen::LLT<ModeBlock::Matrix> llt(g.H);
    Eigen::Matrix<std::complex<double>, kStateSize, 1> w;
    for (int i = 0; i < kStateSize; ++i) w[i] = {normal(rng), normal(rng)};
    // x = L^{-T} w gives x*Hx = |w|^2
    const ModeBlock::Matrix U = llt.matrixU();
    f.mode(n) = U.cast<std::complex<double>>().triangularView<Eigen::Upper>().solve(w);
  }
  state = rng();
  const double norm = energy_norm(f, p);
  for (int n = 1; n <= n_modes; ++n) f.mode(n) /= norm;
  return f;
}

LemmaTable lemma_scan(const BeamParams& p, int n_modes, std::span<const double> lambda_grid,
                      int trials, std::uint64_t seed) {
  if (trials < 1) throw ValidationError("trials must be at least 1");
  if (lambda_grid.empty()) throw ValidationError("lambda grid must not be empty");
  const BlockResolvent resolvent(p, n_modes);
  const auto& names = lemma_quantities();

  LemmaTable table;
  std::uint64_t state = seed;
  for (double lam : lambda_grid) {
    std::vector<double> best(names.size(), 0.0);
    for (int t = 0; t < trials; ++t) {
      const ComplexModalState f = random_unit_forcing(p, n_modes, state);
      const ComplexModalState u = resolvent.solve(lam, f);
      const auto r = lemma_ratios(p, lam, f, u);
      for (std::size_t q = 0; q < names.size(); ++q) best[q] = std::max(best[q], r[q]);
    }
    for (std::size_t q = 0; q < names.size(); ++q) table.rows.push_back({lam, names[q], best[q]});
  }
  return table;
}

}  // namespace nanobeam
