#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <vector>

#include "nanobeam/fd_oracle.hpp"
#include "nanobeam/lemma_scan.hpp"
#include "nanobeam/resolvent.hpp"
#include "nanobeam/time_evolution.hpp"

namespace nanobeam::csv {

inline constexpr const char* spectrum_header = "mode,sigma,re_lambda,im_lambda";
inline constexpr const char* resolvent_header = "lambda,resolvent_norm,analyticity_value,argmax_mode";
inline constexpr const char* simulate_header = "t,energy_total,energy_kinetic,energy_potential,dissipation";
inline constexpr const char* sweep_header = "alpha,beta,spectral_abscissa,sup_resolvent,sup_analyticity";
inline constexpr const char* lemmas_header = "lambda,quantity,ratio_max";
inline constexpr const char* oracle_header = "M,mode,re_modal,im_modal,re_fd,im_fd,rel_error,signature";

/// 17 significant digits, '.' separator regardless of locale.
std::string format(double x);

struct SpectrumRow {
  int mode = 0;
  double sigma = 0.0;
  std::complex<double> lambda;
};

std::vector<SpectrumRow> spectrum_rows(const BeamParams& p, int n_modes);

void write_spectrum(std::ostream& os, const std::vector<SpectrumRow>& rows);
void write_resolvent(std::ostream& os, const ResolventScan& scan);
void write_simulation(std::ostream& os, const Trajectory& traj);
void write_sweep(std::ostream& os, const SweepReport& report);
void write_lemmas(std::ostream& os, const LemmaTable& table);
void write_oracle(std::ostream& os, const std::vector<SpectrumComparison>& reports);

}  // namespace nanobeam::csv
