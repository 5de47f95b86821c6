#include "nanobeam/csv.hpp"

#include <cstdio>

#include "nanobeam/modal_assembly.hpp"

namespace nanobeam::csv {

std::string format(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  // guard against a locale with a decimal comma
  for (char* c = buf; *c; ++c)
    if (*c == ',') *c = '.';
  return buf;
}

std::vector<SpectrumRow> spectrum_rows(const BeamParams& p, int n_modes) {
  const auto blocks = assemble_blocks(p, n_modes);
  std::vector<SpectrumRow> rows;
  rows.reserve(blocks.size() * kStateSize);
  for (const auto& b : blocks) {
    const auto eig = block_eigenvalues(b);
    for (int i = 0; i < eig.size(); ++i) rows.push_back({b.n, b.sigma, eig(i)});
  }
  return rows;
}

void write_spectrum(std::ostream& os, const std::vector<SpectrumRow>& rows) {
  os << spectrum_header << '\n';
  for (const auto& r : rows)
    os << r.mode << ',' << format(r.sigma) << ',' << format(r.lambda.real()) << ',' << format(r.lambda.imag())
       << '\n';
}

void write_resolvent(std::ostream& os, const ResolventScan& scan) {
  os << resolvent_header << '\n';
  for (const auto& pt : scan.points)
    os << format(pt.lambda) << ',' << format(pt.resolvent_norm) << ',' << format(pt.analyticity_value) << ','
       << pt.argmax_mode << '\n';
}

void write_simulation(std::ostream& os, const Trajectory& traj) {
  os << simulate_header << '\n';
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const auto& e = traj.energies[k];
    os << format(traj.times[k]) << ',' << format(e.total) << ',' << format(e.kinetic) << ','
       << format(e.potential()) << ',' << format(traj.dissipations[k]) << '\n';
  }
}

void write_sweep(std::ostream& os, const SweepReport& report) {
  os << sweep_header << '\n';
  for (const auto& c : report.cells)
    os << format(c.alpha) << ',' << format(c.beta) << ',' << format(c.spectral_abscissa) << ','
       << format(c.sup_resolvent) << ',' << format(c.sup_analyticity) << '\n';
}

void write_lemmas(std::ostream& os, const LemmaTable& table) {
  os << lemmas_header << '\n';
  for (const auto& r : table.rows) os << format(r.lambda) << ',' << r.quantity << ',' << format(r.ratio_max) << '\n';
}

void write_oracle(std::ostream& os, const std::vector<SpectrumComparison>& reports) {
  os << oracle_header << '\n';
  for (const auto& rep : reports)
    for (const auto& m : rep.matches)
      os << rep.M << ',' << m.mode << ',' << format(m.modal.real()) << ',' << format(m.modal.imag()) << ','
         << format(m.fd.real()) << ',' << format(m.fd.imag()) << ',' << format(m.rel_error) << ','
         << format(m.signature) << '\n';
}

}  // namespace nanobeam::csv
