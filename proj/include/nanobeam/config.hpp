#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nanobeam/params.hpp"

namespace nanobeam {

struct GridSpec {
  double min = 0.1;
  double max = 1e6;
  int count = 200;
  bool log = true;

  std::vector<double> values() const;
};

/// Flat `key = value` run configuration. Every key is optional.
struct RunConfig {
  BeamParams params;
  int n_modes = 256;
  GridSpec lambda;
  std::vector<double> alpha_grid{0.0, 0.5, 1.0};
  std::vector<double> beta_grid{0.0, 0.5, 1.0};
  GridSpec time{0.0, 20.0, 2001, false};
  std::string initial = "eigen";  // eigen | random | zero
  int excitation_mode = 1;
  std::string method = "pade";    // pade | eigen
  std::vector<double> lemma_lambdas{1.0, 10.0, 1e3, 1e6};
  int lemma_trials = 100;
  // fractional exponents make each FD factorization dense-ish; keep M modest
  std::vector<int> fd_grids{50, 100, 200};
  int fd_n_low = 3;
  std::string out_dir = ".";
  std::uint64_t seed = 1;
};

/// Parses config text; `source` only labels error messages.
/// Throws ValidationError on unknown keys, malformed values or invalid params.
RunConfig parse_config(const std::string& text, const std::string& source = "<config>");

/// Throws ValidationError naming the path when the file cannot be read.
RunConfig load_config(const std::string& path);

/// Checks params, counts and grids.
void validate_config(const RunConfig& cfg);

}  // namespace nanobeam
