#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "nanobeam/config.hpp"

namespace nanobeam {

struct InvariantRow {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Module invariants evaluated on the configured parameters. An invariant
/// that throws is recorded as failed with the error text.
std::vector<InvariantRow> run_invariants(const RunConfig& cfg);

/// Fixed-width pass/fail table.
void print_invariants(std::ostream& os, const std::vector<InvariantRow>& rows);

}  // namespace nanobeam
