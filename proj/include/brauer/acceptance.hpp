#pragma once

#include <string>
#include <utility>
#include <vector>

#include "brauer/report.hpp"

namespace brauer {

struct AcceptanceResult {
  Report report;  // deterministic: no timing data in entries
  std::vector<std::pair<std::string, double>> timings;  // seconds per criterion
};

// Runs the full acceptance suite against the bundled data directory. The
// criteria are run twice and the machine-readable outputs compared, so the
// returned report ends with a determinism entry.
AcceptanceResult run_acceptance_suite(const std::string& data_dir);

}  // namespace brauer
