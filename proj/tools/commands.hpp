#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "graph_energy/report.hpp"

namespace genergy::cli {

struct RunConfig {
  std::optional<std::string> input_path;  // graph6 (one graph per line) or edge list
  std::optional<std::string> generator;   // generator spec, e.g. "rook:4"
  OutputFormat format = OutputFormat::Csv;
  std::optional<std::string> output_path;  // stdout when empty
  std::optional<std::size_t> lp_max_degree;
  bool fail_on_violation = false;
  Tolerances tolerances = Tolerances::from_environment();
  std::size_t threads = 0;  // 0: hardware concurrency
};

/// Exit codes: 0 success, 1 bad input or configuration, 2 soundness
/// violation with fail_on_violation set.
int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_generate(const std::string& spec, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace genergy::cli
