#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vcp3/graph.hpp"

namespace vcp3 {

/// Result of one solver invocation. The text form includes wall-clock
/// timings; the machine-readable JSON form deliberately omits them so that
/// identical seeds and flags reproduce byte-identical output.
struct RunReport {
  std::string problem;  // "vcp3" | "cvcp3"
  std::string graph_path;

  std::optional<int> size;       // vcp3 optimum, or cvcp3 minimization result
  std::optional<bool> decision;  // cvcp3 with --k
  bool no_solution = false;

  std::optional<std::vector<int>> witness;  // vcp3 only, verified
  int vertex_count = 0;
  int edge_count = 0;
  int width_used = -1;
  std::array<int, 5> node_counts{};  // per nice-node kind
  std::string convolution;           // "auto" | "fast" | "naive"

  std::uint64_t seed = 0;
  int repetitions = 0;
  std::optional<int> k;
  std::vector<int> required;  // cvcp3 set S

  double parse_seconds = 0;
  double decompose_seconds = 0;
  double solve_seconds = 0;

  std::string to_text() const;
  std::string to_json() const;
};

}  // namespace vcp3
