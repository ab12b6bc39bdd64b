#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "vcp3/graph.hpp"
#include "vcp3/tree_decomposition.hpp"

namespace vcp3 {

enum class Family { Tree, Cycle, Cactus, PartialKTree, RandomGnm };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

/// Deterministic under (family, parameters, seed).
struct InstanceSpec {
  Family family = Family::Tree;
  int n = 0;
  int k = 2;                      // partial-k-tree order
  double edge_delete_prob = 0.3;  // partial-k-tree growth edges
  int m = 0;                      // random-gnm edge count
  std::uint64_t seed = 0;
};

struct GeneratedInstance {
  Graph graph;
  /// Present for the partial-k-tree family: the width-k decomposition
  /// recorded during clique growth, valid for the graph after deletions.
  std::optional<TreeDecomposition> decomposition;
};

GeneratedInstance generate(const InstanceSpec& spec);

}  // namespace vcp3
