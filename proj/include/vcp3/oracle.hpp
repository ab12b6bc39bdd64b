#pragma once

#include <optional>
#include <vector>

#include "vcp3/graph.hpp"

namespace vcp3 {

struct BruteVcp3Result {
  int size = 0;
  std::vector<VertexSet> optimal_sets;  // every optimum, ascending mask order
};

/// Exact minimum by enumerating subsets in increasing size with early exit.
/// Deliberately artless; n <= 24.
BruteVcp3Result brute_vcp3(const Graph& g);

/// Minimum connected cover containing s, same enumeration style; n <= 20.
/// The empty set counts as a solution when s is empty and the graph already
/// has maximum degree one. nullopt when no solution exists.
std::optional<int> brute_cvcp3(const Graph& g, const VertexSet& s);

/// Independent route to the same answer: enumerates connected vertex sets
/// by neighborhood expansion instead of filtering all subsets.
std::optional<int> brute_cvcp3_expansion(const Graph& g, const VertexSet& s);

}  // namespace vcp3
