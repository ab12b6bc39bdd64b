#pragma once

#include <bit>
#include <random>
#include <set>
#include <vector>

#include "vcp3/cut_count.hpp"
#include "vcp3/generators.hpp"
#include "vcp3/graph.hpp"
#include "vcp3/nice_decomposition.hpp"
#include "vcp3/rng.hpp"
#include "vcp3/subset_convolution.hpp"
#include "vcp3/vcp3_dp.hpp"

namespace vcp3::testing {

inline Graph graph_from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph random_graph(int n, double p, std::mt19937_64& gen) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (static_cast<double>(draw_below(gen, 1u << 20)) / (1u << 20) < p) g.add_edge(u, v);
  return g;
}

/// Independent route for the hitting check: enumerate every 3-vertex path
/// a-b-c explicitly and demand one endpoint or the middle is in f.
inline bool hits_every_p3(const Graph& g, const VertexSet& f) {
  for (Vertex b = 0; b < g.vertex_count(); ++b) {
    const auto& nb = g.neighbors(b);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!f.contains(nb[i]) && !f.contains(b) && !f.contains(nb[j])) return false;
      }
    }
  }
  return true;
}

/// Full pipeline: heuristic decomposition, nice form, DP solve.
inline SolveResult full_solve(const Graph& g,
                              EliminationStrategy strategy = EliminationStrategy::MinDegree,
                              ConvolutionMode mode = ConvolutionMode::Auto) {
  TreeDecomposition td = heuristic_decompose(g, strategy);
  NiceDecomposition nd = make_nice(td, g);
  SolveOptions options;
  options.convolution = mode;
  return solve_vcp3(g, nd, options);
}

/// Join-node reference: the literal double loop over all coloring pairs,
/// checking the per-vertex consistency rules directly.
inline DpTable join_reference(const NiceDecomposition& nd, int t, const DpTable& left,
                              const DpTable& right) {
  const NiceNode& node = nd.nodes[static_cast<std::size_t>(t)];
  const int b = node.bag.size();
  DpTable table;
  table.node = t;
  table.values.assign(coloring3::pow3(b), kInf);
  table.choice.assign(coloring3::pow3(b), -1);
  const std::uint32_t total = coloring3::pow3(b);
  for (std::uint32_t f1 = 0; f1 < total; ++f1) {
    for (std::uint32_t f2 = 0; f2 < total; ++f2) {
      std::uint32_t f = 0;
      int cover = 0;
      bool consistent = true;
      for (int pos = 0; pos < b && consistent; ++pos) {
        const int d1 = coloring3::digit(f1, pos);
        const int d2 = coloring3::digit(f2, pos);
        int d;
        if (d1 == kInCover && d2 == kInCover) {
          d = kInCover;
          ++cover;
        } else if (d1 == kFreeIsolated && d2 == kFreeIsolated) {
          d = kFreeIsolated;
        } else if ((d1 == kFreeDegreeOne && d2 == kFreeIsolated) ||
                   (d1 == kFreeIsolated && d2 == kFreeDegreeOne)) {
          d = kFreeDegreeOne;
        } else {
          consistent = false;
          break;
        }
        f += static_cast<std::uint32_t>(d) * coloring3::pow3(pos);
      }
      if (!consistent) continue;
      const std::int32_t sum = sat_add(left.values[f1], right.values[f2]);
      const std::int32_t value = sum >= kInf ? kInf : sum - cover;
      if (value < table.values[f]) table.values[f] = value;
    }
  }
  return table;
}

/// Vertices and edges of the subgraph processed below node t.
inline void subtree_graph(const NiceDecomposition& nd, int t, VertexSet& vertices,
                          std::vector<Edge>& edges) {
  std::vector<int> stack = {t};
  std::set<Vertex> vs;
  edges.clear();
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    const NiceNode& node = nd.nodes[static_cast<std::size_t>(cur)];
    for (Vertex v : node.bag) vs.insert(v);
    if (node.kind == NodeKind::IntroduceEdge) edges.emplace_back(node.edge_u, node.edge_v);
    if (node.child >= 0) stack.push_back(node.child);
    if (node.child2 >= 0) stack.push_back(node.child2);
  }
  vertices = VertexSet(std::vector<Vertex>(vs.begin(), vs.end()));
}

/// Exhaustive (candidate set, consistent cut) pair parities, bucketed by
/// (|F|, w(F)): the ground truth for the parity tables. Enumerates every
/// subset F and every two-sided assignment of F directly, in one pass.
inline std::vector<std::vector<int>> pair_parity_table(const Graph& g, const VertexSet& s,
                                                       Vertex v1, const WeightAssignment& w) {
  const int n = g.vertex_count();
  const int w_cap = 2 * n * n;
  std::vector<std::vector<int>> parity(static_cast<std::size_t>(n + 1),
                                       std::vector<int>(static_cast<std::size_t>(w_cap + 1), 0));
  const std::uint32_t s_mask = s.empty() ? (std::uint32_t{1} << v1) : s.to_mask();
  for (std::uint32_t f_mask = 0; f_mask < (std::uint32_t{1} << n); ++f_mask) {
    if ((f_mask & s_mask) != s_mask) continue;
    VertexSet f = VertexSet::from_mask(f_mask);
    if (!is_vcp3_set(g, f)) continue;
    int total_weight = 0;
    for (Vertex v : f) total_weight += w.of(v);
    if (total_weight > w_cap) continue;
    std::vector<Vertex> vs(f.begin(), f.end());
    // Count two-colorings of f with no cut edge and v1 on side one.
    int pairs = 0;
    for (std::uint32_t sides = 0; sides < (std::uint32_t{1} << vs.size()); ++sides) {
      bool ok = true;
      for (std::size_t i = 0; i < vs.size() && ok; ++i) {
        if (vs[i] == v1 && (sides >> i & 1)) ok = false;  // v1 pinned to side one
        for (std::size_t j = i + 1; j < vs.size() && ok; ++j) {
          if (g.has_edge(vs[i], vs[j]) && ((sides >> i & 1) != (sides >> j & 1))) ok = false;
        }
      }
      if (ok) ++pairs;
    }
    parity[static_cast<std::size_t>(f.size())][static_cast<std::size_t>(total_weight)] ^=
        pairs & 1;
  }
  return parity;
}

inline SetFunction random_set_function(int ground_size, int max_value, double inf_prob,
                                       std::mt19937_64& gen) {
  SetFunction f;
  f.ground_size = ground_size;
  f.values.resize(std::size_t{1} << ground_size);
  for (auto& v : f.values) {
    if (static_cast<double>(draw_below(gen, 1u << 20)) / (1u << 20) < inf_prob) {
      v = kInf;
    } else {
      v = static_cast<std::int32_t>(draw_below(gen, static_cast<std::uint64_t>(max_value + 1)));
    }
  }
  return f;
}

}  // namespace vcp3::testing
