#include "vcp3/vcp3_dp.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace vcp3 {

namespace {

using coloring3::digit;
using coloring3::insert_digit;
using coloring3::pow3;
using coloring3::remove_digit;

void require_kind(const NiceDecomposition& nd, int t, NodeKind kind) {
  if (t < 0 || t >= nd.node_count())
    throw std::invalid_argument("node id out of range: " + std::to_string(t));
  if (nd.nodes[static_cast<std::size_t>(t)].kind != kind)
    throw std::invalid_argument(std::string("expected ") + node_kind_name(kind) + " node, got " +
                                node_kind_name(nd.nodes[static_cast<std::size_t>(t)].kind));
}

int bag_position(const VertexSet& bag, Vertex v) {
  const auto& ids = bag.ids();
  auto it = std::lower_bound(ids.begin(), ids.end(), v);
  if (it == ids.end() || *it != v)
    throw std::invalid_argument("vertex " + std::to_string(v) + " not in bag");
  return static_cast<int>(it - ids.begin());
}

DpTable fresh_table(int node, int bag_size) {
  if (bag_size > coloring3::kMaxBag) throw std::invalid_argument("bag too large for DP index");
  DpTable table;
  table.node = node;
  table.values.assign(pow3(bag_size), kInf);
  table.choice.assign(pow3(bag_size), -1);
  return table;
}

}  // namespace

DpTable table_leaf(const NiceDecomposition& nd, int t) {
  require_kind(nd, t, NodeKind::Leaf);
  DpTable table = fresh_table(t, 0);
  table.values[0] = 0;
  return table;
}

DpTable table_introduce_vertex(const NiceDecomposition& nd, int t, const DpTable& child) {
  require_kind(nd, t, NodeKind::IntroduceVertex);
  const NiceNode& node = nd.nodes[static_cast<std::size_t>(t)];
  const int b = node.bag.size();
  const int pos = bag_position(node.bag, node.vertex);
  DpTable table = fresh_table(t, b);
  for (std::uint32_t f = 0; f < table.values.size(); ++f) {
    const std::uint32_t cf = remove_digit(f, pos);
    std::int32_t value;
    switch (digit(f, pos)) {
      case kInCover: value = sat_add(child.values[cf], 1); break;
      case kFreeIsolated: value = child.values[cf]; break;
      default: value = kInf; break;  // an introduced vertex has no incident edges yet
    }
    table.values[f] = value;
    table.choice[f] = value < kInf ? static_cast<std::int32_t>(cf) : -1;
  }
  return table;
}

DpTable table_introduce_edge(const NiceDecomposition& nd, int t, const DpTable& child) {
  require_kind(nd, t, NodeKind::IntroduceEdge);
  const NiceNode& node = nd.nodes[static_cast<std::size_t>(t)];
  const int pu = bag_position(node.bag, node.edge_u);
  const int pv = bag_position(node.bag, node.edge_v);
  DpTable table = fresh_table(t, node.bag.size());
  for (std::uint32_t f = 0; f < table.values.size(); ++f) {
    const int du = digit(f, pu);
    const int dv = digit(f, pv);
    std::uint32_t cf;
    if (du == kInCover || dv == kInCover) {
      cf = f;
    } else if (du == kFreeDegreeOne && dv == kFreeDegreeOne) {
      // The new edge is the one edge both endpoints are allowed.
      cf = coloring3::set_digit(coloring3::set_digit(f, pu, kFreeIsolated), pv, kFreeIsolated);
    } else {
      continue;  // an uncovered endpoint would exceed degree one
    }
    table.values[f] = child.values[cf];
    table.choice[f] = table.values[f] < kInf ? static_cast<std::int32_t>(cf) : -1;
  }
  return table;
}

DpTable table_forget(const NiceDecomposition& nd, int t, const DpTable& child) {
  require_kind(nd, t, NodeKind::Forget);
  const NiceNode& node = nd.nodes[static_cast<std::size_t>(t)];
  const NiceNode& child_node = nd.nodes[static_cast<std::size_t>(node.child)];
  const int pos = bag_position(child_node.bag, node.vertex);
  DpTable table = fresh_table(t, node.bag.size());
  for (std::uint32_t f = 0; f < table.values.size(); ++f) {
    std::int32_t best = kInf;
    std::int32_t best_cf = -1;
    for (int alpha : {kInCover, kFreeIsolated, kFreeDegreeOne}) {
      const std::uint32_t cf = insert_digit(f, pos, alpha);
      if (child.values[cf] < best) {
        best = child.values[cf];
        best_cf = static_cast<std::int32_t>(cf);
      }
    }
    table.values[f] = best;
    table.choice[f] = best < kInf ? best_cf : -1;
  }
  return table;
}

DpTable table_join(const NiceDecomposition& nd, int t, const DpTable& left, const DpTable& right,
                   const SolveOptions& options) {
  require_kind(nd, t, NodeKind::Join);
  const NiceNode& node = nd.nodes[static_cast<std::size_t>(t)];
  const int b = node.bag.size();
  DpTable table = fresh_table(t, b);

  // One convolution per cover slice R: child tables restricted to
  // "cover = R" become set functions over the remaining positions, keyed
  // by the set of degree-one vertices, and the disjoint-union convolution
  // enforces the pairing rules exactly.
  for (std::uint32_t rmask = 0; rmask < (std::uint32_t{1} << b); ++rmask) {
    std::vector<int> ground;  // bag positions outside R
    std::uint32_t base = 0;
    for (int pos = 0; pos < b; ++pos) {
      if (rmask >> pos & 1) continue;
      ground.push_back(pos);
      base += pow3(pos) * kFreeIsolated;
    }
    const int gs = static_cast<int>(ground.size());
    // coloring index for each subset of ground positions marked degree-one
    std::vector<std::uint32_t> index_of(std::size_t{1} << gs, base);
    for (std::uint32_t m = 1; m < index_of.size(); ++m) {
      const int i = std::countr_zero(m);
      index_of[m] = index_of[m & (m - 1)] + pow3(ground[static_cast<std::size_t>(i)]) *
                                                (kFreeDegreeOne - kFreeIsolated);
    }

    SetFunction h1, h2;
    h1.ground_size = h2.ground_size = gs;
    h1.values.resize(index_of.size());
    h2.values.resize(index_of.size());
    std::int32_t max_finite = 0;
    for (std::uint32_t m = 0; m < index_of.size(); ++m) {
      h1.values[m] = left.values[index_of[m]];
      h2.values[m] = right.values[index_of[m]];
      if (h1.values[m] < kInf) max_finite = std::max(max_finite, h1.values[m]);
      if (h2.values[m] < kInf) max_finite = std::max(max_finite, h2.values[m]);
    }

    const bool use_fast = options.convolution == ConvolutionMode::Fast ||
                          (options.convolution == ConvolutionMode::Auto &&
                           gs >= options.fast_threshold);
    const SetFunction conv =
        use_fast ? convolve_fast(h1, h2, max_finite) : convolve_naive(h1, h2);

    const std::int32_t r_size = std::popcount(rmask);
    for (std::uint32_t m = 0; m < index_of.size(); ++m) {
      table.values[index_of[m]] =
          conv.values[m] >= kInf ? kInf : conv.values[m] - r_size;
    }
  }
  return table;
}

DpRun evaluate_tables(const NiceDecomposition& nd, const SolveOptions& options) {
  DpRun run;
  run.tables.resize(nd.nodes.size());
  for (int t : nd.post_order()) {
    const NiceNode& node = nd.nodes[static_cast<std::size_t>(t)];
    switch (node.kind) {
      case NodeKind::Leaf: run.tables[static_cast<std::size_t>(t)] = table_leaf(nd, t); break;
      case NodeKind::IntroduceVertex:
        run.tables[static_cast<std::size_t>(t)] =
            table_introduce_vertex(nd, t, run.tables[static_cast<std::size_t>(node.child)]);
        break;
      case NodeKind::IntroduceEdge:
        run.tables[static_cast<std::size_t>(t)] =
            table_introduce_edge(nd, t, run.tables[static_cast<std::size_t>(node.child)]);
        break;
      case NodeKind::Forget:
        run.tables[static_cast<std::size_t>(t)] =
            table_forget(nd, t, run.tables[static_cast<std::size_t>(node.child)]);
        break;
      case NodeKind::Join:
        run.tables[static_cast<std::size_t>(t)] =
            table_join(nd, t, run.tables[static_cast<std::size_t>(node.child)],
                       run.tables[static_cast<std::size_t>(node.child2)], options);
        break;
    }
  }
  return run;
}

VertexSet extract_witness(const NiceDecomposition& nd, const DpRun& run, int node,
                          std::uint32_t coloring) {
  VertexSet witness;
  std::vector<std::pair<int, std::uint32_t>> stack = {{node, coloring}};
  while (!stack.empty()) {
    auto [t, f] = stack.back();
    stack.pop_back();
    const NiceNode& nn = nd.nodes[static_cast<std::size_t>(t)];
    const DpTable& table = run.tables[static_cast<std::size_t>(t)];
    if (table.values[f] >= kInf) throw std::logic_error("backtracking reached an infeasible entry");
    switch (nn.kind) {
      case NodeKind::Leaf: break;
      case NodeKind::IntroduceVertex: {
        const int pos = bag_position(nn.bag, nn.vertex);
        if (digit(f, pos) == kInCover) witness.insert(nn.vertex);
        stack.emplace_back(nn.child, static_cast<std::uint32_t>(table.choice[f]));
        break;
      }
      case NodeKind::IntroduceEdge:
      case NodeKind::Forget:
        stack.emplace_back(nn.child, static_cast<std::uint32_t>(table.choice[f]));
        break;
      case NodeKind::Join: {
        const DpTable& left = run.tables[static_cast<std::size_t>(nn.child)];
        const DpTable& right = run.tables[static_cast<std::size_t>(nn.child2)];
        const int b = nn.bag.size();
        std::int32_t r_size = 0;
        std::vector<int> ys;
        for (int pos = 0; pos < b; ++pos) {
          const int d = digit(f, pos);
          if (d == kInCover) ++r_size;
          if (d == kFreeDegreeOne) ys.push_back(pos);
        }
        bool found = false;
        // Ascending split masks give the smallest left coloring first.
        for (std::uint32_t split = 0; split < (std::uint32_t{1} << ys.size()) && !found; ++split) {
          std::uint32_t f1 = f, f2 = f;
          for (std::size_t i = 0; i < ys.size(); ++i) {
            if (split >> i & 1) {
              f2 = coloring3::set_digit(f2, ys[i], kFreeIsolated);
            } else {
              f1 = coloring3::set_digit(f1, ys[i], kFreeIsolated);
            }
          }
          if (left.values[f1] >= kInf || right.values[f2] >= kInf) continue;
          if (left.values[f1] + right.values[f2] - r_size == table.values[f]) {
            stack.emplace_back(nn.child, f1);
            stack.emplace_back(nn.child2, f2);
            found = true;
          }
        }
        if (!found) throw std::logic_error("join backtracking found no consistent split");
        break;
      }
    }
  }
  return witness;
}

SolveResult solve_vcp3(const Graph& g, const NiceDecomposition& nd, const SolveOptions& options) {
  if (options.validate_input) {
    auto report = validate_nice(nd, g);
    if (!report.valid())
      throw std::invalid_argument("invalid nice decomposition:\n" + report.to_string() +
                                  report.structural_detail);
  }
  if (g.max_degree() <= 1) return {0, {}};  // nothing to hit

  DpRun run = evaluate_tables(nd, options);
  const DpTable& root = run.tables[static_cast<std::size_t>(nd.root)];
  assert(root.values.size() == 1);
  const std::int32_t size = root.values[0];
  if (size >= kInf) throw std::logic_error("root entry infeasible on a valid decomposition");

  SolveResult result;
  result.size = size;
  result.witness = extract_witness(nd, run, nd.root, 0);
  if (result.witness.size() != result.size || !is_vcp3_set(g, result.witness))
    throw std::logic_error("reconstructed witness failed verification");
  return result;
}

}  // namespace vcp3
