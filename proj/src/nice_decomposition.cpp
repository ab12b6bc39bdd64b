#include "vcp3/nice_decomposition.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace vcp3 {

int NiceDecomposition::width() const {
  int w = -1;
  for (const auto& nd : nodes) w = std::max(w, nd.bag.size() - 1);
  return w;
}

std::array<int, 5> NiceDecomposition::kind_counts() const {
  std::array<int, 5> counts{};
  for (const auto& nd : nodes) ++counts[static_cast<std::size_t>(nd.kind)];
  return counts;
}

std::vector<int> NiceDecomposition::post_order() const {
  std::vector<int> order;
  order.reserve(nodes.size());
  if (root < 0) return order;
  // Iterative post-order; (node, expanded) pairs.
  std::vector<std::pair<int, bool>> stack = {{root, false}};
  while (!stack.empty()) {
    auto [t, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      order.push_back(t);
      continue;
    }
    stack.emplace_back(t, true);
    const NiceNode& nd = nodes[static_cast<std::size_t>(t)];
    if (nd.child >= 0) stack.emplace_back(nd.child, false);
    if (nd.child2 >= 0) stack.emplace_back(nd.child2, false);
  }
  return order;
}

namespace {

// Contracts tree edges whose bags are nested; afterwards the decomposition
// has at most n+1 nodes, which the nice-form node-count bound relies on.
TreeDecomposition contract_subset_bags(const TreeDecomposition& td_in) {
  TreeDecomposition td = td_in;
  const int b = td.node_count();
  if (b == 0) return td;
  std::vector<char> alive(static_cast<std::size_t>(b), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int c = 0; c < b; ++c) {
      if (!alive[static_cast<std::size_t>(c)]) continue;
      int p = td.parent[static_cast<std::size_t>(c)];
      if (p < 0) continue;
      const auto& cb = td.bags[static_cast<std::size_t>(c)];
      const auto& pb = td.bags[static_cast<std::size_t>(p)];
      bool c_in_p = std::includes(pb.begin(), pb.end(), cb.begin(), cb.end());
      bool p_in_c = std::includes(cb.begin(), cb.end(), pb.begin(), pb.end());
      if (!c_in_p && !p_in_c) continue;
      if (p_in_c && !c_in_p) td.bags[static_cast<std::size_t>(p)] = cb;
      for (int x = 0; x < b; ++x) {
        if (alive[static_cast<std::size_t>(x)] && td.parent[static_cast<std::size_t>(x)] == c)
          td.parent[static_cast<std::size_t>(x)] = p;
      }
      alive[static_cast<std::size_t>(c)] = 0;
      changed = true;
    }
  }
  TreeDecomposition out;
  std::vector<int> remap(static_cast<std::size_t>(b), -1);
  for (int i = 0; i < b; ++i) {
    if (!alive[static_cast<std::size_t>(i)]) continue;
    remap[static_cast<std::size_t>(i)] = out.node_count();
    out.bags.push_back(td.bags[static_cast<std::size_t>(i)]);
    out.parent.push_back(-2);
  }
  for (int i = 0; i < b; ++i) {
    if (!alive[static_cast<std::size_t>(i)]) continue;
    int p = td.parent[static_cast<std::size_t>(i)];
    out.parent[static_cast<std::size_t>(remap[static_cast<std::size_t>(i)])] =
        p < 0 ? -1 : remap[static_cast<std::size_t>(p)];
  }
  out.rebuild_children();
  return out;
}

struct Builder {
  std::vector<NiceNode> nodes;

  int add(NiceNode nd) {
    nodes.push_back(std::move(nd));
    return static_cast<int>(nodes.size()) - 1;
  }

  int leaf_chain(const VertexSet& bag) {
    NiceNode leaf;
    int cur = add(leaf);
    VertexSet acc;
    for (Vertex v : bag) {
      acc.insert(v);
      NiceNode nd;
      nd.kind = NodeKind::IntroduceVertex;
      nd.bag = acc;
      nd.child = cur;
      nd.vertex = v;
      cur = add(nd);
    }
    return cur;
  }

  // Forgets `from`-only vertices (ascending) then introduces `to`-only ones.
  int transition(int from, const VertexSet& to) {
    VertexSet cur_bag = nodes[static_cast<std::size_t>(from)].bag;
    const VertexSet start = cur_bag;
    int cur = from;
    for (Vertex v : start) {
      if (to.contains(v)) continue;
      cur_bag.erase(v);
      NiceNode nd;
      nd.kind = NodeKind::Forget;
      nd.bag = cur_bag;
      nd.child = cur;
      nd.vertex = v;
      cur = add(nd);
    }
    for (Vertex v : to) {
      if (cur_bag.contains(v)) continue;
      cur_bag.insert(v);
      NiceNode nd;
      nd.kind = NodeKind::IntroduceVertex;
      nd.bag = cur_bag;
      nd.child = cur;
      nd.vertex = v;
      cur = add(nd);
    }
    return cur;
  }

  int build(const TreeDecomposition& td, int t) {
    const auto& bag = td.bags[static_cast<std::size_t>(t)];
    const auto& ch = td.children[static_cast<std::size_t>(t)];
    if (ch.empty()) return leaf_chain(bag);
    std::vector<int> lifted;
    lifted.reserve(ch.size());
    for (int c : ch) lifted.push_back(transition(build(td, c), bag));
    int acc = lifted[0];
    for (std::size_t i = 1; i < lifted.size(); ++i) {
      NiceNode nd;
      nd.kind = NodeKind::Join;
      nd.bag = bag;
      nd.child = acc;
      nd.child2 = lifted[i];
      acc = add(nd);
    }
    return acc;
  }
};

void compute_parents_depths(const std::vector<NiceNode>& nodes, int root, std::vector<int>& parent,
                            std::vector<int>& depth) {
  parent.assign(nodes.size(), -1);
  depth.assign(nodes.size(), 0);
  std::vector<int> stack = {root};
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    const NiceNode& nd = nodes[static_cast<std::size_t>(t)];
    for (int c : {nd.child, nd.child2}) {
      if (c < 0) continue;
      parent[static_cast<std::size_t>(c)] = t;
      depth[static_cast<std::size_t>(c)] = depth[static_cast<std::size_t>(t)] + 1;
      stack.push_back(c);
    }
  }
}

}  // namespace

NiceDecomposition make_nice(const TreeDecomposition& td_in, const Graph& g) {
  auto report = validate(td_in, g);
  if (!report.valid())
    throw std::invalid_argument("invalid tree decomposition:\n" + report.to_string());

  NiceDecomposition nd;
  if (g.vertex_count() == 0) {
    nd.nodes.push_back(NiceNode{});
    nd.root = 0;
    return nd;
  }

  TreeDecomposition td = contract_subset_bags(td_in);
  Builder b;
  int top = b.build(td, td.root);
  int root = b.transition(top, VertexSet{});

  // Locate the unique forget node of each vertex; edges are introduced
  // directly below the forget node of the endpoint that leaves first.
  std::vector<int> parent, depth;
  compute_parents_depths(b.nodes, root, parent, depth);
  std::vector<int> forget_of(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int t = 0; t < static_cast<int>(b.nodes.size()); ++t) {
    const NiceNode& node = b.nodes[static_cast<std::size_t>(t)];
    if (node.kind != NodeKind::Forget) continue;
    assert(forget_of[static_cast<std::size_t>(node.vertex)] == -1);
    forget_of[static_cast<std::size_t>(node.vertex)] = t;
  }

  std::map<int, std::vector<Edge>> anchored;
  for (auto [u, v] : g.edges()) {
    int fu = forget_of[static_cast<std::size_t>(u)];
    int fv = forget_of[static_cast<std::size_t>(v)];
    assert(fu >= 0 && fv >= 0);
    assert(depth[static_cast<std::size_t>(fu)] != depth[static_cast<std::size_t>(fv)]);
    int anchor = depth[static_cast<std::size_t>(fu)] > depth[static_cast<std::size_t>(fv)] ? fu : fv;
    anchored[anchor].emplace_back(u, v);
  }
  for (auto& [anchor, edges] : anchored) {
    std::sort(edges.begin(), edges.end());
    int below = b.nodes[static_cast<std::size_t>(anchor)].child;
    const VertexSet bag = b.nodes[static_cast<std::size_t>(below)].bag;  // contains both endpoints
    for (auto [u, v] : edges) {
      NiceNode en;
      en.kind = NodeKind::IntroduceEdge;
      en.bag = bag;
      en.child = below;
      en.edge_u = u;
      en.edge_v = v;
      below = b.add(en);
    }
    b.nodes[static_cast<std::size_t>(anchor)].child = below;
  }

  nd.nodes = std::move(b.nodes);
  nd.root = root;
  return nd;
}

TreeDecomposition as_tree_decomposition(const NiceDecomposition& nd) {
  TreeDecomposition td;
  td.bags.reserve(nd.nodes.size());
  for (const auto& node : nd.nodes) td.bags.push_back(node.bag);
  std::vector<int> parent, depth;
  if (nd.root >= 0) {
    compute_parents_depths(nd.nodes, nd.root, parent, depth);
  } else {
    parent.assign(nd.nodes.size(), -1);
  }
  td.parent = parent;
  td.rebuild_children();
  return td;
}

ValidationReport validate_nice(const NiceDecomposition& nd, const Graph& g) {
  ValidationReport report;
  std::ostringstream problems;
  auto fail = [&](const std::string& msg) {
    report.structural_error = true;
    problems << msg << '\n';
  };

  if (nd.root < 0 || nd.root >= nd.node_count()) {
    fail("missing root");
    report.structural_detail = problems.str();
    return report;
  }

  // Tree shape: every node except the root is referenced exactly once.
  std::vector<int> refs(nd.nodes.size(), 0);
  for (const auto& node : nd.nodes) {
    for (int c : {node.child, node.child2}) {
      if (c < 0) continue;
      if (c >= nd.node_count()) {
        fail("child index out of range");
        report.structural_detail = problems.str();
        return report;
      }
      ++refs[static_cast<std::size_t>(c)];
    }
  }
  for (int t = 0; t < nd.node_count(); ++t) {
    int expected = (t == nd.root) ? 0 : 1;
    if (refs[static_cast<std::size_t>(t)] != expected)
      fail("node " + std::to_string(t) + " referenced " +
           std::to_string(refs[static_cast<std::size_t>(t)]) + " times");
  }
  if (static_cast<int>(nd.post_order().size()) != nd.node_count())
    fail("not all nodes reachable from root");
  if (report.structural_error) {
    report.structural_detail = problems.str();
    return report;
  }

  if (!nd.nodes[static_cast<std::size_t>(nd.root)].bag.empty()) fail("root bag not empty");

  std::map<Edge, int> introduced;
  for (int t = 0; t < nd.node_count(); ++t) {
    const NiceNode& node = nd.nodes[static_cast<std::size_t>(t)];
    const auto kid = [&](int c) -> const NiceNode& {
      return nd.nodes[static_cast<std::size_t>(c)];
    };
    switch (node.kind) {
      case NodeKind::Leaf:
        if (node.child >= 0 || node.child2 >= 0) fail("leaf with children");
        if (!node.bag.empty()) fail("leaf bag not empty at node " + std::to_string(t));
        break;
      case NodeKind::IntroduceVertex: {
        if (node.child < 0 || node.child2 >= 0) fail("introduce-vertex child count");
        else {
          VertexSet expect = kid(node.child).bag;
          if (expect.contains(node.vertex)) fail("introduced vertex already present");
          expect.insert(node.vertex);
          if (!(expect == node.bag)) fail("introduce-vertex bag mismatch at " + std::to_string(t));
        }
        break;
      }
      case NodeKind::Forget: {
        if (node.child < 0 || node.child2 >= 0) fail("forget child count");
        else {
          VertexSet expect = kid(node.child).bag;
          if (!expect.contains(node.vertex)) fail("forgotten vertex missing from child bag");
          expect.erase(node.vertex);
          if (!(expect == node.bag)) fail("forget bag mismatch at " + std::to_string(t));
        }
        break;
      }
      case NodeKind::IntroduceEdge: {
        if (node.child < 0 || node.child2 >= 0) fail("introduce-edge child count");
        else if (!(kid(node.child).bag == node.bag)) fail("introduce-edge bag changed");
        if (node.edge_u < 0 || node.edge_v < 0 || node.edge_u >= node.edge_v)
          fail("introduce-edge label malformed");
        else {
          if (!node.bag.contains(node.edge_u) || !node.bag.contains(node.edge_v))
            fail("introduce-edge endpoints not in bag at " + std::to_string(t));
          if (!g.has_edge(node.edge_u, node.edge_v)) fail("introduce-edge label not a graph edge");
          ++introduced[{node.edge_u, node.edge_v}];
        }
        break;
      }
      case NodeKind::Join: {
        if (node.child < 0 || node.child2 < 0) fail("join child count");
        else if (!(kid(node.child).bag == node.bag) || !(kid(node.child2).bag == node.bag))
          fail("join bag mismatch at " + std::to_string(t));
        break;
      }
    }
  }

  for (auto [u, v] : g.edges()) {
    auto it = introduced.find({u, v});
    int count = it == introduced.end() ? 0 : it->second;
    if (count != 1)
      fail("edge (" + std::to_string(u) + "," + std::to_string(v) + ") introduced " +
           std::to_string(count) + " times");
  }
  if (static_cast<int>(introduced.size()) > g.edge_count()) fail("stray introduce-edge labels");

  const long long bound = 16LL * std::max(1, nd.width() + 1) * std::max(1, g.vertex_count());
  if (nd.node_count() > bound)
    fail("node count " + std::to_string(nd.node_count()) + " exceeds bound " +
         std::to_string(bound));

  // The nice form is still a tree decomposition in the plain sense.
  ValidationReport base = validate(as_tree_decomposition(nd), g);
  report.missing_vertices = base.missing_vertices;
  report.uncovered_edges = base.uncovered_edges;
  report.disconnected_vertices = base.disconnected_vertices;
  report.out_of_range_vertices = base.out_of_range_vertices;
  if (base.structural_error) fail(base.structural_detail);

  report.structural_detail = problems.str();
  return report;
}

}  // namespace vcp3
