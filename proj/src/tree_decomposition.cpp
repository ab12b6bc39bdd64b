#include "vcp3/tree_decomposition.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace vcp3 {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& bag : bags) w = std::max(w, bag.size() - 1);
  return w;
}

void TreeDecomposition::rebuild_children() {
  children.assign(bags.size(), {});
  root = -1;
  for (int i = 0; i < node_count(); ++i) {
    if (parent[static_cast<std::size_t>(i)] < 0) {
      root = i;
    } else {
      children[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])].push_back(i);
    }
  }
}

void TreeDecomposition::reroot(int new_root) {
  assert(new_root >= 0 && new_root < node_count());
  std::vector<int> path;
  for (int v = new_root; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
  for (std::size_t i = path.size(); i-- > 1;)
    parent[static_cast<std::size_t>(path[i])] = path[i - 1];
  parent[static_cast<std::size_t>(new_root)] = -1;
  rebuild_children();
}

std::string ValidationReport::to_string() const {
  if (valid()) return "valid";
  std::ostringstream os;
  if (structural_error) os << "structural: " << structural_detail << '\n';
  for (Vertex v : out_of_range_vertices) os << "bag vertex out of range: " << v << '\n';
  for (Vertex v : missing_vertices) os << "condition 1: vertex " << v << " in no bag\n";
  for (auto [u, v] : uncovered_edges)
    os << "condition 2: edge (" << u << "," << v << ") in no bag\n";
  for (Vertex v : disconnected_vertices)
    os << "condition 3: occurrences of vertex " << v << " not connected\n";
  return os.str();
}

ValidationReport validate(const TreeDecomposition& td, const Graph& g) {
  ValidationReport report;
  const int b = td.node_count();
  const int n = g.vertex_count();

  // Tree structure: one root, parent links acyclic and in range.
  if (b > 0) {
    if (td.root < 0 || td.root >= b) {
      report.structural_error = true;
      report.structural_detail = "no root";
      return report;
    }
    int roots = 0;
    for (int i = 0; i < b; ++i) {
      int p = td.parent[static_cast<std::size_t>(i)];
      if (p == -1) {
        ++roots;
      } else if (p < 0 || p >= b) {
        report.structural_error = true;
        report.structural_detail = "parent out of range at node " + std::to_string(i);
        return report;
      }
    }
    if (roots != 1) {
      report.structural_error = true;
      report.structural_detail = "expected exactly one root, found " + std::to_string(roots);
      return report;
    }
    // Every node must reach the root (no cycles).
    for (int i = 0; i < b; ++i) {
      int steps = 0, v = i;
      while (v != td.root && steps <= b) {
        v = td.parent[static_cast<std::size_t>(v)];
        ++steps;
      }
      if (v != td.root) {
        report.structural_error = true;
        report.structural_detail = "cycle in parent links at node " + std::to_string(i);
        return report;
      }
    }
  }

  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  for (const auto& bag : td.bags) {
    for (Vertex v : bag) {
      if (v < 0 || v >= n) {
        report.out_of_range_vertices.push_back(v);
      } else {
        covered[static_cast<std::size_t>(v)] = 1;
      }
    }
  }
  if (!report.out_of_range_vertices.empty()) return report;

  for (Vertex v = 0; v < n; ++v)
    if (!covered[static_cast<std::size_t>(v)]) report.missing_vertices.push_back(v);

  for (auto [u, v] : g.edges()) {
    bool found = false;
    for (const auto& bag : td.bags) {
      if (bag.contains(u) && bag.contains(v)) {
        found = true;
        break;
      }
    }
    if (!found) report.uncovered_edges.emplace_back(u, v);
  }

  // Condition 3: per vertex, the occurrence nodes must induce a connected
  // subtree. A set of tree nodes is connected iff every occurrence other
  // than the depth-minimal one has its parent in the set as well... which
  // is exactly "walking one step up from each occurrence stays inside,
  // except at the unique top". Count tops instead.
  for (Vertex v = 0; v < n; ++v) {
    int occurrences = 0, tops = 0;
    for (int i = 0; i < b; ++i) {
      if (!td.bags[static_cast<std::size_t>(i)].contains(v)) continue;
      ++occurrences;
      int p = td.parent[static_cast<std::size_t>(i)];
      if (p == -1 || !td.bags[static_cast<std::size_t>(p)].contains(v)) ++tops;
    }
    if (occurrences > 0 && tops != 1) report.disconnected_vertices.push_back(v);
  }
  return report;
}

namespace {

// Dynamic adjacency for elimination; neighbor sets stay sorted.
struct EliminationGraph {
  explicit EliminationGraph(const Graph& g)
      : alive(static_cast<std::size_t>(g.vertex_count()), 1),
        nbr(static_cast<std::size_t>(g.vertex_count())) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      nbr[static_cast<std::size_t>(v)] = g.neighbors(v);
  }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& s = nbr[static_cast<std::size_t>(u)];
    return std::binary_search(s.begin(), s.end(), v);
  }

  void connect(Vertex u, Vertex v) {
    auto& su = nbr[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(su.begin(), su.end(), v);
    if (it != su.end() && *it == v) return;
    su.insert(it, v);
    auto& sv = nbr[static_cast<std::size_t>(v)];
    sv.insert(std::lower_bound(sv.begin(), sv.end(), u), u);
  }

  void remove(Vertex v) {
    alive[static_cast<std::size_t>(v)] = 0;
    for (Vertex u : nbr[static_cast<std::size_t>(v)]) {
      auto& su = nbr[static_cast<std::size_t>(u)];
      su.erase(std::lower_bound(su.begin(), su.end(), v));
    }
    nbr[static_cast<std::size_t>(v)].clear();
  }

  int fill_cost(Vertex v) const {
    const auto& s = nbr[static_cast<std::size_t>(v)];
    int missing = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (!adjacent(s[i], s[j])) ++missing;
    return missing;
  }

  std::vector<char> alive;
  std::vector<std::vector<Vertex>> nbr;
};

}  // namespace

TreeDecomposition heuristic_decompose(const Graph& g, EliminationStrategy strategy) {
  const int n = g.vertex_count();
  TreeDecomposition td;
  if (n == 0) return td;

  EliminationGraph eg(g);
  std::vector<VertexSet> bags;
  std::vector<int> elim_order;                       // position -> vertex
  std::vector<int> elim_pos(static_cast<std::size_t>(n), -1);  // vertex -> position
  bags.reserve(static_cast<std::size_t>(n));

  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    long long best_score = std::numeric_limits<long long>::max();
    for (Vertex v = 0; v < n; ++v) {
      if (!eg.alive[static_cast<std::size_t>(v)]) continue;
      long long score = strategy == EliminationStrategy::MinDegree
                            ? static_cast<long long>(eg.nbr[static_cast<std::size_t>(v)].size())
                            : eg.fill_cost(v);
      if (score < best_score) {
        best_score = score;
        best = v;
      }
    }
    const auto neighborhood = eg.nbr[static_cast<std::size_t>(best)];
    VertexSet bag(neighborhood);
    bag.insert(best);
    bags.push_back(std::move(bag));
    elim_order.push_back(best);
    elim_pos[static_cast<std::size_t>(best)] = step;
    for (std::size_t i = 0; i < neighborhood.size(); ++i)
      for (std::size_t j = i + 1; j < neighborhood.size(); ++j)
        eg.connect(neighborhood[i], neighborhood[j]);
    eg.remove(best);
  }

  // Bag i attaches to the bag of the first-eliminated vertex among its
  // other members; a bare singleton attaches to the next bag in order.
  td.bags = bags;
  td.parent.assign(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (i == n - 1) break;  // last bag is the root
    int next = n;
    for (Vertex u : bags[static_cast<std::size_t>(i)]) {
      int p = elim_pos[static_cast<std::size_t>(u)];
      if (p > i) next = std::min(next, p);
    }
    td.parent[static_cast<std::size_t>(i)] = (next == n) ? i + 1 : next;
  }
  td.rebuild_children();
  return td;
}

TreeDecomposition parse_td(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long nbags = -1, max_bag = -1, n = -1;
  TreeDecomposition td;
  std::vector<char> seen_bag;
  std::vector<std::pair<int, int>> tree_edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 's') {
      if (nbags >= 0) throw ParseError(lineno, "duplicate solution header");
      std::string s, tdtok;
      if (!(ls >> s >> tdtok >> nbags >> max_bag >> n) || s != "s" || tdtok != "td" || nbags < 0 ||
          n < 0)
        throw ParseError(lineno, "expected `s td <#bags> <max bag size> <n>`");
      td.bags.assign(static_cast<std::size_t>(nbags), {});
      td.parent.assign(static_cast<std::size_t>(nbags), -1);
      seen_bag.assign(static_cast<std::size_t>(nbags), 0);
      continue;
    }
    if (nbags < 0) throw ParseError(lineno, "line before `s td` header");
    if (line[0] == 'b') {
      std::string b;
      long long id;
      if (!(ls >> b >> id)) throw ParseError(lineno, "expected `b <id> <vertices...>`");
      if (id < 1 || id > nbags) throw ParseError(lineno, "bag id out of range: " + std::to_string(id));
      if (seen_bag[static_cast<std::size_t>(id - 1)])
        throw ParseError(lineno, "duplicate bag " + std::to_string(id));
      seen_bag[static_cast<std::size_t>(id - 1)] = 1;
      std::vector<Vertex> vs;
      long long v;
      while (ls >> v) {
        if (v < 1 || v > n) throw ParseError(lineno, "bag vertex out of range: " + std::to_string(v));
        vs.push_back(static_cast<Vertex>(v - 1));
      }
      td.bags[static_cast<std::size_t>(id - 1)] = VertexSet(std::move(vs));
      continue;
    }
    long long i, j;
    {
      std::istringstream el(line);
      if (!(el >> i >> j)) throw ParseError(lineno, "unrecognized line: " + line);
      std::string rest;
      if (el >> rest) throw ParseError(lineno, "trailing tokens: " + rest);
    }
    if (i < 1 || i > nbags || j < 1 || j > nbags)
      throw ParseError(lineno, "tree edge endpoint out of range");
    tree_edges.emplace_back(static_cast<int>(i - 1), static_cast<int>(j - 1));
  }
  if (nbags < 0) throw ParseError(lineno, "missing `s td` header");
  if (nbags == 0) return td;

  // Root at bag 1 and orient the edges by BFS.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nbags));
  for (auto [i, j] : tree_edges) {
    adj[static_cast<std::size_t>(i)].push_back(j);
    adj[static_cast<std::size_t>(j)].push_back(i);
  }
  std::vector<int> order = {0};
  std::vector<char> visited(static_cast<std::size_t>(nbags), 0);
  visited[0] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    int u = order[head];
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (!visited[static_cast<std::size_t>(v)]) {
        visited[static_cast<std::size_t>(v)] = 1;
        td.parent[static_cast<std::size_t>(v)] = u;
        order.push_back(v);
      }
    }
  }
  if (static_cast<long long>(order.size()) != nbags)
    throw ParseError(lineno, "bag tree is not connected");
  if (static_cast<long long>(tree_edges.size()) != nbags - 1)
    throw ParseError(lineno, "bag tree has wrong edge count");
  td.rebuild_children();
  return td;
}

TreeDecomposition parse_td_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open decomposition file: " + path);
  return parse_td(in);
}

void emit_td(std::ostream& out, const TreeDecomposition& td, int vertex_count) {
  out << "s td " << td.node_count() << ' ' << td.width() + 1 << ' ' << vertex_count << '\n';
  for (int i = 0; i < td.node_count(); ++i) {
    out << "b " << i + 1;
    for (Vertex v : td.bags[static_cast<std::size_t>(i)]) out << ' ' << v + 1;
    out << '\n';
  }
  for (int i = 0; i < td.node_count(); ++i) {
    int p = td.parent[static_cast<std::size_t>(i)];
    if (p != -1) out << p + 1 << ' ' << i + 1 << '\n';
  }
}

}  // namespace vcp3
