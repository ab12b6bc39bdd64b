#include "vcp3/generators.hpp"

#include <random>
#include <set>
#include <stdexcept>

#include "vcp3/rng.hpp"

namespace vcp3 {

const char* family_name(Family f) {
  switch (f) {
    case Family::Tree: return "tree";
    case Family::Cycle: return "cycle";
    case Family::Cactus: return "cactus";
    case Family::PartialKTree: return "partial-k-tree";
    case Family::RandomGnm: return "random-gnm";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : {Family::Tree, Family::Cycle, Family::Cactus, Family::PartialKTree,
                   Family::RandomGnm}) {
    if (name == family_name(f)) return f;
  }
  return std::nullopt;
}

namespace {

Graph make_tree(int n, std::mt19937_64& gen) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v)
    g.add_edge(v, static_cast<Vertex>(draw_below(gen, static_cast<std::uint64_t>(v))));
  return g;
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle family needs n >= 3");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph make_cactus(int n, std::mt19937_64& gen) {
  Graph g(n);
  int built = 1;  // vertex 0 is the seed
  while (built < n) {
    const Vertex attach = static_cast<Vertex>(draw_below(gen, static_cast<std::uint64_t>(built)));
    const int remaining = n - built;
    const bool cycle = remaining >= 2 && draw_below(gen, 2) == 0;
    if (cycle) {
      // Cycle through `attach` using fresh vertices only, so any two cycles
      // share at most the attachment vertex.
      const int extra =
          2 + static_cast<int>(draw_below(gen, static_cast<std::uint64_t>(std::min(4, remaining - 1))));
      Vertex prev = attach;
      for (int j = 0; j < extra; ++j) {
        g.add_edge(prev, built);
        prev = built++;
      }
      g.add_edge(prev, attach);
    } else {
      g.add_edge(attach, built++);
    }
  }
  return g;
}

GeneratedInstance make_partial_k_tree(const InstanceSpec& spec, std::mt19937_64& gen) {
  const int n = spec.n;
  const int k = spec.k;
  if (k < 1) throw std::invalid_argument("partial-k-tree needs k >= 1");
  if (k >= n) throw std::invalid_argument("partial-k-tree needs k < n");

  Graph g(n);
  TreeDecomposition td;
  std::vector<Edge> growth_edges;

  // Seed clique on {0..k}; its natural bag is the decomposition root.
  VertexSet root_bag;
  for (Vertex v = 0; v <= k; ++v) root_bag.insert(v);
  for (Vertex u = 0; u <= k; ++u)
    for (Vertex v = u + 1; v <= k; ++v) g.add_edge(u, v);
  td.bags.push_back(root_bag);
  td.parent.push_back(-1);

  // Cliques available for attachment, each with the bag that contains it.
  std::vector<std::pair<VertexSet, int>> cliques;
  {
    for (Vertex skip = 0; skip <= k; ++skip) {
      VertexSet q = root_bag;
      q.erase(skip);
      cliques.emplace_back(std::move(q), 0);
    }
  }

  for (Vertex v = k + 1; v < n; ++v) {
    const std::size_t pick =
        static_cast<std::size_t>(draw_below(gen, static_cast<std::uint64_t>(cliques.size())));
    const auto [clique, home] = cliques[pick];
    VertexSet bag = clique;
    bag.insert(v);
    td.bags.push_back(bag);
    td.parent.push_back(home);
    const int bag_id = td.node_count() - 1;
    for (Vertex u : clique) {
      g.add_edge(u, v);
      growth_edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    for (Vertex skip : clique) {
      VertexSet q = bag;
      q.erase(skip);
      cliques.emplace_back(std::move(q), bag_id);
    }
  }
  td.rebuild_children();

  // Thin the growth edges; the recorded decomposition stays valid for any
  // subgraph of the k-tree.
  Graph thinned(n);
  std::set<Edge> dropped;
  for (auto e : growth_edges) {
    const double coin =
        static_cast<double>(draw_below(gen, 1u << 30)) / static_cast<double>(1u << 30);
    if (coin < spec.edge_delete_prob) dropped.insert(e);
  }
  for (auto e : g.edges())
    if (!dropped.count(e)) thinned.add_edge(e.first, e.second);

  return {std::move(thinned), std::move(td)};
}

Graph make_gnm(int n, int m, std::mt19937_64& gen) {
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (m < 0 || m > max_edges)
    throw std::invalid_argument("random-gnm edge count out of range");
  Graph g(n);
  while (g.edge_count() < m) {
    const Vertex u = static_cast<Vertex>(draw_below(gen, static_cast<std::uint64_t>(n)));
    const Vertex v = static_cast<Vertex>(draw_below(gen, static_cast<std::uint64_t>(n)));
    if (u != v) g.add_edge(u, v);
  }
  return g;
}

}  // namespace

GeneratedInstance generate(const InstanceSpec& spec) {
  if (spec.n < 0) throw std::invalid_argument("negative instance size");
  std::mt19937_64 gen(stream_seed(spec.seed, static_cast<std::uint64_t>(spec.family)));
  switch (spec.family) {
    case Family::Tree: return {make_tree(spec.n, gen), std::nullopt};
    case Family::Cycle: return {make_cycle(spec.n), std::nullopt};
    case Family::Cactus: return {make_cactus(spec.n, gen), std::nullopt};
    case Family::PartialKTree: return make_partial_k_tree(spec, gen);
    case Family::RandomGnm: return {make_gnm(spec.n, spec.m, gen), std::nullopt};
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace vcp3
