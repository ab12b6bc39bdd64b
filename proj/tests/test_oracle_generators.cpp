#include <algorithm>

#include "doctest.h"
#include "test_support.hpp"
#include "vcp3/generators.hpp"
#include "vcp3/oracle.hpp"

using namespace vcp3;
using namespace vcp3::testing;

TEST_CASE("brute_vcp3 basics") {
  CHECK(brute_vcp3(path_graph(3)).size == 1);
  CHECK(brute_vcp3(Graph(0)).size == 0);
  CHECK(brute_vcp3(Graph(4)).size == 0);

  // Second, unordered enumeration route for the C5 value.
  Graph c5 = cycle_graph(5);
  int best = c5.vertex_count();
  for (std::uint32_t mask = 0; mask < (1u << 5); ++mask) {
    if (is_vcp3_set(c5, VertexSet::from_mask(mask)))
      best = std::min(best, std::popcount(mask));
  }
  CHECK(best == 2);
  auto result = brute_vcp3(c5);
  CHECK(result.size == 2);
  for (const auto& f : result.optimal_sets) {
    CHECK(f.size() == 2);
    CHECK(is_vcp3_set(c5, f));
  }
}

TEST_CASE("brute_vcp3 guard") {
  CHECK_THROWS_AS(brute_vcp3(Graph(25)), std::invalid_argument);
  CHECK_THROWS_AS(brute_cvcp3(Graph(21), {}), std::invalid_argument);
}

TEST_CASE("brute_vcp3 invariant under relabeling") {
  std::mt19937_64 gen(91);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_graph(9, 0.35, gen);
    std::vector<Vertex> perm(9);
    for (int i = 0; i < 9; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int i = 8; i > 0; --i)
      std::swap(perm[static_cast<std::size_t>(i)],
                perm[static_cast<std::size_t>(draw_below(gen, static_cast<std::uint64_t>(i + 1)))]);
    Graph h(9);
    for (auto [u, v] : g.edges())
      h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    CHECK(brute_vcp3(g).size == brute_vcp3(h).size);
  }
}

TEST_CASE("brute_cvcp3 basics") {
  CHECK(brute_cvcp3(Graph(1), {}) == 0);
  CHECK(brute_cvcp3(complete_graph(4), {}) == 2);

  Graph triangles = graph_from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(brute_cvcp3(triangles, {0, 3}) == std::nullopt);
}

TEST_CASE("expansion oracle agrees with subset enumeration") {
  std::mt19937_64 gen(92);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(draw_below(gen, 10));
    Graph g = random_graph(n, 0.3, gen);
    VertexSet s;
    const int picks = static_cast<int>(draw_below(gen, 3));
    for (int i = 0; i < picks; ++i)
      s.insert(static_cast<Vertex>(draw_below(gen, static_cast<std::uint64_t>(n))));
    CHECK(brute_cvcp3(g, s) == brute_cvcp3_expansion(g, s));
  }
}

TEST_CASE("generator: trees") {
  InstanceSpec spec;
  spec.family = Family::Tree;
  spec.n = 10;
  spec.seed = 4;
  Graph g = generate(spec).graph;
  CHECK(g.vertex_count() == 10);
  CHECK(g.edge_count() == 9);
  VertexSet all;
  for (Vertex v = 0; v < 10; ++v) all.insert(v);
  CHECK(is_connected_induced(g, all));  // connected with n-1 edges: a tree
}

TEST_CASE("generator: cycles and cacti") {
  InstanceSpec spec;
  spec.family = Family::Cycle;
  spec.n = 5;
  Graph c5 = generate(spec).graph;
  CHECK(c5.edge_count() == 5);
  for (Vertex v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

  spec.family = Family::Cactus;
  spec.n = 20;
  spec.seed = 9;
  Graph cactus = generate(spec).graph;
  CHECK(cactus.vertex_count() == 20);
  TreeDecomposition td = heuristic_decompose(cactus, EliminationStrategy::MinDegree);
  CHECK(validate(td, cactus).valid());
  CHECK(td.width() <= 2);  // cacti have treewidth at most two
}

TEST_CASE("generator: partial k-tree emits a valid planted decomposition") {
  InstanceSpec spec;
  spec.family = Family::PartialKTree;
  spec.n = 12;
  spec.k = 3;
  spec.seed = 5;
  GeneratedInstance inst = generate(spec);
  REQUIRE(inst.decomposition.has_value());
  CHECK(validate(*inst.decomposition, inst.graph).valid());
  CHECK(inst.decomposition->width() <= 3);
}

TEST_CASE("generator: determinism and parameter validation") {
  InstanceSpec spec;
  spec.family = Family::PartialKTree;
  spec.n = 15;
  spec.k = 2;
  spec.seed = 31337;
  Graph a = generate(spec).graph;
  Graph b = generate(spec).graph;
  CHECK(a.edges() == b.edges());

  spec.seed = 31338;
  Graph c = generate(spec).graph;
  CHECK(a.edges() != c.edges());

  spec.k = 15;
  CHECK_THROWS_AS(generate(spec), std::invalid_argument);
  InstanceSpec gnm;
  gnm.family = Family::RandomGnm;
  gnm.n = 4;
  gnm.m = 10;
  CHECK_THROWS_AS(generate(gnm), std::invalid_argument);
}

TEST_CASE("generator: gnm edge count") {
  InstanceSpec spec;
  spec.family = Family::RandomGnm;
  spec.n = 12;
  spec.m = 20;
  spec.seed = 6;
  Graph g = generate(spec).graph;
  CHECK(g.vertex_count() == 12);
  CHECK(g.edge_count() == 20);
}
