#include <sstream>

#include "doctest.h"
#include "test_support.hpp"
#include "vcp3/graph.hpp"

using namespace vcp3;
using namespace vcp3::testing;

TEST_CASE("pace gr parsing") {
  std::istringstream in("c a comment\np tw 3 2\ne 1 2\ne 2 3\n");
  Graph g = parse_graph(in, GraphFormat::PaceGr);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK(!g.has_edge(0, 2));
}

TEST_CASE("pace gr: isolated vertices and duplicate edges") {
  std::istringstream in("p tw 4 0\n");
  Graph g = parse_graph(in, GraphFormat::PaceGr);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 0);

  std::istringstream dup("p tw 3 3\ne 1 2\ne 2 1\ne 1 2\n");
  Graph g2 = parse_graph(dup, GraphFormat::PaceGr);
  CHECK(g2.edge_count() == 1);
}

TEST_CASE("pace gr: self-loop and malformed lines rejected with line numbers") {
  std::istringstream loop("p tw 3 1\ne 2 2\n");
  CHECK_THROWS_WITH_AS(parse_graph(loop, GraphFormat::PaceGr),
                       "line 2: self-loop at vertex 2", ParseError);

  std::istringstream bad("p tw 3 1\ne 1\n");
  try {
    parse_graph(bad, GraphFormat::PaceGr);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }

  std::istringstream range("p tw 3 1\ne 1 4\n");
  CHECK_THROWS_AS(parse_graph(range, GraphFormat::PaceGr), ParseError);
}

TEST_CASE("edge list parsing") {
  std::istringstream in("# triangle plus pendant\n0 1\n1 2\n0 2\n2 3\n");
  Graph g = parse_graph(in, GraphFormat::EdgeList);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.degree(2) == 3);

  std::istringstream loop("0 0\n");
  CHECK_THROWS_AS(parse_graph(loop, GraphFormat::EdgeList), ParseError);
}

TEST_CASE("gr emit round-trips") {
  std::mt19937_64 gen(7);
  Graph g = random_graph(9, 0.4, gen);
  std::ostringstream out;
  emit_gr(out, g);
  std::istringstream in(out.str());
  Graph back = parse_graph(in, GraphFormat::PaceGr);
  CHECK(back.vertex_count() == g.vertex_count());
  CHECK(back.edges() == g.edges());
}

TEST_CASE("is_vcp3_set on paths and cycles") {
  Graph p3 = path_graph(3);
  CHECK(is_vcp3_set(p3, {1}));
  CHECK(!is_vcp3_set(p3, {}));

  // C5 minus {0,2} leaves vertex 1 isolated and the edge (3,4).
  Graph c5 = cycle_graph(5);
  CHECK(is_vcp3_set(c5, {0, 2}));
  CHECK(!is_vcp3_set(c5, {0}));
}

TEST_CASE("is_vcp3_set basics") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(7, 0.35, gen);
    VertexSet all;
    for (Vertex v = 0; v < g.vertex_count(); ++v) all.insert(v);
    CHECK(is_vcp3_set(g, all));
    CHECK(is_vcp3_set(g, {}) == (g.max_degree() <= 1));
  }
}

TEST_CASE("is_vcp3_set monotone under supersets") {
  std::mt19937_64 gen(12);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(8, 0.3, gen);
    const std::uint32_t f_mask = static_cast<std::uint32_t>(draw_below(gen, 1u << 8));
    const std::uint32_t extra = static_cast<std::uint32_t>(draw_below(gen, 1u << 8));
    VertexSet f = VertexSet::from_mask(f_mask);
    VertexSet bigger = VertexSet::from_mask(f_mask | extra);
    if (is_vcp3_set(g, f)) CHECK(is_vcp3_set(g, bigger));
  }
}

TEST_CASE("degree-based check agrees with explicit 3-path enumeration") {
  // Exhaustive on tiny graphs, sampled on larger ones.
  for (std::uint32_t edge_mask = 0; edge_mask < (1u << 6); ++edge_mask) {
    Graph g(4);
    int bit = 0;
    for (Vertex u = 0; u < 4; ++u)
      for (Vertex v = u + 1; v < 4; ++v, ++bit)
        if (edge_mask >> bit & 1) g.add_edge(u, v);
    for (std::uint32_t f_mask = 0; f_mask < (1u << 4); ++f_mask) {
      VertexSet f = VertexSet::from_mask(f_mask);
      CHECK(is_vcp3_set(g, f) == hits_every_p3(g, f));
    }
  }
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = random_graph(8, 0.3, gen);
    VertexSet f = VertexSet::from_mask(static_cast<std::uint32_t>(draw_below(gen, 1u << 8)));
    CHECK(is_vcp3_set(g, f) == hits_every_p3(g, f));
  }
}

TEST_CASE("is_connected_induced") {
  Graph k4 = complete_graph(4);
  CHECK(is_connected_induced(k4, {1, 3}));

  Graph p4 = path_graph(4);
  CHECK(!is_connected_induced(p4, {0, 3}));
  CHECK(is_connected_induced(p4, {2}));
  CHECK(!is_connected_induced(p4, {}));
}
