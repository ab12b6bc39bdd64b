#include "vcp3/oracle.hpp"

#include <bit>
#include <stdexcept>

namespace vcp3 {

namespace {

void check_guard(const Graph& g, int limit, const char* what) {
  if (g.vertex_count() > limit)
    throw std::invalid_argument(std::string(what) + ": refusing n > " + std::to_string(limit));
}

bool vcp3_mask(const Graph& g, std::uint32_t mask) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (mask >> v & 1) continue;
    int deg = 0;
    for (Vertex u : g.neighbors(v)) {
      if (!(mask >> u & 1) && ++deg > 1) return false;
    }
  }
  return true;
}

bool connected_mask(const Graph& g, std::uint32_t mask) {
  if (mask == 0) return false;
  const Vertex start = std::countr_zero(mask);
  std::uint32_t seen = std::uint32_t{1} << start;
  std::vector<Vertex> stack = {start};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if ((mask >> u & 1) && !(seen >> u & 1)) {
        seen |= std::uint32_t{1} << u;
        stack.push_back(u);
      }
    }
  }
  return seen == mask;
}

// Gosper's hack: next mask with the same popcount.
std::uint32_t next_same_popcount(std::uint32_t v) {
  const std::uint32_t c = v & static_cast<std::uint32_t>(-static_cast<std::int32_t>(v));
  const std::uint32_t r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

}  // namespace

BruteVcp3Result brute_vcp3(const Graph& g) {
  check_guard(g, 24, "brute_vcp3");
  const int n = g.vertex_count();
  BruteVcp3Result result;
  for (int size = 0; size <= n; ++size) {
    std::uint32_t mask = (std::uint32_t{1} << size) - 1;
    const std::uint32_t limit = std::uint32_t{1} << n;
    while (mask < limit) {
      if (vcp3_mask(g, mask)) result.optimal_sets.push_back(VertexSet::from_mask(mask));
      if (size == 0) break;
      mask = next_same_popcount(mask);
    }
    if (!result.optimal_sets.empty()) {
      result.size = size;
      return result;
    }
  }
  result.size = n;  // unreachable: the full vertex set always works
  return result;
}

std::optional<int> brute_cvcp3(const Graph& g, const VertexSet& s) {
  check_guard(g, 20, "brute_cvcp3");
  const int n = g.vertex_count();
  const std::uint32_t s_mask = s.to_mask();
  if (s.empty() && vcp3_mask(g, 0)) return 0;
  for (int size = std::max(1, s.size()); size <= n; ++size) {
    std::uint32_t mask = (std::uint32_t{1} << size) - 1;
    const std::uint32_t limit = std::uint32_t{1} << n;
    while (mask < limit) {
      if ((mask & s_mask) == s_mask && vcp3_mask(g, mask) && connected_mask(g, mask))
        return size;
      mask = next_same_popcount(mask);
    }
  }
  return std::nullopt;
}

namespace {

// Enumerates each connected vertex set exactly once: sets are rooted at
// their minimum vertex and grown by include/exclude decisions on frontier
// vertices larger than the root.
void expand_connected(const Graph& g, Vertex root, std::uint32_t current, std::uint32_t excluded,
                      std::uint32_t frontier, const std::uint32_t s_mask, int& best) {
  const int size = std::popcount(current);
  if ((current & s_mask) == s_mask && size < best && vcp3_mask(g, current)) best = size;
  if (size >= best) return;  // growing only increases the size
  if (frontier == 0) return;
  const Vertex x = std::countr_zero(frontier);
  const std::uint32_t x_bit = std::uint32_t{1} << x;
  // Exclude x.
  expand_connected(g, root, current, excluded | x_bit, frontier ^ x_bit, s_mask, best);
  // Include x and extend the frontier by its unseen neighbors above root.
  std::uint32_t new_frontier = frontier ^ x_bit;
  for (Vertex u : g.neighbors(x)) {
    if (u <= root) continue;
    const std::uint32_t u_bit = std::uint32_t{1} << u;
    if ((current | excluded | x_bit) & u_bit) continue;
    new_frontier |= u_bit;
  }
  expand_connected(g, root, current | x_bit, excluded, new_frontier, s_mask, best);
}

}  // namespace

std::optional<int> brute_cvcp3_expansion(const Graph& g, const VertexSet& s) {
  check_guard(g, 20, "brute_cvcp3_expansion");
  const int n = g.vertex_count();
  const std::uint32_t s_mask = s.to_mask();
  if (s.empty() && vcp3_mask(g, 0)) return 0;
  int best = n + 1;
  for (Vertex root = 0; root < n; ++root) {
    // Sets whose minimum vertex is root; s forces the root choice down.
    if (!s.empty() && s[0] < root) break;
    std::uint32_t frontier = 0;
    for (Vertex u : g.neighbors(root))
      if (u > root) frontier |= std::uint32_t{1} << u;
    int local_best = best;
    expand_connected(g, root, std::uint32_t{1} << root, 0, frontier, s_mask, local_best);
    best = std::min(best, local_best);
  }
  if (best > n) return std::nullopt;
  return best;
}

}  // namespace vcp3
