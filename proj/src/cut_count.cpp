#include "vcp3/cut_count.hpp"

#include <algorithm>
#include <cassert>
#include <future>
#include <stdexcept>

#include "vcp3/rng.hpp"

namespace vcp3 {

namespace {

using coloring4::digit;
using coloring4::insert_digit;
using coloring4::pow4;
using coloring4::remove_digit;
using coloring4::set_digit;

int bag_position(const VertexSet& bag, Vertex v) {
  const auto& ids = bag.ids();
  auto it = std::lower_bound(ids.begin(), ids.end(), v);
  if (it == ids.end() || *it != v)
    throw std::invalid_argument("vertex " + std::to_string(v) + " not in bag");
  return static_cast<int>(it - ids.begin());
}

// Fixed-width GF(2) rows over w in [0, weight_cap].
struct RowOps {
  int words;
  std::uint64_t top_mask;

  void xor_row(std::uint64_t* dst, const std::uint64_t* src) const {
    for (int i = 0; i < words; ++i) dst[i] ^= src[i];
  }

  // dst ^= (src << shift), truncated to the row width.
  void xor_shifted(std::uint64_t* dst, const std::uint64_t* src, int shift) const {
    const int ws = shift >> 6;
    const int bs = shift & 63;
    if (ws >= words) return;
    if (bs == 0) {
      for (int i = words - 1; i >= ws; --i) dst[i] ^= src[i - ws];
    } else {
      for (int i = words - 1; i >= ws; --i) {
        std::uint64_t v = src[i - ws] << bs;
        if (i - ws - 1 >= 0) v |= src[i - ws - 1] >> (64 - bs);
        dst[i] ^= v;
      }
    }
    dst[words - 1] &= top_mask;
  }

  bool any(const std::uint64_t* r) const {
    for (int i = 0; i < words; ++i)
      if (r[i]) return true;
    return false;
  }
};

}  // namespace

WeightAssignment draw_weights(int vertex_count, std::uint64_t weight_seed) {
  WeightAssignment wa;
  wa.range = 2 * vertex_count;
  wa.weights.resize(static_cast<std::size_t>(vertex_count));
  std::mt19937_64 gen(weight_seed);
  for (int v = 0; v < vertex_count; ++v)
    wa.weights[static_cast<std::size_t>(v)] =
        1 + static_cast<int>(draw_below(gen, static_cast<std::uint64_t>(wa.range)));
  return wa;
}

CountTable::CountTable(int node, int bag_size, int size_cap, int weight_cap)
    : node_(node), bag_size_(bag_size), size_cap_(size_cap), weight_cap_(weight_cap) {
  if (bag_size < 0 || bag_size > 15) throw std::invalid_argument("bag too large for parity table");
  if (size_cap < 0 || weight_cap < 0) throw std::invalid_argument("negative table cap");
  words_ = (weight_cap + 1 + 63) / 64;
  bits_.assign(static_cast<std::size_t>(coloring_count()) * (size_cap_ + 1) * words_, 0);
}

namespace {

struct CountEngine {
  const Graph& g;
  const NiceDecomposition& nd;
  const VertexSet& s;
  Vertex v1;
  const WeightAssignment& w;
  int size_cap;
  int weight_cap;
  RowOps ops;

  CountTable leaf(int t) {
    CountTable table(t, 0, size_cap, weight_cap);
    table.flip(0, 0, 0);
    return table;
  }

  CountTable introduce_vertex(int t, const CountTable& child) {
    const NiceNode& node = nd.nodes[static_cast<std::size_t>(t)];
    const int b = node.bag.size();
    const int pos = bag_position(node.bag, node.vertex);
    const int wv = w.of(node.vertex);
    CountTable table(t, b, size_cap, weight_cap);
    for (std::uint32_t f = 0; f < table.coloring_count(); ++f) {
      const std::uint32_t cf = remove_digit(f, pos);
      switch (digit(f, pos)) {
        case kCover1:
          for (int i = 1; i <= size_cap; ++i)
            ops.xor_shifted(table.row(f, i), child.row(cf, i - 1), wv);
          break;
        case kCover2:
          if (node.vertex == v1) break;  // v1 is pinned to side one
          for (int i = 1; i <= size_cap; ++i)
            ops.xor_shifted(table.row(f, i), child.row(cf, i - 1), wv);
          break;
        case kOutIsolated:
          for (int i = 0; i <= size_cap; ++i) ops.xor_row(table.row(f, i), child.row(cf, i));
          break;
        default:
          break;  // a just-introduced vertex cannot have degree one
      }
    }
    return table;
  }

  CountTable introduce_edge(int t, const CountTable& child) {
    const NiceNode& node = nd.nodes[static_cast<std::size_t>(t)];
    const int pu = bag_position(node.bag, node.edge_u);
    const int pv = bag_position(node.bag, node.edge_v);
    CountTable table(t, node.bag.size(), size_cap, weight_cap);
    for (std::uint32_t f = 0; f < table.coloring_count(); ++f) {
      const int du = digit(f, pu);
      const int dv = digit(f, pv);
      const bool u_in = du == kCover1 || du == kCover2;
      const bool v_in = dv == kCover1 || dv == kCover2;
      std::uint32_t cf = f;
      if (u_in && v_in) {
        if (du != dv) continue;  // an edge may not cross the cut
        if (du == kCover2 && (node.edge_u == v1 || node.edge_v == v1)) continue;
      } else if (!u_in && !v_in) {
        if (du == kOutDegreeOne && dv == kOutDegreeOne) {
          cf = set_digit(set_digit(f, pu, kOutIsolated), pv, kOutIsolated);
        } else {
          continue;  // the new edge would push an uncovered endpoint past degree one
        }
      }
      for (int i = 0; i <= size_cap; ++i) ops.xor_row(table.row(f, i), child.row(cf, i));
    }
    return table;
  }

  CountTable forget(int t, const CountTable& child) {
    const NiceNode& node = nd.nodes[static_cast<std::size_t>(t)];
    const NiceNode& child_node = nd.nodes[static_cast<std::size_t>(node.child)];
    const int pos = bag_position(child_node.bag, node.vertex);
    const bool required = s.contains(node.vertex);
    CountTable table(t, node.bag.size(), size_cap, weight_cap);
    for (std::uint32_t f = 0; f < table.coloring_count(); ++f) {
      for (int alpha : {kCover1, kCover2, kOutIsolated, kOutDegreeOne}) {
        if (required && alpha != kCover1 && alpha != kCover2) continue;
        const std::uint32_t cf = insert_digit(f, pos, alpha);
        for (int i = 0; i <= size_cap; ++i) ops.xor_row(table.row(f, i), child.row(cf, i));
      }
    }
    return table;
  }

  CountTable join(int t, const CountTable& left, const CountTable& right) {
    const NiceNode& node = nd.nodes[static_cast<std::size_t>(t)];
    const int b = node.bag.size();
    CountTable table(t, b, size_cap, weight_cap);

    auto nonzero_rows = [&](const CountTable& tab) {
      std::vector<char> flags(static_cast<std::size_t>(tab.coloring_count()) * (size_cap + 1), 0);
      for (std::uint32_t f = 0; f < tab.coloring_count(); ++f)
        for (int i = 0; i <= size_cap; ++i)
          flags[static_cast<std::size_t>(f) * (size_cap + 1) + static_cast<std::size_t>(i)] =
              ops.any(tab.row(f, i)) ? 1 : 0;
      return flags;
    };
    const auto left_nz = nonzero_rows(left);
    const auto right_nz = nonzero_rows(right);

    for (std::uint32_t f = 0; f < table.coloring_count(); ++f) {
      int delta_i = 0;
      int delta_w = 0;
      std::vector<int> split_positions;
      for (int pos = 0; pos < b; ++pos) {
        const int d = digit(f, pos);
        if (d == kCover1 || d == kCover2) {
          ++delta_i;
          delta_w += w.of(node.bag[pos]);
        } else if (d == kOutDegreeOne) {
          split_positions.push_back(pos);
        }
      }
      // Vertices in the cover are counted by both children; degree-one
      // vertices get their single edge from exactly one side.
      for (std::uint32_t split = 0; split < (std::uint32_t{1} << split_positions.size()); ++split) {
        std::uint32_t f1 = f, f2 = f;
        for (std::size_t i = 0; i < split_positions.size(); ++i) {
          if (split >> i & 1) {
            f2 = set_digit(f2, split_positions[i], kOutIsolated);
          } else {
            f1 = set_digit(f1, split_positions[i], kOutIsolated);
          }
        }
        for (int i1 = delta_i; i1 <= size_cap; ++i1) {
          if (!left_nz[static_cast<std::size_t>(f1) * (size_cap + 1) + static_cast<std::size_t>(i1)])
            continue;
          const std::uint64_t* lrow = left.row(f1, i1);
          for (int i2 = delta_i; i2 <= size_cap; ++i2) {
            const int i_out = i1 + i2 - delta_i;
            if (i_out > size_cap) break;
            if (!right_nz[static_cast<std::size_t>(f2) * (size_cap + 1) +
                          static_cast<std::size_t>(i2)])
              continue;
            const std::uint64_t* rrow = right.row(f2, i2);
            std::uint64_t* dst = table.row(f, i_out);
            for (int word = 0; word < ops.words; ++word) {
              std::uint64_t bits = lrow[word];
              while (bits) {
                const int w1 = word * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                if (w1 < delta_w) continue;
                ops.xor_shifted(dst, rrow, w1 - delta_w);
              }
            }
          }
        }
      }
    }
    return table;
  }
};

}  // namespace

CountTable count_parity_tables(const Graph& g, const NiceDecomposition& nd, const VertexSet& s,
                               Vertex v1, const WeightAssignment& w, const CountSettings& settings,
                               CountStats* stats) {
  const int n = g.vertex_count();
  if (v1 < 0 || v1 >= n) throw std::invalid_argument("v1 is not a graph vertex");
  const VertexSet s_eff = s.empty() ? VertexSet{v1} : s;
  if (!s_eff.contains(v1)) throw std::invalid_argument("v1 must belong to s");
  for (Vertex v : s_eff)
    if (v < 0 || v >= n) throw std::invalid_argument("s contains a non-vertex");
  if (static_cast<int>(w.weights.size()) != n)
    throw std::invalid_argument("weight assignment size mismatch");
  for (int wv : w.weights)
    if (wv < 1 || wv > std::max(1, w.range))
      throw std::invalid_argument("vertex weight outside {1..N}");

  const int size_cap = settings.size_cap < 0 ? n : settings.size_cap;
  const int weight_cap = settings.weight_cap < 0 ? 2 * n * n : settings.weight_cap;

  CountEngine engine{g, nd, s_eff, v1, w, size_cap, weight_cap, RowOps{}};
  engine.ops.words = (weight_cap + 1 + 63) / 64;
  const int top_bits = (weight_cap + 1) & 63;
  engine.ops.top_mask = top_bits == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << top_bits) - 1;

  std::vector<std::unique_ptr<CountTable>> tables(nd.nodes.size());
  if (stats) stats->per_node_entries.assign(nd.nodes.size(), 0);
  for (int t : nd.post_order()) {
    const NiceNode& node = nd.nodes[static_cast<std::size_t>(t)];
    std::unique_ptr<CountTable> table;
    switch (node.kind) {
      case NodeKind::Leaf: table = std::make_unique<CountTable>(engine.leaf(t)); break;
      case NodeKind::IntroduceVertex:
        table = std::make_unique<CountTable>(
            engine.introduce_vertex(t, *tables[static_cast<std::size_t>(node.child)]));
        break;
      case NodeKind::IntroduceEdge:
        table = std::make_unique<CountTable>(
            engine.introduce_edge(t, *tables[static_cast<std::size_t>(node.child)]));
        break;
      case NodeKind::Forget:
        table = std::make_unique<CountTable>(
            engine.forget(t, *tables[static_cast<std::size_t>(node.child)]));
        break;
      case NodeKind::Join:
        table = std::make_unique<CountTable>(
            engine.join(t, *tables[static_cast<std::size_t>(node.child)],
                        *tables[static_cast<std::size_t>(node.child2)]));
        break;
    }
    if (stats) stats->per_node_entries[static_cast<std::size_t>(t)] = table->logical_entries();
    // Children are dead weight once the parent exists.
    if (node.child >= 0) tables[static_cast<std::size_t>(node.child)].reset();
    if (node.child2 >= 0) tables[static_cast<std::size_t>(node.child2)].reset();
    tables[static_cast<std::size_t>(t)] = std::move(table);
  }
  return std::move(*tables[static_cast<std::size_t>(nd.root)]);
}

namespace {

bool decide_one_repetition(const Graph& g, const NiceDecomposition& nd, const VertexSet& s,
                           const std::vector<Vertex>& candidates, int lo,
                           const CountSettings& settings, const WeightAssignment& wa) {
  for (Vertex v1 : candidates) {
    const VertexSet s_run = s.empty() ? VertexSet{v1} : s;
    CountTable root = count_parity_tables(g, nd, s_run, v1, wa, settings);
    for (int i = lo; i <= settings.size_cap; ++i)
      for (int ww = 1; ww <= settings.weight_cap; ++ww)
        if (root.get(0, i, ww)) return true;
  }
  return false;
}

}  // namespace

bool decide_constrained_cvcp3(const Graph& g, const NiceDecomposition& nd, const VertexSet& s,
                              int k, std::uint64_t seed, int repetitions,
                              const CutCountOptions& options) {
  const int n = g.vertex_count();
  if (repetitions < 1) throw std::invalid_argument("repetitions must be positive");
  for (Vertex v : s)
    if (v < 0 || v >= n) throw std::invalid_argument("s contains a non-vertex");
  if (k < 0) return false;

  // The empty set is a valid unconstrained solution exactly when the graph
  // already has maximum degree one; connectivity is moot for it.
  if (s.empty() && is_vcp3_set(g, VertexSet{})) return true;
  if (n == 0) return false;

  const int k_eff = std::min(k, n);
  const int lo = std::max(1, s.size());
  if (k_eff < lo) return false;

  CountSettings settings;
  settings.size_cap = k_eff;
  settings.weight_cap = std::min(2 * n * n, 2 * n * k_eff);

  std::vector<Vertex> candidates;
  if (s.empty()) {
    for (Vertex v = 0; v < n; ++v) candidates.push_back(v);
  } else {
    candidates.push_back(s[0]);  // the lowest-id required vertex anchors the cut
  }

  if (options.threads <= 1) {
    for (int rep = 0; rep < repetitions; ++rep) {
      const WeightAssignment wa = draw_weights(n, stream_seed(seed, static_cast<std::uint64_t>(rep)));
      if (decide_one_repetition(g, nd, s, candidates, lo, settings, wa)) return true;
    }
    return false;
  }

  // Independent repetitions; answers are OR-combined, so scheduling cannot
  // change the result.
  for (int base = 0; base < repetitions; base += options.threads) {
    const int batch = std::min(options.threads, repetitions - base);
    std::vector<std::future<bool>> futures;
    futures.reserve(static_cast<std::size_t>(batch));
    for (int j = 0; j < batch; ++j) {
      const int rep = base + j;
      futures.push_back(std::async(std::launch::async, [&, rep] {
        const WeightAssignment wa =
            draw_weights(n, stream_seed(seed, static_cast<std::uint64_t>(rep)));
        return decide_one_repetition(g, nd, s, candidates, lo, settings, wa);
      }));
    }
    bool any = false;
    for (auto& fu : futures) any = fu.get() || any;
    if (any) return true;
  }
  return false;
}

std::optional<int> minimize_cvcp3(const Graph& g, const NiceDecomposition& nd, const VertexSet& s,
                                  std::uint64_t seed, int repetitions,
                                  const CutCountOptions& options) {
  const int n = g.vertex_count();
  if (s.empty() && is_vcp3_set(g, VertexSet{})) return 0;
  for (int k = std::max(1, s.size()); k <= n; ++k) {
    if (decide_constrained_cvcp3(g, nd, s, k, stream_seed(seed, 0x1000u + static_cast<std::uint64_t>(k)),
                                 repetitions, options))
      return k;
  }
  return std::nullopt;
}

}  // namespace vcp3
