#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vcp3/graph.hpp"
#include "vcp3/nice_decomposition.hpp"

namespace vcp3 {

/// States of the connected-cover parity DP: in the cover on cut side one or
/// two, or outside the cover with degree zero / degree one so far.
enum Color4 : int { kCover1 = 0, kCover2 = 1, kOutIsolated = 2, kOutDegreeOne = 3 };

namespace coloring4 {

constexpr std::uint32_t pow4(int e) { return std::uint32_t{1} << (2 * e); }

inline int digit(std::uint32_t index, int pos) { return static_cast<int>(index >> (2 * pos) & 3); }

inline std::uint32_t set_digit(std::uint32_t index, int pos, int value) {
  return (index & ~(std::uint32_t{3} << (2 * pos))) |
         (static_cast<std::uint32_t>(value) << (2 * pos));
}

inline std::uint32_t insert_digit(std::uint32_t index, int pos, int value) {
  const std::uint32_t low = index & (pow4(pos) - 1);
  const std::uint32_t high = index >> (2 * pos);
  return low | (static_cast<std::uint32_t>(value) << (2 * pos)) | (high << (2 * (pos + 1)));
}

inline std::uint32_t remove_digit(std::uint32_t index, int pos) {
  const std::uint32_t low = index & (pow4(pos) - 1);
  const std::uint32_t high = index >> (2 * (pos + 1));
  return low | (high << (2 * pos));
}

}  // namespace coloring4

/// Random vertex weights in {1..2n}; drawn via the documented stream-seed
/// discipline so identical seeds give identical weights on every platform.
struct WeightAssignment {
  std::vector<int> weights;
  int range = 0;  // N = 2n

  int of(Vertex v) const { return weights[static_cast<std::size_t>(v)]; }
};

WeightAssignment draw_weights(int vertex_count, std::uint64_t weight_seed);

/// Parity table of one node: bit (f, i, w) holds, modulo two, the number of
/// (candidate set, consistent cut) pairs of size i and weight w behaving on
/// the bag as coloring f prescribes. Rows over w are packed into words.
class CountTable {
 public:
  CountTable(int node, int bag_size, int size_cap, int weight_cap);

  int node() const { return node_; }
  int bag_size() const { return bag_size_; }
  int size_cap() const { return size_cap_; }
  int weight_cap() const { return weight_cap_; }
  int words_per_row() const { return words_; }
  std::uint32_t coloring_count() const { return coloring4::pow4(bag_size_); }

  std::uint64_t* row(std::uint32_t f, int i) {
    return bits_.data() + (static_cast<std::size_t>(f) * (size_cap_ + 1) + static_cast<std::size_t>(i)) * words_;
  }
  const std::uint64_t* row(std::uint32_t f, int i) const {
    return bits_.data() + (static_cast<std::size_t>(f) * (size_cap_ + 1) + static_cast<std::size_t>(i)) * words_;
  }

  bool get(std::uint32_t f, int i, int w) const {
    return row(f, i)[w >> 6] >> (w & 63) & 1;
  }
  void flip(std::uint32_t f, int i, int w) { row(f, i)[w >> 6] ^= std::uint64_t{1} << (w & 63); }

  /// Logical entry count (i, w, f), independent of the packing.
  std::size_t logical_entries() const {
    return static_cast<std::size_t>(size_cap_ + 1) * static_cast<std::size_t>(weight_cap_ + 1) *
           coloring_count();
  }

 private:
  int node_;
  int bag_size_;
  int size_cap_;
  int weight_cap_;
  int words_;
  std::vector<std::uint64_t> bits_;
};

/// Caps on the tracked solution size and weight. Defaults cover the full
/// domain (i <= n, w <= 2n^2); deciding for a specific k only needs
/// i <= k and w <= 2nk, which no reachable entry can exceed.
struct CountSettings {
  int size_cap = -1;    // -1: use n
  int weight_cap = -1;  // -1: use 2n^2
};

struct CountStats {
  std::vector<std::size_t> per_node_entries;  // logical dims, indexed by node id
};

/// Bottom-up parity tables over the decomposition; returns the root table.
/// Child tables are released as soon as their parent is computed. The set
/// s lists vertices required in every solution; v1 is the vertex pinned to
/// cut side one (when s is empty the caller iterates v1 and passes {v1}).
CountTable count_parity_tables(const Graph& g, const NiceDecomposition& nd, const VertexSet& s,
                               Vertex v1, const WeightAssignment& w,
                               const CountSettings& settings = {}, CountStats* stats = nullptr);

struct CutCountOptions {
  int threads = 1;  // repetitions evaluated concurrently when > 1
};

/// One-sided Monte Carlo decision: YES answers are always correct (an odd
/// root parity certifies a connected cover of size <= k containing s); NO
/// answers are wrong with probability at most 2^-repetitions.
bool decide_constrained_cvcp3(const Graph& g, const NiceDecomposition& nd, const VertexSet& s,
                              int k, std::uint64_t seed, int repetitions,
                              const CutCountOptions& options = {});

/// Smallest k answered YES, scanning upward; nullopt when every k up to n
/// is answered NO (no connected cover containing s exists, up to the
/// decision procedure's one-sided error).
std::optional<int> minimize_cvcp3(const Graph& g, const NiceDecomposition& nd, const VertexSet& s,
                                  std::uint64_t seed, int repetitions,
                                  const CutCountOptions& options = {});

}  // namespace vcp3
