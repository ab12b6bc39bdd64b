#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace vcp3 {

/// Sentinel for "no feasible value". Saturating under addition, identity
/// of min; kept far below INT32_MAX so that sums of two finite values plus
/// slack never wander into the sentinel range.
inline constexpr std::int32_t kInf = std::numeric_limits<std::int32_t>::max() / 4;

inline std::int32_t sat_add(std::int32_t a, std::int32_t b) {
  if (a >= kInf || b >= kInf) return kInf;
  return a + b;
}

/// Function from subsets of a ground set (|S| <= 24) to values; values[mask]
/// holds f(mask), with kInf marking undefined entries.
struct SetFunction {
  int ground_size = 0;
  std::vector<std::int32_t> values;  // length 2^ground_size

  static SetFunction infinite(int ground_size);
  std::size_t size() const { return values.size(); }
};

/// Min-plus subset convolution by direct enumeration of all disjoint pairs
/// (A, B) with A u B = Y: the permanent reference implementation. Handles
/// the full value range including negatives. O(3^|S|).
SetFunction convolve_naive(const SetFunction& g, const SetFunction& h);

/// Same result for inputs whose finite values lie in {0..value_bound},
/// computed via ranked zeta/Moebius transforms over a polynomial ring:
/// a finite value v becomes the monomial x^v, kInf becomes the zero
/// polynomial, coefficients live modulo a prime exceeding the number of
/// contributing (A, B) pairs so a nonzero pair count never vanishes, and
/// the result at Y is the least degree with a nonzero coefficient.
SetFunction convolve_fast(const SetFunction& g, const SetFunction& h, int value_bound);

}  // namespace vcp3
