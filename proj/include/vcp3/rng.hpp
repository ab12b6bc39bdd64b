#pragma once

#include <cstdint>
#include <random>

namespace vcp3 {

/// splitmix64 finalizer; the basis of all stream-seed derivation.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Independent sub-stream seed for (base_seed, stream_index). Every random
/// draw in the project flows through std::mt19937_64 seeded this way, and
/// integers in [0, m) are taken as `gen() % m` -- both steps are bit-exact
/// across platforms, so identical seeds reproduce identical runs anywhere.
inline std::uint64_t stream_seed(std::uint64_t base_seed, std::uint64_t stream_index) {
  return splitmix64(base_seed ^ splitmix64(stream_index + 1));
}

/// Uniform draw from [0, bound) without implementation-defined behavior
/// (std::uniform_int_distribution is not portable across standard
/// libraries). The modulo bias is below 2^-40 for every bound we use.
inline std::uint64_t draw_below(std::mt19937_64& gen, std::uint64_t bound) {
  return gen() % bound;
}

}  // namespace vcp3
