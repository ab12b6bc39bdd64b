#include "vcp3/subset_convolution.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace vcp3 {

namespace {

// Prime just above 2^40; larger than 3^24, the most pairs any transform
// entry can accumulate at the maximum ground size.
constexpr std::uint64_t kPrime = 1099511627791ull;

void check_pair(const SetFunction& g, const SetFunction& h) {
  if (g.ground_size != h.ground_size)
    throw std::invalid_argument("subset convolution: ground size mismatch (" +
                                std::to_string(g.ground_size) + " vs " +
                                std::to_string(h.ground_size) + ")");
  if (g.ground_size < 0 || g.ground_size > 24)
    throw std::invalid_argument("subset convolution: ground size out of [0, 24]");
  if (g.values.size() != (std::size_t{1} << g.ground_size) ||
      h.values.size() != (std::size_t{1} << h.ground_size))
    throw std::invalid_argument("subset convolution: value array length mismatch");
}

}  // namespace

SetFunction SetFunction::infinite(int ground_size) {
  SetFunction f;
  f.ground_size = ground_size;
  f.values.assign(std::size_t{1} << ground_size, kInf);
  return f;
}

SetFunction convolve_naive(const SetFunction& g, const SetFunction& h) {
  check_pair(g, h);
  SetFunction out = SetFunction::infinite(g.ground_size);
  const std::uint32_t full = static_cast<std::uint32_t>(out.size()) - 1;
  for (std::uint32_t y = 0; y <= full; ++y) {
    std::int32_t best = kInf;
    // Submasks of y in ascending order, including 0 and y itself.
    std::uint32_t a = 0;
    while (true) {
      std::int32_t cand = sat_add(g.values[a], h.values[y & ~a]);
      if (cand < best) best = cand;
      if (a == y) break;
      a = (a - y) & y;
    }
    out.values[y] = best;
  }
  return out;
}

SetFunction convolve_fast(const SetFunction& g, const SetFunction& h, int value_bound) {
  check_pair(g, h);
  if (value_bound < 0) throw std::invalid_argument("subset convolution: negative value bound");
  for (const SetFunction* f : {&g, &h}) {
    for (std::int32_t v : f->values) {
      if (v != kInf && (v < 0 || v > value_bound))
        throw std::invalid_argument("subset convolution: value " + std::to_string(v) +
                                    " outside {0.." + std::to_string(value_bound) + "} u {inf}");
    }
  }

  const int s = g.ground_size;
  const std::size_t masks = std::size_t{1} << s;
  const int in_deg = value_bound + 1;       // input polynomials
  const int out_deg = 2 * value_bound + 1;  // product polynomials

  // Ranked zeta transform of both inputs: zg[(k * masks + m) * in_deg + d]
  // accumulates, over subsets A of m with |A| = k, the monomials x^{g(A)}.
  auto ranked_zeta = [&](const SetFunction& f) {
    std::vector<std::uint64_t> z(static_cast<std::size_t>(s + 1) * masks * in_deg, 0);
    for (std::size_t m = 0; m < masks; ++m) {
      if (f.values[m] == kInf) continue;
      std::size_t k = static_cast<std::size_t>(std::popcount(m));
      z[(k * masks + m) * in_deg + static_cast<std::size_t>(f.values[m])] = 1;
    }
    for (std::size_t k = 0; k <= static_cast<std::size_t>(s); ++k) {
      for (int bit = 0; bit < s; ++bit) {
        for (std::size_t m = 0; m < masks; ++m) {
          if (!(m >> bit & 1)) continue;
          std::uint64_t* dst = &z[(k * masks + m) * in_deg];
          const std::uint64_t* src = &z[(k * masks + (m ^ (std::size_t{1} << bit))) * in_deg];
          for (int d = 0; d < in_deg; ++d) {
            dst[d] += src[d];
            if (dst[d] >= kPrime) dst[d] -= kPrime;
          }
        }
      }
    }
    return z;
  };
  const auto zg = ranked_zeta(g);
  const auto zh = ranked_zeta(h);

  // Pointwise ranked products Q[k][m] = sum_{j} zg[j][m] * zh[k-j][m].
  std::vector<std::uint64_t> q(static_cast<std::size_t>(s + 1) * masks * out_deg, 0);
  std::vector<unsigned __int128> acc(static_cast<std::size_t>(out_deg));
  for (std::size_t m = 0; m < masks; ++m) {
    const int pc = std::popcount(m);
    for (int k = 0; k <= s; ++k) {
      std::fill(acc.begin(), acc.end(), 0);
      bool any = false;
      for (int j = std::max(0, k - pc); j <= std::min(k, pc); ++j) {
        const std::uint64_t* a = &zg[(static_cast<std::size_t>(j) * masks + m) * in_deg];
        const std::uint64_t* bptr = &zh[(static_cast<std::size_t>(k - j) * masks + m) * in_deg];
        for (int da = 0; da < in_deg; ++da) {
          if (a[da] == 0) continue;
          any = true;
          for (int db = 0; db < in_deg; ++db) {
            if (bptr[db] != 0) acc[static_cast<std::size_t>(da + db)] += static_cast<unsigned __int128>(a[da]) * bptr[db];
          }
        }
      }
      if (!any) continue;
      std::uint64_t* dst = &q[(static_cast<std::size_t>(k) * masks + m) * out_deg];
      for (int d = 0; d < out_deg; ++d) dst[d] = static_cast<std::uint64_t>(acc[static_cast<std::size_t>(d)] % kPrime);
    }
  }

  // Moebius inversion per rank, then read each Y at rank |Y|.
  for (int k = 0; k <= s; ++k) {
    for (int bit = 0; bit < s; ++bit) {
      for (std::size_t m = 0; m < masks; ++m) {
        if (!(m >> bit & 1)) continue;
        std::uint64_t* dst = &q[(static_cast<std::size_t>(k) * masks + m) * out_deg];
        const std::uint64_t* src =
            &q[(static_cast<std::size_t>(k) * masks + (m ^ (std::size_t{1} << bit))) * out_deg];
        for (int d = 0; d < out_deg; ++d) {
          dst[d] = dst[d] >= src[d] ? dst[d] - src[d] : dst[d] + kPrime - src[d];
        }
      }
    }
  }

  SetFunction out = SetFunction::infinite(s);
  for (std::size_t m = 0; m < masks; ++m) {
    const std::size_t k = static_cast<std::size_t>(std::popcount(m));
    const std::uint64_t* poly = &q[(k * masks + m) * out_deg];
    for (int d = 0; d < out_deg; ++d) {
      if (poly[d] != 0) {
        out.values[m] = d;
        break;
      }
    }
  }
  return out;
}

}  // namespace vcp3
