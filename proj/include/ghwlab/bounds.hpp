#pragma once

// Singleton-type, Plotkin-like and Griesmer-like bounds on a weight hierarchy.

#include <cstdint>
#include <span>
#include <vector>

namespace ghwlab::bounds {

struct RankBounds {
  unsigned r = 0;
  std::int64_t d = 0;
  std::int64_t singleton_lower = 0;  // r
  std::int64_t singleton_upper = 0;  // n - k + r
  std::int64_t plotkin = 0;          // floor(n (p^r - 1) p^{k-r} / (p^k - 1))
  std::int64_t griesmer = 0;         // Sum_{i<r} ceil(d_1 / p^i)
  bool plotkin_holds = false;
  bool griesmer_holds = false;
  bool meets_plotkin = false;
  bool meets_griesmer = false;
  bool is_r_mds = false;
};

struct BoundReport {
  std::int64_t n = 0;
  unsigned k = 0;
  std::uint32_t p = 0;
  /// k = 0: the code is {0} and there is nothing to bound.
  bool degenerate = false;
  std::vector<RankBounds> ranks;
  /// {r : d_r = n - k + r}
  std::vector<unsigned> mds_ranks;
};

std::int64_t plotkin_like(std::int64_t n, unsigned k, std::uint32_t p, unsigned r);
std::int64_t griesmer_like(std::int64_t d1, std::uint32_t p, unsigned r);

/// `hierarchy` holds d_1..d_t for some t <= k. Throws BoundViolation when it
/// leaves [r, n-k+r] or is not strictly increasing.
BoundReport evaluate_bounds(std::int64_t n, unsigned k, std::uint32_t p, std::span<const std::int64_t> hierarchy);

}  // namespace ghwlab::bounds
