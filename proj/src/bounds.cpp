#include "ghwlab/bounds.hpp"

#include "ghwlab/error.hpp"

namespace ghwlab::bounds {

std::int64_t plotkin_like(std::int64_t n, unsigned k, std::uint32_t p, unsigned r) {
  const std::int64_t num = checked_mul(checked_mul(n, checked_pow(p, r) - 1), checked_pow(p, k - r));
  return num / (checked_pow(p, k) - 1);
}

std::int64_t griesmer_like(std::int64_t d1, std::uint32_t p, unsigned r) {
  std::int64_t sum = 0;
  for (unsigned i = 0; i < r; ++i) {
    const std::int64_t den = checked_pow(p, i);
    sum = checked_add(sum, (d1 + den - 1) / den);
  }
  return sum;
}

BoundReport evaluate_bounds(std::int64_t n, unsigned k, std::uint32_t p, std::span<const std::int64_t> hierarchy) {
  BoundReport out;
  out.n = n;
  out.k = k;
  out.p = p;
  if (k == 0) {
    out.degenerate = true;
    return out;
  }
  if (hierarchy.size() > k) throw Error(Errc::BoundViolation, "hierarchy longer than k");
  for (unsigned r = 1; r <= hierarchy.size(); ++r) {
    RankBounds b;
    b.r = r;
    b.d = hierarchy[r - 1];
    b.singleton_lower = r;
    b.singleton_upper = n - k + r;
    if (b.d < b.singleton_lower || b.d > b.singleton_upper)
      throw Error(Errc::BoundViolation, "d_" + std::to_string(r) + "=" + std::to_string(b.d) +
                                            " outside the Singleton range [" + std::to_string(b.singleton_lower) +
                                            ", " + std::to_string(b.singleton_upper) + "]");
    if (r > 1 && b.d <= hierarchy[r - 2])
      throw Error(Errc::BoundViolation, "hierarchy is not strictly increasing at r=" + std::to_string(r));
    b.plotkin = plotkin_like(n, k, p, r);
    b.griesmer = griesmer_like(hierarchy[0], p, r);
    b.plotkin_holds = b.d <= b.plotkin;
    b.griesmer_holds = b.d >= b.griesmer;
    b.meets_plotkin = b.d == b.plotkin;
    b.meets_griesmer = b.d == b.griesmer;
    b.is_r_mds = b.d == b.singleton_upper;
    if (b.is_r_mds) out.mds_ranks.push_back(r);
    out.ranks.push_back(b);
  }
  return out;
}

}  // namespace ghwlab::bounds
