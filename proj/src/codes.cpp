#include "ghwlab/codes.hpp"

#include <numeric>

#include "ghwlab/error.hpp"
#include "ghwlab/parallel.hpp"

namespace ghwlab::codes {

std::string_view to_string(DMode mode) noexcept { return mode == DMode::One ? "one" : "special"; }

DMode parse_dmode(std::string_view text) {
  if (text == "one") return DMode::One;
  if (text == "special") return DMode::Special;
  throw Error(Errc::InvalidDMode, "unknown d-mode '" + std::string(text) + "'");
}

DModeParams DModeParams::make(std::uint32_t p, unsigned m, DMode mode) {
  DModeParams out;
  out.mode = mode;
  out.flags.gcd_m_p_is_1 = std::gcd<std::uint64_t, std::uint64_t>(m, p) == 1;
  out.flags.p_mod_4 = p % 4;
  if (mode == DMode::One) {
    out.d = 1;
    return out;
  }
  if (m % 2 != 0) throw Error(Errc::InvalidDMode, "special mode requires m even");
  const std::int64_t q = checked_pow(p, m);
  out.d = static_cast<std::uint32_t>((q - 1) / (p + 1));
  out.s = m / 2;
  out.flags.s_is_odd = out.s % 2 == 1;
  return out;
}

bool DModeParams::hypotheses_hold() const noexcept {
  return flags.gcd_m_p_is_1 && (mode == DMode::One || flags.s_is_odd);
}

std::vector<std::string> DModeParams::hypothesis_warnings() const {
  std::vector<std::string> out;
  if (!flags.gcd_m_p_is_1)
    out.emplace_back("hypothesis gcd(m,p)=1 violated; closed-form values are advisory");
  if (mode == DMode::Special && !flags.s_is_odd)
    out.emplace_back("hypothesis s=m/2 odd violated; closed-form values are advisory");
  return out;
}

DefiningSet build_defining_set(const FieldCtx& ctx, const DModeParams& params) {
  if (params.mode == DMode::Special &&
      (ctx.m() % 2 != 0 || std::uint64_t{params.d} * (ctx.p() + 1) != ctx.order()))
    throw Error(Errc::InvalidDMode, "special mode requires d (p+1) = q-1");
  if (params.mode == DMode::One && params.d != 1) throw Error(Errc::InvalidDMode, "mode one requires d = 1");

  DefiningSet out;
  out.params = params;
  const std::uint64_t order = ctx.order();
  for (std::uint64_t k = 0; k < order; ++k)
    if (ctx.trace1(ctx.exp(k * params.d % order)) == 0) out.elements.push_back(ctx.exp(k));
  return out;
}

std::vector<std::uint32_t> codeword(const FieldCtx& ctx, const DefiningSet& set, FqElem a) {
  std::vector<std::uint32_t> out;
  out.reserve(set.size());
  for (auto x : set.elements) out.push_back(ctx.trace1(ctx.mul(a, x)));
  return out;
}

std::uint32_t codeword_weight(const FieldCtx& ctx, const DefiningSet& set, FqElem a) {
  std::uint32_t w = 0;
  for (auto x : set.elements) w += ctx.trace1(ctx.mul(a, x)) != 0;
  return w;
}

ClosedLengthDim closed_length_dim(std::uint32_t p, unsigned m, DMode mode) {
  if (mode == DMode::One) return {checked_pow(p, m - 1) - 1, static_cast<std::int64_t>(m) - 1};
  if (p % 4 == 1) return {0, 0};
  const std::int64_t q = checked_pow(p, m);
  return {2 * (q - 1) / (p + 1), static_cast<std::int64_t>(m)};
}

std::vector<std::int64_t> closed_nonzero_weights(std::uint32_t p, unsigned m, DMode mode) {
  if (mode == DMode::One) {
    if (m < 2) return {};
    return {checked_pow(p, m - 1) - checked_pow(p, m - 2)};
  }
  if (p % 4 == 1 || m % 2 != 0) return {};
  const unsigned s = m / 2;
  const std::int64_t ps = checked_pow(p, s);
  const std::int64_t ps1 = checked_pow(p, s - 1);
  const std::int64_t num1 = checked_mul(checked_mul(ps1, 2 * ps - p + 1), p - 1);
  const std::int64_t num2 = checked_mul(checked_mul(2 * ps1, ps + 1), p - 1);
  std::vector<std::int64_t> out;
  if (num1 % (p + 1) == 0) out.push_back(num1 / (p + 1));
  if (num2 % (p + 1) == 0) out.push_back(num2 / (p + 1));
  return out;
}

std::optional<std::uint32_t> CodeSummary::min_nonzero_weight() const {
  for (const auto& [w, count] : weight_distribution)
    if (w != 0 && count > 0) return w;
  return std::nullopt;
}

CodeSummary summarize(const FieldCtx& ctx, const DefiningSet& set, unsigned threads) {
  CodeSummary out;
  out.n = set.size();
  std::vector<std::uint32_t> weights(ctx.q());
  run_workers(threads, [&](unsigned w) {
    const unsigned stride = threads ? threads : 1;
    for (std::uint32_t a = w; a < ctx.q(); a += stride) weights[a] = codeword_weight(ctx, set, FqElem{a});
  });
  for (std::uint32_t a = 0; a < ctx.q(); ++a) {
    ++out.weight_distribution[weights[a]];
    if (weights[a] == 0) out.kernel.push_back(FqElem{a});
  }
  std::uint64_t kernel_size = out.kernel.size();
  while (kernel_size > 1) {
    kernel_size /= ctx.p();
    ++out.kernel_dim;
  }
  out.k = ctx.m() - out.kernel_dim;

  out.warnings = set.params.hypothesis_warnings();
  const auto closed = closed_length_dim(ctx.p(), ctx.m(), set.params.mode);
  if (closed.n != static_cast<std::int64_t>(out.n))
    out.warnings.push_back("length n=" + std::to_string(out.n) + " differs from closed form " +
                           std::to_string(closed.n));
  if (closed.k != static_cast<std::int64_t>(out.k))
    out.warnings.push_back("dimension k=" + std::to_string(out.k) + " differs from closed form " +
                           std::to_string(closed.k));
  return out;
}

}  // namespace ghwlab::codes
