#pragma once

// Defining-set codes C_D = {(Tr(a x))_{x in D} : a in F_q} for
// D = {x != 0 : Tr(x^d) = 0}, d = 1 or (q-1)/(p+1).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ghwlab/gf.hpp"

namespace ghwlab::codes {

using gf::FieldCtx;
using gf::FqElem;

enum class DMode { One, Special };

std::string_view to_string(DMode mode) noexcept;
/// Accepts "one" and "special"; throws InvalidDMode otherwise.
DMode parse_dmode(std::string_view text);

struct HypothesisFlags {
  bool gcd_m_p_is_1 = true;
  bool s_is_odd = true;  // only meaningful in special mode
  std::uint32_t p_mod_4 = 0;
};

struct DModeParams {
  DMode mode = DMode::One;
  std::uint32_t d = 1;
  unsigned s = 0;  // m/2 in special mode
  HypothesisFlags flags;

  /// Special mode requires m even; throws InvalidDMode otherwise.
  static DModeParams make(std::uint32_t p, unsigned m, DMode mode);
  bool hypotheses_hold() const noexcept;
  std::vector<std::string> hypothesis_warnings() const;
};

struct DefiningSet {
  std::vector<FqElem> elements;  // ascending dlog
  DModeParams params;

  std::size_t size() const noexcept { return elements.size(); }
};

DefiningSet build_defining_set(const FieldCtx& ctx, const DModeParams& params);

/// (Tr(a x))_{x in D}.
std::vector<std::uint32_t> codeword(const FieldCtx& ctx, const DefiningSet& set, FqElem a);
std::uint32_t codeword_weight(const FieldCtx& ctx, const DefiningSet& set, FqElem a);

/// Length and dimension claimed for the family in closed form.
struct ClosedLengthDim {
  std::int64_t n = 0;
  std::int64_t k = 0;
};
ClosedLengthDim closed_length_dim(std::uint32_t p, unsigned m, DMode mode);

/// Nonzero weights the family is claimed to take (one value for d = 1, two
/// for the special mode when p = 3 mod 4, none for the empty code).
std::vector<std::int64_t> closed_nonzero_weights(std::uint32_t p, unsigned m, DMode mode);

struct CodeSummary {
  std::size_t n = 0;
  unsigned k = 0;
  unsigned kernel_dim = 0;
  std::map<std::uint32_t, std::uint64_t> weight_distribution;
  std::vector<FqElem> kernel;  // all a with c(a) = 0
  std::vector<std::string> warnings;

  std::optional<std::uint32_t> min_nonzero_weight() const;
};

/// Sweeps all q messages. Length and dimension are checked against the
/// closed forms; a mismatch or a failed hypothesis becomes a warning.
CodeSummary summarize(const FieldCtx& ctx, const DefiningSet& set, unsigned threads = 1);

}  // namespace ghwlab::codes
