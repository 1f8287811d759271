#pragma once

// Weight hierarchy d_1..d_k of a defining-set code by four routes:
//   closed      closed-form values for the two families
//   hyperplane  n - max |D cap H| over subspaces H of codimension r
//   charsum     n - max N(H_r), N(H_r) = (n + Sum_{a in H_r^*} Sum_{x in D} chi(a x)) / p^r,
//               H_r ranging over r-subspaces that meet the kernel of a -> c(a) trivially
//   subcode     min |Supp(U)| over r-dimensional subcodes, by enumeration

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ghwlab/codes.hpp"
#include "ghwlab/gf.hpp"

namespace ghwlab::ghw {

using codes::CodeSummary;
using codes::DefiningSet;
using codes::DModeParams;
using gf::FieldCtx;
using gf::FqElem;

enum class Method { Closed, Hyperplane, Charsum, Subcode };

inline constexpr Method kAllMethods[] = {Method::Closed, Method::Hyperplane, Method::Charsum, Method::Subcode};

std::string_view to_string(Method method) noexcept;
/// Throws InconsistentParams on an unknown name.
Method parse_method(std::string_view text);
/// Parses a comma-separated list, keeping canonical order and dropping duplicates.
std::vector<Method> parse_methods(std::string_view csv);

/// Default cap on (subspace count x per-subspace cost) work units.
inline constexpr std::uint64_t kDefaultCeiling = 10'000'000;

struct EngineOptions {
  std::uint64_t ceiling = kDefaultCeiling;
  unsigned threads = 1;
};

/// Closed-form d_r for the family. Special mode evaluates both branches at
/// r = s and throws InconsistentParams if they differ or a value is not integral.
std::int64_t ghw_closed(std::uint32_t p, unsigned m, const DModeParams& params, unsigned r);
/// Special-mode branch values: branch 0 holds for r <= s, branch 1 for r >= s.
std::int64_t ghw_closed_special_branch(std::uint32_t p, unsigned m, unsigned branch, unsigned r);

/// Shared state for the enumeration methods on one code.
class CodeAnalysis {
 public:
  CodeAnalysis(const FieldCtx& ctx, DefiningSet set, EngineOptions options = {});

  const FieldCtx& field() const noexcept { return *ctx_; }
  const DefiningSet& defining_set() const noexcept { return set_; }
  const CodeSummary& summary() const noexcept { return summary_; }
  const EngineOptions& options() const noexcept { return options_; }
  std::size_t n() const noexcept { return set_.size(); }
  unsigned k() const noexcept { return summary_.k; }

  std::int64_t closed(unsigned r) const;
  std::int64_t hyperplane(unsigned r) const;
  std::int64_t charsum(unsigned r) const;
  std::int64_t subcode(unsigned r) const;
  std::int64_t run(Method method, unsigned r) const;

  /// Work units the method needs for rank r (0 for closed).
  std::uint64_t work_units(Method method, unsigned r) const;
  /// max |D cap H| over the subspaces the hyperplane method ranges over.
  std::uint64_t hyperplane_max_intersection(unsigned r) const;
  /// Ambient space for the hyperplane method: the trace-zero hyperplane in
  /// mode one, all of F_q in special mode.
  const std::vector<FqElem>& hyperplane_ambient() const noexcept { return hyperplane_ambient_; }
  /// Complement of the kernel of a -> c(a); subcode and charsum range over its subspaces.
  const std::vector<FqElem>& message_complement() const noexcept { return message_complement_; }

 private:
  void check_rank(unsigned r) const;
  void check_budget(Method method, unsigned r) const;
  void require_injective(std::string_view method) const;
  const std::vector<std::int64_t>& char_table() const;
  const std::vector<std::uint64_t>& support_table() const;

  const FieldCtx* ctx_;
  DefiningSet set_;
  EngineOptions options_;
  CodeSummary summary_;
  std::vector<bool> in_set_;
  std::vector<FqElem> hyperplane_ambient_;
  std::vector<FqElem> message_complement_;
  std::size_t words_ = 0;

  mutable std::once_flag char_once_, support_once_;
  mutable std::vector<std::int64_t> char_table_;     // Sum_{x in D} chi(a x), per packed a
  mutable std::vector<std::uint64_t> support_table_; // support bitset of c(a), per packed a
};

std::int64_t ghw_hyperplane(const FieldCtx& ctx, const DefiningSet& set, unsigned r, EngineOptions options = {});
std::int64_t ghw_charsum(const FieldCtx& ctx, const DefiningSet& set, unsigned r, EngineOptions options = {});
std::int64_t ghw_subcode_bf(const FieldCtx& ctx, const DefiningSet& set, unsigned r, EngineOptions options = {});

struct GhwReport {
  std::size_t n = 0;
  unsigned k = 0;
  unsigned r_max = 0;
  std::vector<Method> methods;
  /// values[r-1][method]
  std::vector<std::map<Method, std::int64_t>> values;
  /// method -> reason it could not run (TooLarge, WrongMode, ...)
  std::map<Method, std::string> infeasible;
  std::map<Method, std::uint64_t> work_units;
  /// Closed-form values are excluded from the agreement check when the
  /// family's hypotheses fail or its length/dimension claims do not hold.
  bool closed_advisory = false;
  bool agreement = true;
  std::vector<std::string> invariant_violations;
  std::vector<std::string> warnings;

  /// Hierarchy from the most authoritative method that produced every value:
  /// subcode, hyperplane, charsum, then closed.
  std::optional<std::vector<std::int64_t>> hierarchy() const;
};

GhwReport compute_hierarchy(const CodeAnalysis& analysis, std::span<const Method> methods,
                            std::optional<unsigned> r_max = std::nullopt);

}  // namespace ghwlab::ghw
