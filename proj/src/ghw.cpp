#include "ghwlab/ghw.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "ghwlab/cyclo.hpp"
#include "ghwlab/error.hpp"
#include "ghwlab/parallel.hpp"
#include "ghwlab/subspace.hpp"

namespace ghwlab::ghw {

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::Closed: return "closed";
    case Method::Hyperplane: return "hyperplane";
    case Method::Charsum: return "charsum";
    case Method::Subcode: return "subcode";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  for (auto m : kAllMethods)
    if (to_string(m) == text) return m;
  throw Error(Errc::InconsistentParams, "unknown method '" + std::string(text) + "'");
}

std::vector<Method> parse_methods(std::string_view csv) {
  std::vector<bool> seen(std::size(kAllMethods), false);
  while (!csv.empty()) {
    const auto comma = csv.find(',');
    const auto item = csv.substr(0, comma);
    if (!item.empty()) seen[static_cast<std::size_t>(parse_method(item))] = true;
    if (comma == std::string_view::npos) break;
    csv.remove_prefix(comma + 1);
  }
  std::vector<Method> out;
  for (auto m : kAllMethods)
    if (seen[static_cast<std::size_t>(m)]) out.push_back(m);
  return out;
}

std::int64_t ghw_closed_special_branch(std::uint32_t p, unsigned m, unsigned branch, unsigned r) {
  const unsigned s = m / 2;
  if (m % 2 != 0 || r < 1 || r > m) throw Error(Errc::RankOutOfRange, "rank out of range for special mode");
  const std::int64_t pp = p;
  if (branch == 0) {
    // p^s (2p^s + 1 - p) / (p + 1) * (1 - 1/p^r), r <= s
    if (r > s) throw Error(Errc::RankOutOfRange, "first branch needs r <= s");
    const std::int64_t ps = checked_pow(p, s);
    const std::int64_t num =
        checked_mul(checked_mul(checked_pow(p, s - r), 2 * ps + 1 - pp), checked_pow(p, r) - 1);
    if (num % (pp + 1) != 0) throw Error(Errc::InconsistentParams, "closed form is not integral");
    return num / (pp + 1);
  }
  // 2(q - 1)/(p + 1) + 1 - p^{m-r}, r >= s
  if (r < s) throw Error(Errc::RankOutOfRange, "second branch needs r >= s");
  const std::int64_t q = checked_pow(p, m);
  if ((2 * (q - 1)) % (pp + 1) != 0) throw Error(Errc::InconsistentParams, "closed form is not integral");
  return 2 * (q - 1) / (pp + 1) + 1 - checked_pow(p, m - r);
}

std::int64_t ghw_closed(std::uint32_t p, unsigned m, const DModeParams& params, unsigned r) {
  if (params.mode == codes::DMode::One) {
    if (r < 1 || r + 1 > m) throw Error(Errc::RankOutOfRange, "mode one needs 1 <= r <= m-1");
    // p^{m-1} (1 - 1/p^r)
    return checked_pow(p, m - 1) - checked_pow(p, m - 1 - r);
  }
  if (p % 4 == 1) throw Error(Errc::RankOutOfRange, "the special-mode code is empty for p = 1 (mod 4)");
  const unsigned s = m / 2;
  if (r < s) return ghw_closed_special_branch(p, m, 0, r);
  if (r > s) return ghw_closed_special_branch(p, m, 1, r);
  const auto lo = ghw_closed_special_branch(p, m, 0, r);
  const auto hi = ghw_closed_special_branch(p, m, 1, r);
  if (lo != hi) throw Error(Errc::InconsistentParams, "closed-form branches disagree at r = s");
  return lo;
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) return std::numeric_limits<std::uint64_t>::max();
  return out;
}

std::uint64_t units(unsigned dim, unsigned r, std::uint32_t p) {
  try {
    return saturating_mul(subspace::gaussian_binomial(dim, r, p), static_cast<std::uint64_t>(checked_pow(p, r)));
  } catch (const Error&) {
    return std::numeric_limits<std::uint64_t>::max();
  }
}

std::vector<FqElem> unit_basis(const FieldCtx& ctx) {
  std::vector<FqElem> out;
  std::uint32_t unit = 1;
  for (unsigned i = 0; i < ctx.m(); ++i, unit *= ctx.p()) out.push_back(FqElem{unit});
  return out;
}

/// Calls visit(basis) for every subspace, spreading them round-robin over workers.
template <typename Visit>
void for_each_subspace(const FieldCtx& ctx, const std::vector<FqElem>& ambient, unsigned r, unsigned threads,
                       Visit&& visit) {
  const unsigned workers = std::max(1u, threads);
  run_workers(workers, [&](unsigned w) {
    subspace::SubspaceIter it(ctx, ambient, r);
    std::uint64_t idx = 0;
    while (it.next()) {
      if (idx++ % workers != w) continue;
      visit(w, it.basis());
    }
  });
}

}  // namespace

CodeAnalysis::CodeAnalysis(const FieldCtx& ctx, DefiningSet set, EngineOptions options)
    : ctx_(&ctx), set_(std::move(set)), options_(options) {
  summary_ = codes::summarize(ctx, set_, std::max(1u, options_.threads));
  in_set_.assign(ctx.q(), false);
  for (auto x : set_.elements) in_set_[x.packed] = true;
  if (set_.params.mode == codes::DMode::One)
    hyperplane_ambient_ = subspace::basis_of_span(ctx, set_.elements);
  else
    hyperplane_ambient_ = unit_basis(ctx);
  const auto kernel_basis = subspace::basis_of_span(ctx, summary_.kernel);
  message_complement_ = subspace::complement(ctx, kernel_basis);
  words_ = (n() + 63) / 64;
}

void CodeAnalysis::check_rank(unsigned r) const {
  if (r < 1 || r > k())
    throw Error(Errc::RankOutOfRange, "rank " + std::to_string(r) + " outside 1.." + std::to_string(k()));
}

std::uint64_t CodeAnalysis::work_units(Method method, unsigned r) const {
  const std::uint32_t p = ctx_->p();
  switch (method) {
    case Method::Closed: return 0;
    case Method::Hyperplane: {
      const unsigned dim = static_cast<unsigned>(hyperplane_ambient_.size());
      return r > dim ? 0 : units(dim, dim - r, p);
    }
    case Method::Charsum: return units(k(), r, p);
    case Method::Subcode: return units(k(), r, p);
  }
  return 0;
}

void CodeAnalysis::check_budget(Method method, unsigned r) const {
  const auto cost = work_units(method, r);
  if (cost > options_.ceiling)
    throw Error(Errc::TooLarge, std::string(to_string(method)) + " at r=" + std::to_string(r) + " needs " +
                                    std::to_string(cost) + " units, ceiling " + std::to_string(options_.ceiling));
}

void CodeAnalysis::require_injective(std::string_view method) const {
  if (summary_.kernel_dim != 0)
    throw Error(Errc::WrongMode, std::string(method) + " requires dim(C_D) = m");
}

std::int64_t CodeAnalysis::closed(unsigned r) const {
  check_rank(r);
  return ghw_closed(ctx_->p(), ctx_->m(), set_.params, r);
}

std::uint64_t CodeAnalysis::hyperplane_max_intersection(unsigned r) const {
  check_rank(r);
  if (set_.params.mode == codes::DMode::Special) require_injective("hyperplane method in special mode");
  check_budget(Method::Hyperplane, r);
  const unsigned dim = static_cast<unsigned>(hyperplane_ambient_.size());
  if (r > dim) throw Error(Errc::RankOutOfRange, "rank exceeds hyperplane ambient dimension");
  const unsigned workers = std::max(1u, options_.threads);
  std::vector<std::uint64_t> best(workers, 0);
  for_each_subspace(*ctx_, hyperplane_ambient_, dim - r, workers, [&](unsigned w, std::span<const FqElem> basis) {
    std::uint64_t hits = 0;
    for (auto x : subspace::span_members(*ctx_, basis)) hits += in_set_[x.packed];
    best[w] = std::max(best[w], hits);
  });
  return *std::max_element(best.begin(), best.end());
}

std::int64_t CodeAnalysis::hyperplane(unsigned r) const {
  return static_cast<std::int64_t>(n()) - static_cast<std::int64_t>(hyperplane_max_intersection(r));
}

const std::vector<std::int64_t>& CodeAnalysis::char_table() const {
  std::call_once(char_once_, [&] {
    char_table_.assign(ctx_->q(), 0);
    std::vector<std::int64_t> counts(ctx_->p());
    for (std::uint32_t a = 0; a < ctx_->q(); ++a) {
      std::fill(counts.begin(), counts.end(), 0);
      for (auto x : set_.elements) ++counts[ctx_->trace1(ctx_->mul(FqElem{a}, x))];
      const auto value = cyclo::cyc_from_counts(ctx_->p(), counts).as_integer();
      if (!value) throw Error(Errc::NonIntegerN, "character sum over D is not rational");
      char_table_[a] = *value;
    }
  });
  return char_table_;
}

std::int64_t CodeAnalysis::charsum(unsigned r) const {
  check_rank(r);
  check_budget(Method::Charsum, r);
  const auto& table = char_table();
  const std::int64_t pr = checked_pow(ctx_->p(), r);
  const std::int64_t len = static_cast<std::int64_t>(n());
  const unsigned workers = std::max(1u, options_.threads);
  std::vector<std::int64_t> best(workers, std::numeric_limits<std::int64_t>::min());
  for_each_subspace(*ctx_, message_complement_, r, workers, [&](unsigned w, std::span<const FqElem> basis) {
    std::int64_t total = len;
    for (auto a : subspace::span_members(*ctx_, basis))
      if (!a.is_zero()) total = checked_add(total, table[a.packed]);
    if (total < 0 || total % pr != 0)
      throw Error(Errc::NonIntegerN, "N(H_r) is not a nonnegative integer");
    best[w] = std::max(best[w], total / pr);
  });
  return len - *std::max_element(best.begin(), best.end());
}

const std::vector<std::uint64_t>& CodeAnalysis::support_table() const {
  std::call_once(support_once_, [&] {
    support_table_.assign(std::size_t{ctx_->q()} * words_, 0);
    for (std::uint32_t a = 0; a < ctx_->q(); ++a) {
      std::uint64_t* row = support_table_.data() + std::size_t{a} * words_;
      for (std::size_t i = 0; i < n(); ++i)
        if (ctx_->trace1(ctx_->mul(FqElem{a}, set_.elements[i])) != 0) row[i / 64] |= std::uint64_t{1} << (i % 64);
    }
  });
  return support_table_;
}

std::int64_t CodeAnalysis::subcode(unsigned r) const {
  check_rank(r);
  check_budget(Method::Subcode, r);
  const auto& table = support_table();
  const unsigned workers = std::max(1u, options_.threads);
  std::vector<std::int64_t> best(workers, std::numeric_limits<std::int64_t>::max());
  for_each_subspace(*ctx_, message_complement_, r, workers, [&](unsigned w, std::span<const FqElem> basis) {
    std::vector<std::uint64_t> mark(words_, 0);
    for (auto a : subspace::span_members(*ctx_, basis)) {
      if (a.is_zero()) continue;
      const std::uint64_t* row = table.data() + std::size_t{a.packed} * words_;
      for (std::size_t j = 0; j < words_; ++j) mark[j] |= row[j];
    }
    std::int64_t support = 0;
    for (auto word : mark) support += std::popcount(word);
    best[w] = std::min(best[w], support);
  });
  return *std::min_element(best.begin(), best.end());
}

std::int64_t CodeAnalysis::run(Method method, unsigned r) const {
  switch (method) {
    case Method::Closed: return closed(r);
    case Method::Hyperplane: return hyperplane(r);
    case Method::Charsum: return charsum(r);
    case Method::Subcode: return subcode(r);
  }
  return 0;
}

std::int64_t ghw_hyperplane(const FieldCtx& ctx, const DefiningSet& set, unsigned r, EngineOptions options) {
  return CodeAnalysis(ctx, set, options).hyperplane(r);
}

std::int64_t ghw_charsum(const FieldCtx& ctx, const DefiningSet& set, unsigned r, EngineOptions options) {
  return CodeAnalysis(ctx, set, options).charsum(r);
}

std::int64_t ghw_subcode_bf(const FieldCtx& ctx, const DefiningSet& set, unsigned r, EngineOptions options) {
  return CodeAnalysis(ctx, set, options).subcode(r);
}

std::optional<std::vector<std::int64_t>> GhwReport::hierarchy() const {
  for (auto method : {Method::Subcode, Method::Hyperplane, Method::Charsum, Method::Closed}) {
    if (std::find(methods.begin(), methods.end(), method) == methods.end() || infeasible.count(method)) continue;
    std::vector<std::int64_t> out;
    for (const auto& row : values) {
      auto it = row.find(method);
      if (it == row.end()) break;
      out.push_back(it->second);
    }
    if (out.size() == values.size()) return out;
  }
  return std::nullopt;
}

GhwReport compute_hierarchy(const CodeAnalysis& analysis, std::span<const Method> methods,
                            std::optional<unsigned> r_max) {
  GhwReport report;
  report.n = analysis.n();
  report.k = analysis.k();
  report.r_max = std::min(report.k, r_max.value_or(report.k));
  report.methods.assign(methods.begin(), methods.end());
  report.values.resize(report.r_max);
  report.warnings = analysis.summary().warnings;

  const auto& params = analysis.defining_set().params;
  const auto closed_nk = codes::closed_length_dim(analysis.field().p(), analysis.field().m(), params.mode);
  report.closed_advisory = !params.hypotheses_hold() || closed_nk.n != static_cast<std::int64_t>(report.n) ||
                           closed_nk.k != static_cast<std::int64_t>(report.k);

  for (auto method : methods) {
    std::uint64_t total = 0;
    try {
      for (unsigned r = 1; r <= report.r_max; ++r) {
        const auto cost = analysis.work_units(method, r);
        if (cost > analysis.options().ceiling)
          throw Error(Errc::TooLarge, std::string(to_string(method)) + " at r=" + std::to_string(r) + " needs " +
                                          std::to_string(cost) + " units, ceiling " +
                                          std::to_string(analysis.options().ceiling));
        total = (total + cost < total) ? std::numeric_limits<std::uint64_t>::max() : total + cost;
      }
      for (unsigned r = 1; r <= report.r_max; ++r) report.values[r - 1][method] = analysis.run(method, r);
      report.work_units[method] = total;
    } catch (const Error& e) {
      report.infeasible[method] = e.what();
      for (auto& row : report.values) row.erase(method);
    }
  }

  for (unsigned r = 1; r <= report.r_max; ++r) {
    const auto& row = report.values[r - 1];
    std::optional<std::int64_t> reference;
    for (const auto& [method, value] : row) {
      if (method == Method::Closed && report.closed_advisory) continue;
      if (!reference) reference = value;
      else if (*reference != value) report.agreement = false;
    }
    const auto closed = row.find(Method::Closed);
    if (report.closed_advisory && closed != row.end() && reference && *reference != closed->second)
      report.warnings.push_back("advisory closed form d_" + std::to_string(r) + "=" +
                                std::to_string(closed->second) + " differs from enumerated " +
                                std::to_string(*reference));
  }

  const std::int64_t n = static_cast<std::int64_t>(report.n), k = report.k;
  for (auto method : methods) {
    if (report.infeasible.count(method)) continue;
    std::optional<std::int64_t> prev;
    for (unsigned r = 1; r <= report.r_max; ++r) {
      const auto value = report.values[r - 1].at(method);
      const std::string tag = std::string(to_string(method)) + " d_" + std::to_string(r) + "=" + std::to_string(value);
      if (value < static_cast<std::int64_t>(r) || value > n - k + r)
        report.invariant_violations.push_back(tag + " outside [r, n-k+r]");
      if (prev && value <= *prev) report.invariant_violations.push_back(tag + " is not strictly increasing");
      prev = value;
    }
  }
  return report;
}

}  // namespace ghwlab::ghw
