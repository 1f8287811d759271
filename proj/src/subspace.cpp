#include "ghwlab/subspace.hpp"

#include "ghwlab/error.hpp"

namespace ghwlab::subspace {

std::uint64_t gaussian_binomial(unsigned m, unsigned r, std::uint32_t p) {
  if (r > m) return 0;
  // [m, i+1] = [m, i] (p^{m-i} - 1) / (p^{i+1} - 1), exact at every step.
  unsigned __int128 result = 1;
  for (unsigned i = 0; i < r; ++i) {
    const unsigned __int128 num = static_cast<unsigned __int128>(checked_pow(p, m - i)) - 1;
    const unsigned __int128 den = static_cast<unsigned __int128>(checked_pow(p, i + 1)) - 1;
    result = result * num / den;
    if (result > static_cast<unsigned __int128>(INT64_MAX)) throw Error(Errc::Overflow, "Gaussian binomial overflow");
  }
  return static_cast<std::uint64_t>(result);
}

std::vector<std::uint32_t> EchelonBasis::reduce(std::vector<std::uint32_t> v) const {
  const std::uint32_t p = ctx_->p();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::uint32_t c = v[pivot_[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      v[j] = static_cast<std::uint32_t>((v[j] + std::uint64_t{p - c} * rows_[i][j]) % p);
  }
  return v;
}

bool EchelonBasis::contains(FqElem x) const {
  const auto v = reduce(ctx_->coeffs(x));
  for (auto c : v)
    if (c) return false;
  return true;
}

bool EchelonBasis::insert(FqElem x) {
  auto v = reduce(ctx_->coeffs(x));
  unsigned lead = 0;
  while (lead < v.size() && v[lead] == 0) ++lead;
  if (lead == v.size()) return false;
  const std::uint32_t p = ctx_->p();
  // inverse of the leading coefficient by Fermat
  std::uint64_t inv = 1, base = v[lead];
  for (std::uint64_t e = p - 2; e; e >>= 1) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
  }
  for (auto& c : v) c = static_cast<std::uint32_t>(c * inv % p);
  rows_.push_back(std::move(v));
  pivot_.push_back(lead);
  inserted_.push_back(x);
  return true;
}

std::vector<FqElem> basis_of_span(const FieldCtx& ctx, std::span<const FqElem> elements) {
  EchelonBasis eb(ctx);
  for (auto x : elements) {
    eb.insert(x);
    if (eb.dim() == ctx.m()) break;
  }
  return eb.basis();
}

std::vector<FqElem> complement(const FieldCtx& ctx, std::span<const FqElem> basis) {
  EchelonBasis eb(ctx);
  for (auto x : basis) eb.insert(x);
  std::vector<FqElem> added;
  std::uint32_t unit = 1;
  for (unsigned i = 0; i < ctx.m(); ++i, unit *= ctx.p())
    if (eb.insert(FqElem{unit})) added.push_back(FqElem{unit});
  return added;
}

std::vector<FqElem> span_members(const FieldCtx& ctx, std::span<const FqElem> basis) {
  std::vector<FqElem> out{ctx.zero()};
  for (auto b : basis) {
    const std::size_t prev = out.size();
    out.reserve(prev * ctx.p());
    FqElem step = b;
    for (std::uint32_t c = 1; c < ctx.p(); ++c) {
      for (std::size_t i = 0; i < prev; ++i) out.push_back(ctx.add(out[i], step));
      step = ctx.add(step, b);
    }
  }
  return out;
}

SubspaceIter::SubspaceIter(const FieldCtx& ctx, std::vector<FqElem> ambient, unsigned r)
    : ctx_(&ctx), ambient_(std::move(ambient)), r_(r) {
  if (r_ > ambient_.size())
    throw Error(Errc::RankOutOfRange, "subspace rank " + std::to_string(r_) + " exceeds ambient dimension " +
                                          std::to_string(ambient_.size()));
}

void SubspaceIter::reset_free() {
  free_cells_.clear();
  std::vector<bool> is_pivot(dim(), false);
  for (auto c : pivots_) is_pivot[c] = true;
  rows_.assign(r_, std::vector<std::uint32_t>(dim(), 0));
  for (unsigned i = 0; i < r_; ++i) {
    rows_[i][pivots_[i]] = 1;
    for (unsigned c = pivots_[i] + 1; c < dim(); ++c)
      if (!is_pivot[c]) free_cells_.emplace_back(i, c);
  }
}

bool SubspaceIter::advance_free() {
  for (auto [i, c] : free_cells_) {
    if (++rows_[i][c] < ctx_->p()) return true;
    rows_[i][c] = 0;
  }
  return false;
}

bool SubspaceIter::advance_pivots() {
  // next r-combination of [0, dim) in lexicographic order
  const unsigned n = dim();
  for (unsigned i = r_; i-- > 0;) {
    if (pivots_[i] < n - r_ + i) {
      ++pivots_[i];
      for (unsigned j = i + 1; j < r_; ++j) pivots_[j] = pivots_[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void SubspaceIter::materialize() {
  current_.assign(r_, ctx_->zero());
  for (unsigned i = 0; i < r_; ++i)
    for (unsigned c = 0; c < dim(); ++c)
      if (rows_[i][c]) current_[i] = ctx_->add(current_[i], ctx_->scale(ambient_[c], rows_[i][c]));
}

bool SubspaceIter::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    pivots_.resize(r_);
    for (unsigned i = 0; i < r_; ++i) pivots_[i] = i;
    reset_free();
    materialize();
    return true;
  }
  if (advance_free()) {
    materialize();
    return true;
  }
  if (advance_pivots()) {
    reset_free();
    materialize();
    return true;
  }
  done_ = true;
  return false;
}

SubspaceIter enumerate_subspaces(const FieldCtx& ctx, std::vector<FqElem> ambient, unsigned r) {
  return SubspaceIter(ctx, basis_of_span(ctx, ambient), r);
}

}  // namespace ghwlab::subspace
