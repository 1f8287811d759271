#pragma once

// F_p-linear algebra on F_q viewed as F_p^m, and duplicate-free enumeration
// of r-dimensional subspaces through reduced row echelon forms.

#include <cstdint>
#include <span>
#include <vector>

#include "ghwlab/gf.hpp"

namespace ghwlab::subspace {

using gf::FieldCtx;
using gf::FqElem;

/// [m choose r]_p; throws Overflow if it does not fit in 64 bits.
std::uint64_t gaussian_binomial(unsigned m, unsigned r, std::uint32_t p);

/// Incrementally built F_p-basis kept in echelon form.
class EchelonBasis {
 public:
  explicit EchelonBasis(const FieldCtx& ctx) : ctx_(&ctx) {}

  /// Adds x if it is independent of the current span.
  bool insert(FqElem x);
  bool contains(FqElem x) const;
  unsigned dim() const noexcept { return static_cast<unsigned>(inserted_.size()); }
  /// The vectors accepted by insert(), in insertion order.
  const std::vector<FqElem>& basis() const noexcept { return inserted_; }

 private:
  std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> v) const;

  const FieldCtx* ctx_;
  std::vector<std::vector<std::uint32_t>> rows_;  // normalized, pivot_[i] leading
  std::vector<unsigned> pivot_;
  std::vector<FqElem> inserted_;
};

/// Greedy basis of the span of `elements`.
std::vector<FqElem> basis_of_span(const FieldCtx& ctx, std::span<const FqElem> elements);
/// Extends `basis` with polynomial-basis vectors 1, x, x^2, ... and returns
/// only the added vectors (a complement of span(basis) in F_q).
std::vector<FqElem> complement(const FieldCtx& ctx, std::span<const FqElem> basis);
/// All p^r elements of span(basis), zero first.
std::vector<FqElem> span_members(const FieldCtx& ctx, std::span<const FqElem> basis);

/// Enumerates every r-dimensional subspace of span(ambient) exactly once.
/// Each subspace is produced as r basis vectors given by an RREF matrix over
/// the ambient coordinates. Usage: while (it.next()) use(it.basis());
class SubspaceIter {
 public:
  /// `ambient` must be F_p-independent. Throws RankOutOfRange for r > dim.
  SubspaceIter(const FieldCtx& ctx, std::vector<FqElem> ambient, unsigned r);

  bool next();
  std::span<const FqElem> basis() const noexcept { return current_; }
  /// RREF coefficient rows of the current subspace (r rows of length dim).
  const std::vector<std::vector<std::uint32_t>>& rref() const noexcept { return rows_; }
  std::uint64_t count() const { return gaussian_binomial(dim(), r_, ctx_->p()); }
  unsigned dim() const noexcept { return static_cast<unsigned>(ambient_.size()); }
  unsigned rank() const noexcept { return r_; }

 private:
  bool advance_pivots();
  void reset_free();
  bool advance_free();
  void materialize();

  const FieldCtx* ctx_;
  std::vector<FqElem> ambient_;
  unsigned r_;
  bool started_ = false;
  bool done_ = false;
  std::vector<unsigned> pivots_;
  std::vector<std::pair<unsigned, unsigned>> free_cells_;  // (row, col)
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<FqElem> current_;
};

/// `ambient` may be any spanning set; it is reduced to a basis first.
SubspaceIter enumerate_subspaces(const FieldCtx& ctx, std::vector<FqElem> ambient, unsigned r);

}  // namespace ghwlab::subspace
