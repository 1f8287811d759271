#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "ghwlab/error.hpp"
#include "ghwlab/subspace.hpp"

using namespace ghwlab;
using namespace ghwlab::subspace;

namespace {

// [m, r]_p from the q-Pascal recurrence.
std::uint64_t pascal(unsigned m, unsigned r, std::uint64_t p) {
  if (r == 0 || r == m) return 1;
  if (r > m) return 0;
  std::uint64_t pr = 1;
  for (unsigned i = 0; i < r; ++i) pr *= p;
  return pascal(m - 1, r - 1, p) + pr * pascal(m - 1, r, p);
}

std::vector<std::uint32_t> sorted_span(const FieldCtx& f, std::span<const FqElem> basis) {
  std::vector<std::uint32_t> out;
  for (auto x : span_members(f, basis)) out.push_back(x.packed);
  std::sort(out.begin(), out.end());
  return out;
}

// Distinct r-dim subspaces, found by spanning every independent r-tuple.
std::set<std::vector<std::uint32_t>> naive_subspaces(const FieldCtx& f, unsigned r) {
  std::set<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> idx(r, 0);
  for (;;) {
    EchelonBasis eb(f);
    bool independent = true;
    for (auto v : idx) independent = independent && eb.insert(FqElem{v});
    if (independent) out.insert(sorted_span(f, eb.basis()));
    unsigned i = 0;
    while (i < r && ++idx[i] == f.q()) idx[i++] = 0;
    if (i == r) break;
  }
  return out;
}

}  // namespace

TEST_CASE("gaussian_binomial") {
  CHECK(gaussian_binomial(6, 3, 3) == 33880);
  CHECK(gaussian_binomial(3, 1, 3) == 13);
  CHECK(gaussian_binomial(4, 0, 5) == 1);
  CHECK(gaussian_binomial(2, 3, 5) == 0);
  for (std::uint32_t p : {3u, 5u, 7u})
    for (unsigned m = 0; m <= 8; ++m)
      for (unsigned r = 0; r <= m; ++r) CHECK(gaussian_binomial(m, r, p) == pascal(m, r, p));
  CHECK_THROWS_AS(gaussian_binomial(40, 20, 13), Error);
}

TEST_CASE("EchelonBasis") {
  const auto f = FieldCtx::build(3, 3);
  EchelonBasis eb(f);
  CHECK(eb.insert(FqElem{1}));
  CHECK_FALSE(eb.insert(FqElem{2}));
  CHECK(eb.insert(FqElem{3}));
  CHECK_FALSE(eb.insert(FqElem{4}));  // 1 + 3
  CHECK(eb.contains(FqElem{8}));      // 2 + 2*3
  CHECK_FALSE(eb.contains(FqElem{9}));
  CHECK_FALSE(eb.insert(FqElem{0}));
  CHECK(eb.dim() == 2);
  CHECK(eb.basis() == std::vector<FqElem>{FqElem{1}, FqElem{3}});
}

TEST_CASE("span helpers") {
  const auto f = FieldCtx::build(5, 2);
  const std::vector<FqElem> gens{FqElem{1}, FqElem{2}, FqElem{5}, FqElem{6}};
  const auto basis = basis_of_span(f, gens);
  CHECK(basis.size() == 2);
  const auto members = span_members(f, basis);
  CHECK(members.size() == 25);
  CHECK(members.front().is_zero());
  CHECK(complement(f, basis).empty());

  const auto g = FieldCtx::build(3, 4);
  const std::vector<FqElem> one{FqElem{1}};
  const auto comp = complement(g, one);
  CHECK(comp.size() == 3);
  EchelonBasis eb(g);
  eb.insert(FqElem{1});
  for (auto x : comp) CHECK(eb.insert(x));
  CHECK(eb.dim() == 4);
}

TEST_CASE("subspace enumeration is exhaustive and duplicate-free") {
  for (auto [p, m] : {std::pair{3u, 3u}, {3u, 4u}, {5u, 2u}, {5u, 3u}, {7u, 2u}}) {
    const auto f = FieldCtx::build(p, m);
    std::vector<FqElem> ambient;
    std::uint32_t unit = 1;
    for (unsigned i = 0; i < m; ++i, unit *= p) ambient.push_back(FqElem{unit});
    for (unsigned r = 0; r <= m; ++r) {
      CAPTURE(p);
      CAPTURE(m);
      CAPTURE(r);
      SubspaceIter it(f, ambient, r);
      std::set<std::vector<std::uint32_t>> seen;
      std::uint64_t produced = 0;
      while (it.next()) {
        ++produced;
        CHECK(it.basis().size() == r);
        CHECK(basis_of_span(f, it.basis()).size() == r);
        seen.insert(sorted_span(f, it.basis()));
      }
      CHECK(produced == it.count());
      CHECK(seen.size() == produced);
      if (std::pow(f.q(), r) <= 600'000) CHECK(seen == naive_subspaces(f, r));
    }
  }
}

TEST_CASE("enumeration inside a proper subspace") {
  const auto f = FieldCtx::build(3, 4);
  // trace-zero hyperplane
  std::vector<FqElem> kernel;
  for (std::uint32_t x = 1; x < f.q(); ++x)
    if (f.trace1(FqElem{x}) == 0) kernel.push_back(FqElem{x});
  for (unsigned r = 0; r <= 3; ++r) {
    auto it = enumerate_subspaces(f, kernel, r);
    CHECK(it.dim() == 3);
    std::uint64_t produced = 0;
    while (it.next()) {
      ++produced;
      for (auto x : span_members(f, it.basis())) CHECK(f.trace1(x) == 0);
    }
    CHECK(produced == gaussian_binomial(3, r, 3));
  }
  CHECK_THROWS_AS(enumerate_subspaces(f, kernel, 4), Error);
}
