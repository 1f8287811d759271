#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <tuple>

#include "ghwlab/codes.hpp"
#include "ghwlab/error.hpp"

using namespace ghwlab;
using namespace ghwlab::codes;

namespace {

FqElem slow_pow(const FieldCtx& f, FqElem x, std::uint64_t e) {
  FqElem acc = f.one();
  while (e--) acc = f.mul_poly(acc, x);
  return acc;
}

std::vector<FqElem> naive_set(const FieldCtx& f, std::uint32_t d) {
  std::vector<FqElem> out;
  for (std::uint32_t x = 1; x < f.q(); ++x) {
    const auto y = slow_pow(f, FqElem{x}, d);
    FqElem tr = f.zero(), z = y;
    for (unsigned i = 0; i < f.m(); ++i) {
      tr = f.add(tr, z);
      z = f.frobenius(z, 1);
    }
    if (tr.is_zero()) out.push_back(FqElem{x});
  }
  return out;
}

// Rank over F_p of the codewords of the polynomial basis 1, x, ..., x^{m-1}.
unsigned generator_rank(const FieldCtx& f, const DefiningSet& set) {
  std::vector<std::vector<std::uint32_t>> rows;
  std::uint32_t unit = 1;
  for (unsigned i = 0; i < f.m(); ++i, unit *= f.p()) rows.push_back(codeword(f, set, FqElem{unit}));
  const std::uint32_t p = f.p();
  unsigned rank = 0;
  const std::size_t cols = set.size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const auto& r) { return r[c] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    auto& top = rows[rank];
    std::uint32_t inv = 1;
    while (top[c] * inv % p != 1) ++inv;
    for (auto& v : top) v = v * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const std::uint32_t factor = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = (rows[i][j] + p * p - factor * top[j]) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("d-mode parsing and parameters") {
  CHECK(parse_dmode("one") == DMode::One);
  CHECK(parse_dmode("special") == DMode::Special);
  CHECK(to_string(DMode::Special) == "special");
  CHECK_THROWS_AS(parse_dmode("two"), Error);
  CHECK_THROWS_AS(DModeParams::make(3, 3, DMode::Special), Error);

  const auto one = DModeParams::make(5, 3, DMode::One);
  CHECK(one.d == 1);
  CHECK(one.hypotheses_hold());
  CHECK_FALSE(DModeParams::make(3, 3, DMode::One).hypotheses_hold());
  const auto sp = DModeParams::make(7, 2, DMode::Special);
  CHECK(sp.d == 6);
  CHECK(sp.s == 1);
  CHECK(sp.flags.p_mod_4 == 3);
  const auto bad = DModeParams::make(3, 6, DMode::Special);
  CHECK_FALSE(bad.flags.gcd_m_p_is_1);
  CHECK_FALSE(bad.hypotheses_hold());
  REQUIRE_FALSE(bad.hypothesis_warnings().empty());
  CHECK(bad.hypothesis_warnings()[0].find("gcd(m,p)=1") != std::string::npos);
  CHECK_FALSE(DModeParams::make(3, 4, DMode::Special).flags.s_is_odd);
}

TEST_CASE("defining set agrees with a table-free oracle") {
  for (auto [p, m, mode] : {std::tuple{3u, 3u, DMode::One}, {3u, 2u, DMode::Special}, {5u, 2u, DMode::Special},
                            {7u, 2u, DMode::Special}, {3u, 4u, DMode::Special}, {5u, 3u, DMode::One}}) {
    const auto f = FieldCtx::build(p, m);
    const auto params = DModeParams::make(p, m, mode);
    const auto set = build_defining_set(f, params);
    auto got = set.elements;
    for (std::size_t i = 1; i < got.size(); ++i) CHECK(f.dlog(got[i - 1]) < f.dlog(got[i]));
    std::sort(got.begin(), got.end(), [](FqElem a, FqElem b) { return a.packed < b.packed; });
    const auto want = naive_set(f, params.d);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == want[i]);
  }
}

TEST_CASE("codewords") {
  const auto f = FieldCtx::build(3, 3);
  const auto set = build_defining_set(f, DModeParams::make(3, 3, DMode::One));
  REQUIRE(set.size() == 8);
  for (auto v : codeword(f, set, f.zero())) CHECK(v == 0);
  for (std::uint32_t a = 0; a < f.q(); ++a) {
    const auto word = codeword(f, set, FqElem{a});
    CHECK(word.size() == set.size());
    CHECK(codeword_weight(f, set, FqElem{a}) ==
          static_cast<std::uint32_t>(std::count_if(word.begin(), word.end(), [](auto v) { return v != 0; })));
    for (std::size_t i = 0; i < word.size(); ++i) CHECK(word[i] == f.trace1(f.mul(FqElem{a}, set.elements[i])));
  }
}

TEST_CASE("length, dimension and weight distribution") {
  struct Case {
    std::uint32_t p;
    unsigned m;
    DMode mode;
    std::size_t n;
    unsigned k;
    std::map<std::uint32_t, std::uint64_t> weights;
  };
  const Case cases[] = {
      {3, 3, DMode::One, 8, 2, {{0, 3}, {6, 24}}},
      {3, 2, DMode::Special, 4, 2, {{0, 1}, {2, 4}, {4, 4}}},
      {7, 2, DMode::Special, 12, 2, {{0, 1}, {6, 12}, {12, 36}}},
      {11, 2, DMode::Special, 20, 2, {{0, 1}, {10, 20}, {20, 100}}},
      {5, 2, DMode::Special, 0, 0, {{0, 25}}},
      {3, 4, DMode::Special, 40, 4, {{0, 1}, {24, 40}, {30, 40}}},
      {3, 6, DMode::One, 242, 5, {{0, 3}, {162, 726}}},
      {3, 6, DMode::Special, 728, 6, {{0, 1}, {486, 728}}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.p);
    CAPTURE(c.m);
    const auto f = FieldCtx::build(c.p, c.m);
    const auto set = build_defining_set(f, DModeParams::make(c.p, c.m, c.mode));
    const auto summary = summarize(f, set);
    CHECK(summary.n == c.n);
    CHECK(summary.k == c.k);
    CHECK(summary.k == generator_rank(f, set));
    CHECK(summary.kernel_dim == c.m - c.k);
    CHECK(summary.kernel.size() == static_cast<std::size_t>(std::pow(c.p, c.m - c.k)));
    CHECK(summary.weight_distribution == c.weights);
    CHECK(summarize(f, set, 3).weight_distribution == c.weights);
  }
}

TEST_CASE("closed forms and warnings") {
  CHECK(closed_length_dim(3, 3, DMode::One).n == 8);
  CHECK(closed_length_dim(3, 3, DMode::One).k == 2);
  CHECK(closed_length_dim(5, 2, DMode::Special).n == 0);
  CHECK(closed_length_dim(3, 6, DMode::Special).n == 364);
  CHECK(closed_length_dim(7, 2, DMode::Special).n == 12);
  CHECK(closed_nonzero_weights(3, 3, DMode::One) == std::vector<std::int64_t>{6});
  CHECK(closed_nonzero_weights(7, 2, DMode::Special) == std::vector<std::int64_t>{6, 12});
  CHECK(closed_nonzero_weights(5, 2, DMode::Special).empty());

  const auto ok = FieldCtx::build(7, 2);
  CHECK(summarize(ok, build_defining_set(ok, DModeParams::make(7, 2, DMode::Special))).warnings.empty());
  const auto bad = FieldCtx::build(3, 6);
  const auto w = summarize(bad, build_defining_set(bad, DModeParams::make(3, 6, DMode::Special))).warnings;
  CHECK(std::any_of(w.begin(), w.end(), [](const auto& s) { return s.find("gcd(m,p)=1") != std::string::npos; }));
  CHECK(std::any_of(w.begin(), w.end(), [](const auto& s) { return s.find("364") != std::string::npos; }));
}

TEST_CASE("minimum nonzero weight") {
  CodeSummary s;
  CHECK_FALSE(s.min_nonzero_weight());
  s.weight_distribution = {{0, 1}, {4, 2}, {2, 2}};
  CHECK(s.min_nonzero_weight() == 2u);
}
