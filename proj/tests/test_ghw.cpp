#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "ghwlab/error.hpp"
#include "ghwlab/ghw.hpp"
#include "ghwlab/subspace.hpp"

using namespace ghwlab;
using namespace ghwlab::ghw;
using codes::DMode;

namespace {

// d_r straight from the definition: every r-tuple of messages whose codewords
// are independent spans an r-dim subcode; take the smallest support.
std::int64_t naive_ghw(const FieldCtx& f, const codes::DefiningSet& set, unsigned r) {
  const std::uint32_t p = f.p();
  std::vector<std::vector<std::uint32_t>> words(f.q());
  for (std::uint32_t a = 0; a < f.q(); ++a) words[a] = codes::codeword(f, set, FqElem{a});
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<std::uint32_t> idx(r, 0);
  std::vector<std::uint32_t> coef(r);
  for (;;) {
    // rank of the chosen words by exhausting coefficient vectors
    bool independent = true;
    std::vector<bool> support(set.size(), false);
    std::fill(coef.begin(), coef.end(), 0);
    for (;;) {
      unsigned i = 0;
      while (i < r && ++coef[i] == p) coef[i++] = 0;
      if (i == r) break;
      bool zero_word = true;
      for (std::size_t j = 0; j < set.size(); ++j) {
        std::uint32_t v = 0;
        for (unsigned t = 0; t < r; ++t) v = (v + coef[t] * words[idx[t]][j]) % p;
        if (v) {
          zero_word = false;
          support[j] = true;
        }
      }
      if (zero_word) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::min<std::int64_t>(best, std::count(support.begin(), support.end(), true));
    unsigned i = 0;
    while (i < r && ++idx[i] == f.q()) idx[i++] = 0;
    if (i == r) break;
  }
  return best;
}

codes::DefiningSet make_set(const FieldCtx& f, DMode mode) {
  return codes::build_defining_set(f, codes::DModeParams::make(f.p(), f.m(), mode));
}

}  // namespace

TEST_CASE("method names") {
  CHECK(parse_method("charsum") == Method::Charsum);
  CHECK(to_string(Method::Hyperplane) == "hyperplane");
  CHECK(parse_methods("subcode,closed,subcode") == std::vector<Method>{Method::Closed, Method::Subcode});
  CHECK_THROWS_AS(parse_method("magic"), Error);
  CHECK_THROWS_AS(parse_methods("closed,,x"), Error);
}

TEST_CASE("closed forms") {
  const auto one = codes::DModeParams::make(3, 3, DMode::One);
  CHECK(ghw_closed(3, 3, one, 1) == 6);
  CHECK(ghw_closed(3, 3, one, 2) == 8);
  CHECK_THROWS_AS(ghw_closed(3, 3, one, 3), Error);
  const auto six = codes::DModeParams::make(3, 6, DMode::One);
  const std::int64_t want[] = {162, 216, 234, 240, 242};
  for (unsigned r = 1; r <= 5; ++r) CHECK(ghw_closed(3, 6, six, r) == want[r - 1]);

  CHECK(ghw_closed(7, 2, codes::DModeParams::make(7, 2, DMode::Special), 1) == 6);
  CHECK(ghw_closed(7, 2, codes::DModeParams::make(7, 2, DMode::Special), 2) == 12);
  CHECK(ghw_closed(11, 2, codes::DModeParams::make(11, 2, DMode::Special), 1) == 10);
  CHECK(ghw_closed(11, 2, codes::DModeParams::make(11, 2, DMode::Special), 2) == 20);
  CHECK_THROWS_AS(ghw_closed(5, 2, codes::DModeParams::make(5, 2, DMode::Special), 1), Error);
  // branches overlap at r = s
  for (std::uint32_t p : {3u, 7u, 11u, 19u, 23u})
    for (unsigned m = 2; m <= 10; m += 2) {
      if (std::pow(p, m) > 1e15) continue;
      CHECK(ghw_closed_special_branch(p, m, 0, m / 2) == ghw_closed_special_branch(p, m, 1, m / 2));
    }
}

TEST_CASE("every method matches the definition on small codes") {
  for (auto [p, m, mode] : {std::tuple{3u, 3u, DMode::One}, {3u, 2u, DMode::Special}, {7u, 2u, DMode::Special},
                            {5u, 2u, DMode::One}, {3u, 4u, DMode::Special}, {5u, 3u, DMode::One}}) {
    CAPTURE(p);
    CAPTURE(m);
    const auto f = FieldCtx::build(p, m);
    const CodeAnalysis analysis(f, make_set(f, mode));
    for (unsigned r = 1; r <= analysis.k(); ++r) {
      CAPTURE(r);
      if (std::pow(f.q(), r) > 2e5) continue;
      const auto oracle = naive_ghw(f, analysis.defining_set(), r);
      CHECK(analysis.subcode(r) == oracle);
      CHECK(analysis.charsum(r) == oracle);
      CHECK(analysis.hyperplane(r) == oracle);
    }
  }
}

TEST_CASE("hierarchies of the reference instances") {
  struct Case {
    std::uint32_t p;
    unsigned m;
    DMode mode;
    std::vector<std::int64_t> d;
  };
  const Case cases[] = {
      {3, 3, DMode::One, {6, 8}},
      {3, 6, DMode::One, {162, 216, 234, 240, 242}},
      {3, 2, DMode::Special, {2, 4}},
      {7, 2, DMode::Special, {6, 12}},
      {11, 2, DMode::Special, {10, 20}},
      {3, 6, DMode::Special, {486, 648, 702, 720, 726, 728}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.p);
    CAPTURE(c.m);
    const auto f = FieldCtx::build(c.p, c.m);
    const CodeAnalysis analysis(f, make_set(f, c.mode));
    const auto report = compute_hierarchy(analysis, kAllMethods);
    CHECK(report.infeasible.empty());
    CHECK(report.agreement);
    CHECK(report.invariant_violations.empty());
    REQUIRE(report.hierarchy());
    CHECK(*report.hierarchy() == c.d);
    CHECK(report.values[0].at(Method::Subcode) == *analysis.summary().min_nonzero_weight());
  }
}

TEST_CASE("d = 1: the best hyperplane meets D in p^{m-1-r} - 1 points") {
  for (auto [p, m] : {std::pair{3u, 3u}, {3u, 4u}, {5u, 3u}, {3u, 6u}}) {
    const auto f = FieldCtx::build(p, m);
    const CodeAnalysis analysis(f, make_set(f, DMode::One));
    for (unsigned r = 1; r < m; ++r)
      CHECK(analysis.hyperplane_max_intersection(r) == static_cast<std::uint64_t>(std::pow(p, m - 1 - r)) - 1);
  }
}

TEST_CASE("(3,6) special: closed values are advisory") {
  const auto f = FieldCtx::build(3, 6);
  const CodeAnalysis analysis(f, make_set(f, DMode::Special));
  const auto report = compute_hierarchy(analysis, kAllMethods);
  CHECK(report.closed_advisory);
  CHECK(report.agreement);
  CHECK(report.values[0].at(Method::Closed) != report.values[0].at(Method::Subcode));
  CHECK(std::any_of(report.warnings.begin(), report.warnings.end(),
                    [](const auto& w) { return w.find("advisory closed form") != std::string::npos; }));
}

TEST_CASE("feasibility ceiling") {
  const auto f = FieldCtx::build(3, 6);
  const CodeAnalysis analysis(f, make_set(f, DMode::Special), EngineOptions{1000, 1});
  CHECK(analysis.work_units(Method::Closed, 3) == 0);
  CHECK(analysis.work_units(Method::Subcode, 3) == 33880u * 27u);
  CHECK(analysis.work_units(Method::Hyperplane, 3) == 33880u * 27u);
  try {
    analysis.subcode(3);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooLarge);
  }
  const auto report = compute_hierarchy(analysis, kAllMethods);
  CHECK(report.infeasible.count(Method::Subcode));
  CHECK_FALSE(report.infeasible.count(Method::Closed));
  CHECK(report.infeasible.count(Method::Charsum));
  // only the closed form is left, and it follows the family's n = 364
  REQUIRE(report.hierarchy());
  CHECK(report.hierarchy()->front() == 234);
}

TEST_CASE("thread count does not change results") {
  const auto f = FieldCtx::build(3, 4);
  const CodeAnalysis one(f, make_set(f, DMode::Special), EngineOptions{kDefaultCeiling, 1});
  const CodeAnalysis four(f, make_set(f, DMode::Special), EngineOptions{kDefaultCeiling, 4});
  for (unsigned r = 1; r <= 4; ++r)
    for (auto method : kAllMethods) CHECK(one.run(method, r) == four.run(method, r));
}

TEST_CASE("r_max and empty code") {
  const auto f = FieldCtx::build(3, 6);
  const CodeAnalysis analysis(f, make_set(f, DMode::One));
  const auto report = compute_hierarchy(analysis, kAllMethods, 2u);
  CHECK(report.r_max == 2);
  CHECK(*report.hierarchy() == std::vector<std::int64_t>{162, 216});

  const auto g = FieldCtx::build(5, 2);
  const CodeAnalysis empty(g, make_set(g, DMode::Special));
  const auto none = compute_hierarchy(empty, kAllMethods);
  CHECK(none.k == 0);
  CHECK(none.values.empty());
  CHECK(none.agreement);
  CHECK_THROWS_AS(empty.subcode(1), Error);
}
