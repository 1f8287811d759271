#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "ghwlab/cyclo.hpp"
#include "ghwlab/error.hpp"

using namespace ghwlab;
using cyclo::CycInt;
using cyclo::QuadVal;

namespace {

// Numerical shadow: evaluates Sum c_j zeta^j in C.
std::complex<double> evaluate(const CycInt& x) {
  std::complex<double> acc = 0;
  const double p = x.p();
  for (std::size_t j = 0; j < x.p(); ++j)
    acc += static_cast<double>(x[j]) * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(j) / p);
  return acc;
}

CycInt random_cyc(std::mt19937& rng, std::uint32_t p, int spread = 50) {
  std::uniform_int_distribution<int> pick(-spread, spread);
  std::vector<std::int64_t> c(p);
  for (auto& v : c) v = pick(rng);
  return CycInt(c);
}

}  // namespace

TEST_CASE("canonical form") {
  std::mt19937 rng(1);
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    for (int i = 0; i < 200; ++i) {
      auto x = random_cyc(rng, p);
      CHECK(x[p - 1] == 0);
      std::vector<std::int64_t> again(x.coeffs().begin(), x.coeffs().end());
      cyclo::canonicalize(again);
      CHECK(CycInt(again) == x);
    }
    CHECK(CycInt(std::vector<std::int64_t>(p, 17)).is_zero());
  }
}

TEST_CASE("cyc_from_counts") {
  const std::vector<std::int64_t> equal{4, 4, 4, 4, 4};
  CHECK(cyclo::cyc_from_counts(5, equal).is_zero());
  const std::vector<std::int64_t> spike{9, 0, 0};
  CHECK(cyclo::cyc_from_counts(3, spike).as_integer() == 9);
  // trace fibers of F_9 are (3,3,3); dropping x = 0 from fiber 0 leaves -1
  const std::vector<std::int64_t> fibers{3, 3, 3};
  CHECK(cyclo::cyc_from_counts(3, fibers).is_zero());
  const std::vector<std::int64_t> nonzero{2, 3, 3};
  CHECK(cyclo::cyc_from_counts(3, nonzero).as_integer() == -1);
  const std::vector<std::int64_t> wrong{1, 2};
  CHECK_THROWS_AS(cyclo::cyc_from_counts(3, wrong), Error);
}

TEST_CASE("ring operations") {
  const std::uint32_t p = 7;
  const auto z = CycInt::root(p, 1);
  CHECK(z * CycInt::root(p, p - 1) == CycInt::integer(p, 1));
  std::mt19937 rng(2);
  const auto x = random_cyc(rng, p);
  CHECK((x + cyclo::cyc_neg(x)).is_zero());
  CHECK((x - x).is_zero());
  std::vector<std::int64_t> ones(p, 1);
  CHECK((CycInt(ones) * x).is_zero());
  CHECK_THROWS_AS(x + CycInt::integer(5, 1), Error);
}

TEST_CASE("ring operations agree with complex evaluation") {
  std::mt19937 rng(3);
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    for (int i = 0; i < 50; ++i) {
      const auto a = random_cyc(rng, p), b = random_cyc(rng, p);
      CHECK(std::abs(evaluate(a * b) - evaluate(a) * evaluate(b)) < 1e-6);
      CHECK(std::abs(evaluate(a + b) - evaluate(a) - evaluate(b)) < 1e-9);
      CHECK(std::abs(evaluate(cyclo::cyc_scale(a, 3)) - 3.0 * evaluate(a)) < 1e-9);
    }
  }
}

TEST_CASE("overflow is reported") {
  std::vector<std::int64_t> big(3, 0);
  big[0] = INT64_MAX / 2 + 1;
  const CycInt x(big);
  try {
    (void)(x + x);
    FAIL("expected Overflow");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Overflow);
  }
}

TEST_CASE("gauss_sum squares to p*") {
  CHECK(cyclo::gauss_sum(3) == CycInt(std::vector<std::int64_t>{1, 2, 0}));
  CHECK((cyclo::gauss_sum(3) * cyclo::gauss_sum(3)).as_integer() == -3);
  CHECK((cyclo::gauss_sum(5) * cyclo::gauss_sum(5)).as_integer() == 5);
  CHECK((cyclo::gauss_sum(7) * cyclo::gauss_sum(7)).as_integer() == -7);
  for (std::uint32_t p : {11u, 13u, 17u, 19u}) {
    const auto g = cyclo::gauss_sum(p);
    CHECK((g * g).as_integer() == cyclo::p_star(p));
  }
}

TEST_CASE("quad_to_cyc") {
  CHECK(cyclo::quad_to_cyc(3, QuadVal{2, 0}).as_integer() == 1);
  CHECK(cyclo::quad_to_cyc(5, QuadVal{-1, 1}) == CycInt::root(5, 1) + CycInt::root(5, 4));
  try {
    cyclo::quad_to_cyc(5, QuadVal{1, 0});
    FAIL("expected NotDivisibleByTwo");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotDivisibleByTwo);
  }
}

TEST_CASE("quad_to_cyc is a ring embedding on its domain") {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> pick(-40, 40);
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    for (int i = 0; i < 100; ++i) {
      // u = v (mod 2) keeps the value inside Z[zeta_p]
      const std::int64_t v1 = pick(rng), v2 = pick(rng);
      const QuadVal a{2 * pick(rng) + (v1 & 1), v1}, b{2 * pick(rng) + (v2 & 1), v2};
      CHECK(cyclo::quad_to_cyc(p, cyclo::quad_add(a, b)) == cyclo::quad_to_cyc(p, a) + cyclo::quad_to_cyc(p, b));
      CHECK(cyclo::quad_to_cyc(p, cyclo::quad_mul(p, a, b)) ==
            cyclo::quad_to_cyc(p, a) * cyclo::quad_to_cyc(p, b));
    }
  }
}
