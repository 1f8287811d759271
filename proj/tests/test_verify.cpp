#include <algorithm>
#include <doctest.h>

#include "ghwlab/error.hpp"
#include "ghwlab/verify.hpp"

using namespace ghwlab;
using namespace ghwlab::verify;

TEST_CASE("suite composition") {
  const auto core = check_ids(Suite::Core);
  const auto extended = check_ids(Suite::Extended);
  CHECK(core.size() == 9);
  CHECK(extended.size() == 12);
  for (const auto& id : core) CHECK(std::find(extended.begin(), extended.end(), id) != extended.end());
  CHECK(parse_suite("extended") == Suite::Extended);
  CHECK_THROWS_AS(parse_suite("full"), Error);
  CHECK_THROWS_AS(run_check("99"), Error);
}

TEST_CASE("the length probe is recorded, not failed") {
  const auto r = run_check("7");
  CHECK(r.status == Status::ExpectedDiscrepancy);
  CHECK(r.detail.find("n=728") != std::string::npos);
  CHECK(r.detail.find("gcd(m,p)=1") != std::string::npos);
  CHECK(passed({r}));
}

TEST_CASE("core suite passes") {
  const auto results = run_suite(Suite::Core);
  for (const auto& r : results) {
    CAPTURE(r.id);
    CAPTURE(r.detail);
    CHECK(r.status != Status::Fail);
  }
  CHECK(passed(results));
  CHECK(format_table(results).find("EXPECTED_DISCREPANCY") != std::string::npos);
}

TEST_CASE("a failed check fails the suite") {
  CheckResult bad;
  bad.status = Status::Fail;
  CHECK_FALSE(passed({bad}));
}
