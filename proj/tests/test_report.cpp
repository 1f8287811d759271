#include <doctest.h>

#include "ghwlab/error.hpp"
#include "ghwlab/report.hpp"

using namespace ghwlab;
using namespace ghwlab::report;

namespace {

AnalysisConfig config(std::uint32_t p, unsigned m, codes::DMode mode, std::string_view methods = "") {
  AnalysisConfig c;
  c.p = p;
  c.m = m;
  c.d_mode = mode;
  if (!methods.empty()) c.methods = ghw::parse_methods(methods);
  return c;
}

}  // namespace

TEST_CASE("analyze: reference instances") {
  const auto one = analyze(config(3, 3, codes::DMode::One));
  CHECK(one.exit_code() == exit_code::kOk);
  CHECK(one.ghw.n == 8);
  CHECK(*one.ghw.hierarchy() == std::vector<std::int64_t>{6, 8});
  CHECK(one.bounds->mds_ranks == std::vector<unsigned>{2});

  const auto seven = analyze(config(7, 2, codes::DMode::Special, "closed,subcode"));
  CHECK(seven.exit_code() == exit_code::kOk);
  CHECK(seven.ghw.agreement);
  CHECK(*seven.ghw.hierarchy() == std::vector<std::int64_t>{6, 12});

  const auto empty = analyze(config(5, 2, codes::DMode::Special));
  CHECK(empty.exit_code() == exit_code::kOk);
  CHECK(empty.bounds->degenerate);
}

TEST_CASE("analyze: infeasible and invalid requests") {
  auto c = config(3, 6, codes::DMode::Special);
  c.feasibility_ceiling = 100;
  const auto a = analyze(c);
  CHECK(a.exit_code() == exit_code::kInfeasible);
  CHECK(a.ghw.infeasible.count(ghw::Method::Subcode));

  auto bad = config(3, 3, codes::DMode::One);
  bad.threads = 0;
  CHECK_THROWS_AS(analyze(bad), Error);
  CHECK_THROWS_AS(analyze(config(9, 2, codes::DMode::One)), Error);
  CHECK_THROWS_AS(analyze(config(3, 3, codes::DMode::Special)), Error);
  CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("JSON: key order, round trip, determinism, integers only") {
  const auto a = analyze(config(3, 4, codes::DMode::Special));
  const auto text = dump(to_json(a));
  const auto doc = Json::parse(text);
  std::vector<std::string> keys;
  for (const auto& [key, value] : doc.items()) keys.push_back(key);
  CHECK(keys == std::vector<std::string>{"params", "code", "ghw", "bounds", "warnings", "timing"});
  CHECK(dump(doc) == text);
  CHECK(text.find('.') == std::string::npos);

  auto threaded = config(3, 4, codes::DMode::Special);
  threaded.threads = 3;
  CHECK(dump(to_json(analyze(threaded))) == text);
  CHECK(dump(to_json(analyze(config(3, 4, codes::DMode::Special)))) == text);
  CHECK(doc["ghw"]["closed_advisory"].get<bool>());
  CHECK_FALSE(doc["warnings"].empty());
}

TEST_CASE("CSV layout") {
  const auto a = analyze(config(3, 3, codes::DMode::One, "closed,subcode"));
  CHECK(to_csv(a) ==
        "r,d_closed,d_hyperplane,d_charsum,d_subcode,singleton_up,plotkin,griesmer,flags\n"
        "1,6,,,6,7,6,6,plotkin;griesmer\n"
        "2,8,,,8,8,8,8,mds;plotkin;griesmer\n");
}

TEST_CASE("table output mentions warnings and agreement") {
  const auto text = to_table(analyze(config(3, 3, codes::DMode::One)));
  CHECK(text.find("[8, 2]") != std::string::npos);
  CHECK(text.find("agreement  yes") != std::string::npos);
  CHECK(text.find("gcd(m,p)=1") != std::string::npos);
}

TEST_CASE("diagnostics") {
  const auto f3 = gf::FieldCtx::build(3, 1);
  const auto field = field_json(f3, true);
  CHECK(field["modulus"] == Json::array({0, 1}));
  CHECK(field["alpha"] == Json::array({2}));
  CHECK(field["trace_fibers"] == Json::array({1, 1, 1}));

  const auto f9 = gf::FieldCtx::build(3, 2);
  const auto periods = periods_json(f9, 2);
  CHECK(periods["verdict"] == "closed=brute");
  CHECK(periods["periods"][0]["brute"] == Json::array({1, 0, 0}));
  CHECK(periods["periods"][1]["brute"] == Json::array({-2, 0, 0}));
  CHECK_FALSE(periods_json(f9, 4).contains("verdict"));

  CHECK(omega_json(f9, 4, 0, 0u)["equal"].get<bool>());
  CHECK(omega_json(f9, 4, 3, std::nullopt)["equal"].get<bool>());
  CHECK_FALSE(omega_json(f9, 4, 3, std::nullopt)["closed"].contains("spike"));
  CHECK(diagnostics_table(omega_json(f9, 4, 1, 2u)).find("equal") != std::string::npos);
  CHECK_THROWS_AS(omega_json(f9, 3, 0, 0u), Error);
}
