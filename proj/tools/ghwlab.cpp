// ghwlab command-line front end.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ghwlab/error.hpp"
#include "ghwlab/report.hpp"
#include "ghwlab/verify.hpp"

using namespace ghwlab;
namespace ec = report::exit_code;

namespace {

int exit_for(const Error& e) {
  switch (e.code()) {
    case Errc::TooLarge:
    case Errc::FieldTooLarge:
    case Errc::Overflow: return ec::kInfeasible;
    case Errc::BoundViolation:
    case Errc::NonIntegerN: return ec::kDisagreement;
    default: return ec::kUsage;
  }
}

std::uint64_t ceiling_default() {
  if (const char* env = std::getenv("GHWLAB_CEILING")) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw Error(Errc::InconsistentParams, std::string("GHWLAB_CEILING is not a number: ") + env);
  }
  return ghw::kDefaultCeiling;
}

void emit_diagnostic(const report::Json& doc, const std::string& format) {
  if (format == "json")
    std::cout << report::dump(doc);
  else
    std::cout << report::diagnostics_table(doc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weight hierarchies of trace codes over finite fields"};
  app.require_subcommand(1);

  std::uint32_t p = 3;
  unsigned m = 3;
  std::string d_mode = "one", methods, format = "table", suite = "core";
  std::optional<unsigned> r_max;
  unsigned threads = 1;
  std::optional<std::uint64_t> ceiling;
  bool histogram = false;
  std::uint32_t n_order = 2, big_m = 0, a_log = 0;
  std::optional<std::uint32_t> b_log;

  auto field_flags = [&](CLI::App* cmd) {
    cmd->add_option("--p", p, "odd prime")->required();
    cmd->add_option("--m", m, "extension degree")->required();
  };
  auto format_flag = [&](CLI::App* cmd, std::vector<std::string> choices) {
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember(choices));
  };

  auto* analyze = app.add_subcommand("analyze", "code parameters, weight hierarchy and bounds");
  field_flags(analyze);
  analyze->add_option("--d-mode", d_mode, "one | special")->check(CLI::IsMember({"one", "special"}));
  analyze->add_option("--methods", methods, "comma-separated subset of closed,hyperplane,charsum,subcode");
  analyze->add_option("--r-max", r_max, "largest rank to compute")->check(CLI::PositiveNumber);
  format_flag(analyze, {"table", "json", "csv"});
  analyze->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  analyze->add_option("--ceiling", ceiling, "work-unit ceiling per method and rank");

  auto* field = app.add_subcommand("field", "modulus, primitive element, trace fibers");
  field_flags(field);
  field->add_flag("--histogram", histogram, "print the trace-fiber histogram");
  format_flag(field, {"table", "json"});

  auto* periods = app.add_subcommand("periods", "Gaussian periods of order N");
  field_flags(periods);
  periods->add_option("--N", n_order, "order, a divisor of q-1")->check(CLI::PositiveNumber);
  format_flag(periods, {"table", "json"});

  auto* omega = app.add_subcommand("omega", "Omega(a,b) by brute force and closed form");
  field_flags(omega);
  omega->add_option("--M", big_m, "M >= 2")->required();
  omega->add_option("--a-log", a_log, "a = alpha^a_log")->required();
  omega->add_option("--b-log", b_log, "b = alpha^b_log; omitted means b = 0");
  format_flag(omega, {"table", "json"});

  auto* verify_cmd = app.add_subcommand("verify", "reproduction and property checks");
  verify_cmd->add_option("--suite", suite, "core | extended")->check(CLI::IsMember({"core", "extended"}));
  verify_cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ec::kOk : ec::kUsage;
  }

  try {
    if (*analyze) {
      report::AnalysisConfig config;
      config.p = p;
      config.m = m;
      config.d_mode = codes::parse_dmode(d_mode);
      if (!methods.empty()) {
        config.methods = ghw::parse_methods(methods);
        if (config.methods.empty()) throw Error(Errc::InconsistentParams, "no methods selected");
      }
      config.r_max = r_max;
      config.format = report::parse_format(format);
      config.threads = threads;
      config.feasibility_ceiling = ceiling ? *ceiling : ceiling_default();
      const auto result = report::analyze(config);
      std::cout << report::render(result, config.format);
      return result.exit_code();
    }
    if (*field) {
      emit_diagnostic(report::field_json(gf::FieldCtx::build(p, m), histogram), format);
      return ec::kOk;
    }
    if (*periods) {
      emit_diagnostic(report::periods_json(gf::FieldCtx::build(p, m), n_order), format);
      return ec::kOk;
    }
    if (*omega) {
      const auto doc = report::omega_json(gf::FieldCtx::build(p, m), big_m, a_log, b_log);
      emit_diagnostic(doc, format);
      return doc["equal"].get<bool>() ? ec::kOk : ec::kDisagreement;
    }
    if (*verify_cmd) {
      const auto results = verify::run_suite(verify::parse_suite(suite), threads);
      std::cout << verify::format_table(results);
      const bool ok = verify::passed(results);
      std::cout << (ok ? "suite passed" : "suite FAILED") << "\n";
      return ok ? ec::kOk : ec::kDisagreement;
    }
  } catch (const Error& e) {
    std::cerr << "ghwlab: " << e.what() << "\n";
    return exit_for(e);
  }
  return ec::kUsage;
}
