#pragma once

// End-to-end analysis of one (p, m, d-mode) instance and its renderings.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ghwlab/bounds.hpp"
#include "ghwlab/codes.hpp"
#include "ghwlab/gf.hpp"
#include "ghwlab/ghw.hpp"

namespace ghwlab::report {

using Json = nlohmann::ordered_json;

enum class Format { Table, Json, Csv };
Format parse_format(std::string_view text);

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kDisagreement = 2;
inline constexpr int kInfeasible = 3;
inline constexpr int kUsage = 64;
}  // namespace exit_code

struct AnalysisConfig {
  std::uint32_t p = 3;
  unsigned m = 3;
  codes::DMode d_mode = codes::DMode::One;
  /// Empty selects every method.
  std::vector<ghw::Method> methods;
  std::optional<unsigned> r_max;
  Format format = Format::Table;
  unsigned threads = 1;
  std::uint64_t feasibility_ceiling = ghw::kDefaultCeiling;
};

std::vector<ghw::Method> default_methods(codes::DMode mode);

struct Analysis {
  AnalysisConfig config;
  std::shared_ptr<const gf::FieldCtx> field;
  std::unique_ptr<ghw::CodeAnalysis> code;
  ghw::GhwReport ghw;
  std::optional<bounds::BoundReport> bounds;
  std::optional<std::string> bound_error;
  std::vector<std::string> warnings;

  /// 2 on disagreement, invariant or bound violation; 3 if a requested
  /// method was infeasible; 0 otherwise.
  int exit_code() const;
};

Analysis analyze(const AnalysisConfig& config);

Json to_json(const Analysis& analysis);
std::string to_csv(const Analysis& analysis);
std::string to_table(const Analysis& analysis);
std::string render(const Analysis& analysis, Format format);

/// Canonical JSON text: two-space indent, insertion-ordered keys, trailing newline.
std::string dump(const Json& doc);

// Diagnostics.
Json field_json(const gf::FieldCtx& field, bool histogram);
Json periods_json(const gf::FieldCtx& field, std::uint32_t n);
/// b = nullopt means b = 0.
Json omega_json(const gf::FieldCtx& field, std::uint32_t big_m, std::uint32_t a_log, std::optional<std::uint32_t> b_log);
/// Human-readable form of a diagnostics document.
std::string diagnostics_table(const Json& doc);

}  // namespace ghwlab::report
