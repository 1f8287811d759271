#include "ghwlab/report.hpp"

#include <iomanip>
#include <sstream>

#include "ghwlab/charsums.hpp"
#include "ghwlab/cyclo.hpp"
#include "ghwlab/error.hpp"

namespace ghwlab::report {

Format parse_format(std::string_view text) {
  if (text == "table") return Format::Table;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw Error(Errc::InconsistentParams, "unknown format '" + std::string(text) + "'");
}

std::vector<ghw::Method> default_methods(codes::DMode) {
  return {std::begin(ghw::kAllMethods), std::end(ghw::kAllMethods)};
}

int Analysis::exit_code() const {
  if (!ghw.agreement || !ghw.invariant_violations.empty() || bound_error) return exit_code::kDisagreement;
  if (!ghw.infeasible.empty()) return exit_code::kInfeasible;
  return exit_code::kOk;
}

Analysis analyze(const AnalysisConfig& config) {
  if (config.threads < 1) throw Error(Errc::InconsistentParams, "threads must be >= 1");
  Analysis out;
  out.config = config;
  if (out.config.methods.empty()) out.config.methods = default_methods(config.d_mode);
  out.field = std::make_shared<const gf::FieldCtx>(gf::FieldCtx::build(config.p, config.m));
  const auto params = codes::DModeParams::make(config.p, config.m, config.d_mode);
  auto set = codes::build_defining_set(*out.field, params);
  out.code = std::make_unique<ghw::CodeAnalysis>(*out.field, std::move(set),
                                                 ghw::EngineOptions{config.feasibility_ceiling, config.threads});
  out.ghw = ghw::compute_hierarchy(*out.code, out.config.methods, config.r_max);
  out.warnings = out.ghw.warnings;
  if (const auto h = out.ghw.hierarchy(); h || out.ghw.k == 0) {
    try {
      out.bounds = bounds::evaluate_bounds(static_cast<std::int64_t>(out.ghw.n), out.ghw.k, config.p,
                                           h ? std::span<const std::int64_t>(*h) : std::span<const std::int64_t>{});
    } catch (const Error& e) {
      out.bound_error = e.what();
    }
  }
  return out;
}

namespace {

Json poly_json(std::span<const std::uint32_t> coeffs) {
  Json arr = Json::array();
  for (auto c : coeffs) arr.push_back(c);
  return arr;
}

Json cyc_json(const cyclo::CycInt& x) {
  Json arr = Json::array();
  for (auto c : x.coeffs()) arr.push_back(c);
  return arr;
}

Json quad_json(const cyclo::QuadVal& x) { return Json{{"u", x.u}, {"v", x.v}}; }

std::string flags_of(const bounds::RankBounds& b) {
  std::string out;
  auto add = [&](const char* name) {
    if (!out.empty()) out += ';';
    out += name;
  };
  if (b.is_r_mds) add("mds");
  if (b.meets_plotkin) add("plotkin");
  if (b.meets_griesmer) add("griesmer");
  return out;
}

const bounds::RankBounds* bounds_at(const Analysis& a, unsigned r) {
  if (!a.bounds || r == 0 || r > a.bounds->ranks.size()) return nullptr;
  return &a.bounds->ranks[r - 1];
}

}  // namespace

Json to_json(const Analysis& a) {
  const auto& field = *a.field;
  const auto& summary = a.code->summary();
  Json doc;
  doc["params"] = {{"p", field.p()},
                   {"m", field.m()},
                   {"d_mode", std::string(codes::to_string(a.config.d_mode))},
                   {"d", a.code->defining_set().params.d},
                   {"modulus", poly_json(field.modulus())},
                   {"alpha", poly_json(field.coeffs(field.alpha()))}};

  Json weights = Json::object();
  for (const auto& [w, count] : summary.weight_distribution) weights[std::to_string(w)] = count;
  doc["code"] = {{"n", summary.n},
                 {"k", summary.k},
                 {"kernel_dim", summary.kernel_dim},
                 {"degenerate", summary.k == 0},
                 {"weight_distribution", weights}};

  Json by_rank = Json::object();
  for (unsigned r = 1; r <= a.ghw.r_max; ++r) {
    Json row = Json::object();
    for (auto method : a.ghw.methods) {
      auto it = a.ghw.values[r - 1].find(method);
      if (it != a.ghw.values[r - 1].end()) row[std::string(ghw::to_string(method))] = it->second;
    }
    by_rank[std::to_string(r)] = row;
  }
  Json methods = Json::array();
  for (auto method : a.ghw.methods) methods.push_back(std::string(ghw::to_string(method)));
  Json infeasible = Json::object();
  for (const auto& [method, why] : a.ghw.infeasible) infeasible[std::string(ghw::to_string(method))] = why;
  doc["ghw"] = {{"methods", methods},
                {"by_rank", by_rank},
                {"agreement", a.ghw.agreement},
                {"closed_advisory", a.ghw.closed_advisory},
                {"infeasible", infeasible},
                {"invariant_violations", a.ghw.invariant_violations}};

  if (a.bounds) {
    Json ranks = Json::object();
    for (const auto& b : a.bounds->ranks)
      ranks[std::to_string(b.r)] = {{"d", b.d},
                                    {"singleton_upper", b.singleton_upper},
                                    {"plotkin", b.plotkin},
                                    {"griesmer", b.griesmer},
                                    {"plotkin_holds", b.plotkin_holds},
                                    {"griesmer_holds", b.griesmer_holds},
                                    {"meets_plotkin", b.meets_plotkin},
                                    {"meets_griesmer", b.meets_griesmer},
                                    {"is_r_mds", b.is_r_mds}};
    doc["bounds"] = {{"degenerate", a.bounds->degenerate}, {"mds_ranks", a.bounds->mds_ranks}, {"by_rank", ranks}};
  } else {
    doc["bounds"] = {{"error", a.bound_error.value_or("no complete hierarchy")}};
  }
  doc["warnings"] = a.warnings;
  Json units = Json::object();
  for (const auto& [method, count] : a.ghw.work_units) units[std::string(ghw::to_string(method))] = count;
  doc["timing"] = {{"work_units", units}};
  return doc;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::string to_csv(const Analysis& a) {
  std::ostringstream os;
  os << "r,d_closed,d_hyperplane,d_charsum,d_subcode,singleton_up,plotkin,griesmer,flags\n";
  for (unsigned r = 1; r <= a.ghw.r_max; ++r) {
    os << r;
    for (auto method : ghw::kAllMethods) {
      os << ',';
      auto it = a.ghw.values[r - 1].find(method);
      if (it != a.ghw.values[r - 1].end()) os << it->second;
    }
    if (const auto* b = bounds_at(a, r))
      os << ',' << b->singleton_upper << ',' << b->plotkin << ',' << b->griesmer << ',' << flags_of(*b);
    else
      os << ",,,,";
    os << '\n';
  }
  return os.str();
}

std::string to_table(const Analysis& a) {
  const auto& field = *a.field;
  const auto& summary = a.code->summary();
  std::ostringstream os;
  os << "field      F_" << field.p() << "^" << field.m() << " (q = " << field.q() << ")\n";
  os << "modulus    " << poly_json(field.modulus()).dump() << "  (coefficients low to high)\n";
  os << "alpha      " << field.to_string(field.alpha()) << "\n";
  os << "d-mode     " << codes::to_string(a.config.d_mode) << " (d = " << a.code->defining_set().params.d << ")\n";
  os << "code       [" << summary.n << ", " << summary.k << "]" << (summary.k == 0 ? "  degenerate" : "") << "\n";
  os << "weights   ";
  for (const auto& [w, count] : summary.weight_distribution) os << ' ' << w << ":" << count;
  os << "\n\n";

  auto cell = [](std::ostringstream& o, const std::string& s, int width) { o << std::left << std::setw(width) << s; };
  cell(os, "r", 4);
  for (auto method : ghw::kAllMethods) cell(os, std::string(ghw::to_string(method)), 12);
  cell(os, "singleton", 11);
  cell(os, "plotkin", 9);
  cell(os, "griesmer", 10);
  os << "flags\n";
  for (unsigned r = 1; r <= a.ghw.r_max; ++r) {
    cell(os, std::to_string(r), 4);
    for (auto method : ghw::kAllMethods) {
      auto it = a.ghw.values[r - 1].find(method);
      cell(os, it != a.ghw.values[r - 1].end() ? std::to_string(it->second) : "-", 12);
    }
    if (const auto* b = bounds_at(a, r)) {
      cell(os, std::to_string(b->singleton_upper), 11);
      cell(os, std::to_string(b->plotkin), 9);
      cell(os, std::to_string(b->griesmer), 10);
      os << flags_of(*b);
    }
    os << "\n";
  }
  os << "\nagreement  " << (a.ghw.agreement ? "yes" : "NO") << (a.ghw.closed_advisory ? " (closed form advisory)" : "")
     << "\n";
  if (a.bounds && !a.bounds->degenerate) {
    os << "mds ranks ";
    for (auto r : a.bounds->mds_ranks) os << ' ' << r;
    os << "\n";
  }
  if (a.bound_error) os << "bounds     " << *a.bound_error << "\n";
  for (const auto& [method, why] : a.ghw.infeasible) os << "infeasible " << ghw::to_string(method) << ": " << why << "\n";
  for (const auto& v : a.ghw.invariant_violations) os << "violation  " << v << "\n";
  for (const auto& w : a.warnings) os << "warning    " << w << "\n";
  return os.str();
}

std::string render(const Analysis& a, Format format) {
  switch (format) {
    case Format::Json: return dump(to_json(a));
    case Format::Csv: return to_csv(a);
    case Format::Table: return to_table(a);
  }
  return {};
}

Json field_json(const gf::FieldCtx& field, bool histogram) {
  Json doc;
  doc["kind"] = "field";
  doc["p"] = field.p();
  doc["m"] = field.m();
  doc["q"] = field.q();
  doc["modulus"] = poly_json(field.modulus());
  doc["alpha"] = poly_json(field.coeffs(field.alpha()));
  if (histogram) {
    std::vector<std::uint64_t> fibers(field.p(), 0);
    for (std::uint32_t x = 0; x < field.q(); ++x) ++fibers[field.trace1(gf::FqElem{x})];
    doc["trace_fibers"] = fibers;
  }
  return doc;
}

Json periods_json(const gf::FieldCtx& field, std::uint32_t n) {
  const auto periods = charsums::gaussian_periods_bf(field, n);
  Json doc;
  doc["kind"] = "periods";
  doc["p"] = field.p();
  doc["m"] = field.m();
  doc["N"] = n;
  Json rows = Json::array();
  bool all_equal = true;
  for (std::uint32_t i = 0; i < n; ++i) {
    Json row = {{"i", i}, {"brute", cyc_json(periods[i])}, {"text", periods[i].to_string()}};
    if (n == 2) {
      const auto closed = charsums::gaussian_period_closed_n2(field.p(), field.m(), i);
      const bool equal = cyclo::quad_to_cyc(field.p(), closed) == periods[i];
      all_equal = all_equal && equal;
      row["closed"] = quad_json(closed);
      row["closed_text"] = closed.to_string(field.p());
      row["closed_equals_brute"] = equal;
    }
    rows.push_back(row);
  }
  doc["periods"] = rows;
  if (n == 2) doc["verdict"] = all_equal ? "closed=brute" : "MISMATCH";
  return doc;
}

Json omega_json(const gf::FieldCtx& field, std::uint32_t big_m, std::uint32_t a_log, std::optional<std::uint32_t> b_log) {
  const auto params = charsums::OmegaParams::derive(field, big_m);
  const auto a = field.exp(a_log);
  const auto b = b_log ? field.exp(*b_log) : field.zero();
  const auto brute = charsums::omega_bf(field, a, b, big_m);
  const auto closed = charsums::omega_closed(field, params, a, b);
  const auto rendered = charsums::render(field, closed);
  Json doc;
  doc["kind"] = "omega";
  doc["p"] = field.p();
  doc["m"] = field.m();
  doc["M"] = big_m;
  doc["params"] = {{"f", params.f}, {"h", params.h}, {"d", params.d}, {"first_case", params.first_case}};
  doc["a"] = poly_json(field.coeffs(a));
  doc["b"] = poly_json(field.coeffs(b));
  doc["brute"] = cyc_json(brute);
  doc["brute_text"] = brute.to_string();
  Json closed_doc = {{"period_order", closed.period_order},
                     {"period_index", closed.period_index},
                     {"period_coeff", closed.period_coeff},
                     {"period_denom", closed.period_denom}};
  if (closed.spike) closed_doc["spike"] = {{"coeff", closed.spike->coeff}, {"exponent", closed.spike->exponent}};
  doc["closed"] = closed_doc;
  doc["closed_rendered"] = cyc_json(rendered);
  doc["equal"] = rendered == brute;
  return doc;
}

std::string diagnostics_table(const Json& doc) {
  std::ostringstream os;
  const std::string kind = doc.at("kind");
  if (kind == "field") {
    os << "F_" << doc["p"] << "^" << doc["m"] << "  q = " << doc["q"] << "\n";
    os << "modulus  " << doc["modulus"].dump() << "  (coefficients low to high)\n";
    os << "alpha    " << doc["alpha"].dump() << "\n";
    if (doc.contains("trace_fibers")) os << "trace fibers " << doc["trace_fibers"].dump() << "\n";
  } else if (kind == "periods") {
    os << "Gaussian periods of order " << doc["N"] << " over F_" << doc["p"] << "^" << doc["m"] << "\n";
    for (const auto& row : doc["periods"]) {
      os << "eta_" << row["i"] << " = " << row["text"].get<std::string>() << "   " << row["brute"].dump();
      if (row.contains("closed_text")) os << "   closed " << row["closed_text"].get<std::string>();
      os << "\n";
    }
    if (doc.contains("verdict")) os << doc["verdict"].get<std::string>() << "\n";
  } else if (kind == "omega") {
    os << "Omega(a, b) over F_" << doc["p"] << "^" << doc["m"] << ", M = " << doc["M"] << "  " << doc["params"].dump()
       << "\n";
    os << "a = " << doc["a"].dump() << ", b = " << doc["b"].dump() << "\n";
    os << "brute   " << doc["brute_text"].get<std::string>() << "   " << doc["brute"].dump() << "\n";
    os << "closed  " << doc["closed"].dump() << " -> " << doc["closed_rendered"].dump() << "\n";
    os << (doc["equal"].get<bool>() ? "equal" : "NOT EQUAL") << "\n";
  }
  return os.str();
}

}  // namespace ghwlab::report
