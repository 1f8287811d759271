#include "ghwlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <tuple>

#include "ghwlab/bounds.hpp"
#include "ghwlab/charsums.hpp"
#include "ghwlab/cyclo.hpp"
#include "ghwlab/error.hpp"
#include "ghwlab/report.hpp"
#include "ghwlab/subspace.hpp"

namespace ghwlab::verify {

using codes::DMode;
using ghw::Method;
using Hierarchy = std::vector<std::int64_t>;

std::string_view to_string(Status status) noexcept {
  switch (status) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::ExpectedDiscrepancy: return "EXPECTED_DISCREPANCY";
  }
  return "?";
}

Suite parse_suite(std::string_view text) {
  if (text == "core") return Suite::Core;
  if (text == "extended") return Suite::Extended;
  throw Error(Errc::InconsistentParams, "unknown suite '" + std::string(text) + "'");
}

namespace {

/// Collects failed expectations; an empty list means PASS.
class Probe {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <typename T>
  void equal(const T& got, const T& want, const std::string& what) {
    if (!(got == want)) failures_.push_back(what + ": got " + show(got) + ", want " + show(want));
  }
  void note(std::string text) { notes_.push_back(std::move(text)); }

  bool ok() const noexcept { return failures_.empty(); }
  std::string detail() const {
    const auto& lines = failures_.empty() ? notes_ : failures_;
    std::string out;
    for (const auto& l : lines) out += (out.empty() ? "" : "; ") + l;
    return out;
  }

  static std::string show(std::int64_t v) { return std::to_string(v); }
  static std::string show(std::size_t v) { return std::to_string(v); }
  static std::string show(unsigned v) { return std::to_string(v); }
  static std::string show(bool v) { return v ? "true" : "false"; }
  template <typename T>
  static std::string show(const std::vector<T>& h) {
    std::string out = "(";
    for (std::size_t i = 0; i < h.size(); ++i) out += (i ? "," : "") + std::to_string(h[i]);
    return out + ")";
  }
  static std::string show(const std::map<std::uint32_t, std::uint64_t>& w) {
    std::string out = "{";
    for (const auto& [weight, count] : w) out += (out.size() > 1 ? "," : "") + std::to_string(weight) + ":" + std::to_string(count);
    return out + "}";
  }
  static std::string show(const cyclo::CycInt& x) { return x.to_string(); }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

report::Analysis run(std::uint32_t p, unsigned m, DMode mode, std::vector<Method> methods, unsigned threads) {
  report::AnalysisConfig config;
  config.p = p;
  config.m = m;
  config.d_mode = mode;
  config.methods = std::move(methods);
  config.threads = threads;
  return report::analyze(config);
}

Hierarchy by_method(const report::Analysis& a, Method method) {
  Hierarchy out;
  for (const auto& row : a.ghw.values) {
    auto it = row.find(method);
    if (it == row.end()) return {};
    out.push_back(it->second);
  }
  return out;
}

std::string tag(std::uint32_t p, unsigned m) { return "(" + std::to_string(p) + "," + std::to_string(m) + ")"; }

bool has_warning(const std::vector<std::string>& warnings, std::string_view needle) {
  return std::any_of(warnings.begin(), warnings.end(),
                     [&](const std::string& w) { return w.find(needle) != std::string::npos; });
}

/// Reproduces one instance: n, k, and the hierarchy by each listed method.
void reproduce(Probe& probe, const report::Analysis& a, std::size_t n, unsigned k, const Hierarchy& want,
               const std::vector<Method>& methods) {
  probe.equal(a.ghw.n, n, "n");
  probe.equal(a.ghw.k, k, "k");
  for (auto method : methods) {
    if (a.ghw.infeasible.count(method)) {
      probe.expect(false, std::string(ghw::to_string(method)) + " infeasible: " + a.ghw.infeasible.at(method));
      continue;
    }
    probe.equal(by_method(a, method), want, std::string(ghw::to_string(method)) + " hierarchy");
  }
  probe.expect(a.ghw.invariant_violations.empty(), "invariant violations");
  probe.expect(!a.bound_error, "bound error: " + a.bound_error.value_or(""));
  probe.expect(a.bounds.has_value(), "bounds evaluated");
  probe.note("n=" + std::to_string(n) + " k=" + std::to_string(k) + " hierarchy " + Probe::show(want));
}

void check_example_one(Probe& probe, unsigned threads) {
  const auto a = run(3, 3, DMode::One, {std::begin(ghw::kAllMethods), std::end(ghw::kAllMethods)}, threads);
  reproduce(probe, a, 8, 2, {6, 8}, {std::begin(ghw::kAllMethods), std::end(ghw::kAllMethods)});
  if (!a.bounds) return;
  probe.equal(a.bounds->mds_ranks, std::vector<unsigned>{2}, "MDS ranks");
  for (const auto& b : a.bounds->ranks) {
    probe.expect(b.meets_plotkin, "Plotkin-like equality at r=" + std::to_string(b.r));
    probe.expect(b.meets_griesmer, "Griesmer-like equality at r=" + std::to_string(b.r));
  }
}

void check_example_two(Probe& probe, unsigned threads) {
  const std::vector<Method> methods{Method::Closed, Method::Hyperplane, Method::Subcode};
  const auto a = run(3, 6, DMode::One, methods, threads);
  reproduce(probe, a, 242, 5, {162, 216, 234, 240, 242}, methods);
  probe.expect(a.exit_code() == report::exit_code::kOk, "analysis exit code " + std::to_string(a.exit_code()));
  probe.expect(has_warning(a.warnings, "gcd(m,p)=1"), "gcd(m,p)=1 warning emitted");
  if (!a.bounds) return;
  probe.equal(a.bounds->mds_ranks, std::vector<unsigned>{5}, "MDS ranks");
  for (const auto& b : a.bounds->ranks) {
    probe.expect(b.meets_plotkin, "Plotkin-like equality at r=" + std::to_string(b.r));
    probe.expect(b.meets_griesmer, "Griesmer-like equality at r=" + std::to_string(b.r));
  }
  probe.note("gcd(m,p)=1 warning emitted");
}

void check_example_three(Probe& probe, unsigned threads) {
  const auto a = run(3, 2, DMode::Special, {std::begin(ghw::kAllMethods), std::end(ghw::kAllMethods)}, threads);
  reproduce(probe, a, 4, 2, {2, 4}, {std::begin(ghw::kAllMethods), std::end(ghw::kAllMethods)});
  if (a.bounds && a.bounds->ranks.size() == 2) probe.expect(a.bounds->ranks[1].meets_plotkin, "d_2 meets Plotkin-like");
}

void check_special(Probe& probe, std::uint32_t p, std::size_t n, const Hierarchy& want,
                   std::map<std::uint32_t, std::uint64_t> weights, unsigned threads) {
  const auto a = run(p, 2, DMode::Special, {Method::Closed, Method::Subcode}, threads);
  reproduce(probe, a, n, 2, want, {Method::Closed, Method::Subcode});
  probe.expect(a.ghw.agreement, "closed and subcode agree");
  probe.expect(!a.ghw.closed_advisory, "hypotheses hold");
  if (!weights.empty()) probe.equal(a.code->summary().weight_distribution, weights, "weight distribution");
}

void check_empty(Probe& probe) {
  const auto f = gf::FieldCtx::build(5, 2);
  const std::uint32_t d = f.order() / (f.p() + 1);
  std::size_t count = 0;
  for (std::uint32_t x = 1; x < f.q(); ++x) count += f.trace1(f.pow(gf::FqElem{x}, d)) == 0;
  probe.equal(count, std::size_t{0}, "direct count over the 24 nonzero elements");
  const auto a = run(5, 2, DMode::Special, {}, 1);
  probe.equal(a.ghw.n, std::size_t{0}, "n");
  probe.equal(a.ghw.k, 0u, "k");
  probe.expect(a.bounds && a.bounds->degenerate, "degenerate marker");
  probe.note("n=0 k=0 degenerate");
}

Status check_inconsistency(Probe& probe) {
  const auto f = gf::FieldCtx::build(3, 6);
  const auto params = codes::DModeParams::make(3, 6, DMode::Special);
  const auto set = codes::build_defining_set(f, params);
  const auto claimed = codes::closed_length_dim(3, 6, DMode::Special).n;
  // x^d lies in F_9, where Tr^6_2 is multiplication by m/2 = 3 = 0, so D = F_q^*
  const std::int64_t analytic = f.order();
  const auto n = static_cast<std::int64_t>(set.size());
  const auto warnings = params.hypothesis_warnings();
  const bool cites = has_warning(warnings, "gcd(m,p)=1");
  probe.expect(cites, "gcd(m,p)=1 hypothesis cited");
  probe.note("n=" + std::to_string(n) + " vs family formula " + std::to_string(claimed) + " and analytic " +
             std::to_string(analytic) + (n == analytic ? " (matches analytic)" : " (differs from analytic)") +
             "; " + (warnings.empty() ? std::string("no warning") : warnings.front()));
  if (!probe.ok()) return Status::Fail;
  return n == claimed ? Status::Pass : Status::ExpectedDiscrepancy;
}

void check_quadratic_periods(Probe& probe) {
  std::size_t fields = 0;
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u})
    for (unsigned m = 1; m <= 4; ++m) {
      if (checked_pow(p, m) > 20'000) continue;
      const auto f = gf::FieldCtx::build(p, m);
      const auto brute = charsums::gaussian_periods_bf(f, 2);
      for (unsigned i = 0; i < 2; ++i)
        probe.equal(cyclo::quad_to_cyc(p, charsums::gaussian_period_closed_n2(p, m, i)), brute[i],
                    "eta_" + std::to_string(i) + " at " + tag(p, m));
      probe.expect((brute[0] + brute[1]).as_integer() == -1, "eta_0 + eta_1 = -1 at " + tag(p, m));
      ++fields;
    }
  probe.note(std::to_string(fields) + " fields");
}

void check_omega(Probe& probe) {
  std::size_t pairs = 0;
  for (auto [p, big_m] : {std::pair{3u, 4u}, {7u, 8u}, {11u, 12u}}) {
    const auto f = gf::FieldCtx::build(p, 2);
    const auto params = charsums::OmegaParams::derive(f, big_m);
    probe.expect(params.f == 1 && params.h == 1, "f = h = 1 at " + tag(p, big_m));
    const auto periods = charsums::gaussian_periods_bf(f, params.d);
    std::size_t mismatches = 0;
    for (std::uint32_t a = 1; a < f.q(); ++a)
      for (std::uint32_t b = 0; b < f.q(); ++b, ++pairs) {
        const auto closed = charsums::omega_closed(f, params, gf::FqElem{a}, gf::FqElem{b});
        mismatches += charsums::render(f, closed, &periods) != charsums::omega_bf(f, gf::FqElem{a}, gf::FqElem{b}, big_m);
      }
    probe.equal(mismatches, std::size_t{0}, "mismatching (a,b) pairs for (p,M)=" + tag(p, big_m));
  }
  probe.note(std::to_string(pairs) + " pairs");
}

void check_period_identity(Probe& probe) {
  for (std::uint32_t p : {3u, 7u, 11u}) {
    const auto f = gf::FieldCtx::build(p, 2);
    probe.equal(charsums::sum_periods_over_prime_field(f), charsums::twice_quadratic_period_p2(p), "identity at " + tag(p, 2));
  }
  probe.note("(3,2) (7,2) (11,2)");
}

/// Small instances over both families; every feasible method must agree and
/// every hierarchy must satisfy the bounds.
const std::vector<std::tuple<std::uint32_t, unsigned, DMode>>& grid() {
  static const std::vector<std::tuple<std::uint32_t, unsigned, DMode>> g = {
      {3, 2, DMode::One},     {3, 3, DMode::One},     {3, 4, DMode::One},     {5, 2, DMode::One},
      {5, 3, DMode::One},     {5, 4, DMode::One},     {7, 2, DMode::One},     {7, 3, DMode::One},
      {11, 2, DMode::One},    {3, 2, DMode::Special}, {3, 4, DMode::Special}, {7, 2, DMode::Special},
      {7, 4, DMode::Special}, {11, 2, DMode::Special}, {19, 2, DMode::Special}, {5, 2, DMode::Special},
      {13, 2, DMode::Special}, {3, 6, DMode::Special}};
  return g;
}

void check_grid(Probe& probe, unsigned threads) {
  std::size_t compared = 0;
  for (auto [p, m, mode] : grid()) {
    const auto a = run(p, m, mode, {}, threads);
    const std::string where = tag(p, m) + " " + std::string(codes::to_string(mode));
    std::size_t feasible = 0;
    for (auto method : a.config.methods) feasible += !a.ghw.infeasible.count(method);
    probe.expect(feasible >= 2 || a.ghw.k == 0, where + ": fewer than two feasible methods");
    probe.expect(a.ghw.agreement, where + ": methods disagree");
    probe.expect(a.ghw.invariant_violations.empty(), where + ": invariant violation");
    probe.expect(!a.bound_error, where + ": " + a.bound_error.value_or(""));
    if (a.bounds)
      for (const auto& b : a.bounds->ranks) {
        probe.expect(b.plotkin_holds, where + ": Plotkin-like fails at r=" + std::to_string(b.r));
        probe.expect(b.griesmer_holds, where + ": Griesmer-like fails at r=" + std::to_string(b.r));
      }
    if (a.code->summary().min_nonzero_weight() && !a.ghw.values.empty())
      for (const auto& [method, value] : a.ghw.values[0])
        if (!(method == Method::Closed && a.ghw.closed_advisory))
          probe.expect(value == *a.code->summary().min_nonzero_weight(), where + ": d_1 differs from min weight");
    if (!a.ghw.closed_advisory && a.ghw.k > 0) {
      const auto& params = a.code->defining_set().params;
      const auto wanted = codes::closed_nonzero_weights(p, m, mode);
      for (const auto& [w, count] : a.code->summary().weight_distribution)
        probe.expect(w == 0 || std::count(wanted.begin(), wanted.end(), w), where + ": unexpected weight " + std::to_string(w));
      if (params.mode == DMode::One && a.bounds) {
        probe.equal(a.bounds->mds_ranks, std::vector<unsigned>{a.ghw.k}, where + ": MDS ranks");
        for (const auto& b : a.bounds->ranks)
          probe.expect(b.meets_plotkin && b.meets_griesmer, where + ": bounds not met at r=" + std::to_string(b.r));
      }
      if (params.mode == DMode::Special && a.bounds) {
        for (const auto& b : a.bounds->ranks)
          if (b.r <= params.s) probe.expect(b.meets_griesmer, where + ": Griesmer-like not met at r=" + std::to_string(b.r));
        if (a.bounds->ranks.size() == m) probe.expect(a.bounds->ranks.back().meets_plotkin, where + ": d_m misses Plotkin-like");
      }
    }
    ++compared;
  }
  probe.note(std::to_string(compared) + " instances agree");
}

std::uint64_t pascal(unsigned m, unsigned r, std::uint64_t p) {
  if (r == 0 || r == m) return 1;
  if (r > m) return 0;
  std::uint64_t pr = 1;
  for (unsigned i = 0; i < r; ++i) pr *= p;
  return pascal(m - 1, r - 1, p) + pr * pascal(m - 1, r, p);
}

void check_structure(Probe& probe, unsigned threads) {
  std::uint64_t subspaces = 0;
  for (std::uint32_t p : {3u, 5u})
    for (unsigned m = 1; m <= 6; ++m) {
      const auto f = gf::FieldCtx::build(p, m);
      std::vector<gf::FqElem> ambient;
      std::uint32_t unit = 1;
      for (unsigned i = 0; i < m; ++i, unit *= p) ambient.push_back(gf::FqElem{unit});
      for (unsigned r = 0; r <= m; ++r) {
        subspace::SubspaceIter it(f, ambient, r);
        std::uint64_t produced = 0;
        while (it.next()) ++produced;
        probe.equal(produced, subspace::gaussian_binomial(m, r, p), "subspaces of " + tag(p, m) + " r=" + std::to_string(r));
        probe.equal(produced, pascal(m, r, p), "q-Pascal count " + tag(p, m) + " r=" + std::to_string(r));
        subspaces += produced;
      }

      // trace fibers: each value of F_{p^e} has q / p^e preimages
      for (unsigned e = 1; e <= m; ++e) {
        if (m % e) continue;
        std::map<std::uint32_t, std::uint64_t> fibers;
        for (std::uint32_t x = 0; x < f.q(); ++x) ++fibers[f.trace(gf::FqElem{x}, e).packed];
        const std::uint64_t pe = checked_pow(p, e);
        probe.equal(static_cast<std::uint64_t>(fibers.size()), pe, "trace image size " + tag(p, m) + " e=" + std::to_string(e));
        for (const auto& [value, count] : fibers)
          probe.equal(count, f.q() / pe, "trace fiber " + tag(p, m) + " e=" + std::to_string(e));
      }

      // dlog(xy) = dlog(x) + dlog(y) mod q-1; all pairs when small, a stride otherwise
      const std::uint32_t stride = f.q() <= 729 ? 1 : 7;
      std::uint64_t bad = 0;
      for (std::uint32_t x = 1; x < f.q(); ++x)
        for (std::uint32_t y = 1; y < f.q(); y += stride) {
          const auto lhs = f.dlog(f.mul(gf::FqElem{x}, gf::FqElem{y}));
          bad += lhs != (f.dlog(gf::FqElem{x}) + f.dlog(gf::FqElem{y})) % f.order();
        }
      probe.equal(bad, std::uint64_t{0}, "dlog homomorphism failures in " + tag(p, m));
    }

  // strict monotonicity and Singleton sandwich for every grid hierarchy and method
  std::size_t hierarchies = 0;
  for (auto [p, m, mode] : grid()) {
    const auto a = run(p, m, mode, {}, threads);
    for (auto method : a.config.methods) {
      const auto h = by_method(a, method);
      if (h.empty()) continue;
      if (method == Method::Closed && a.ghw.closed_advisory) continue;
      const auto n = static_cast<std::int64_t>(a.ghw.n), k = static_cast<std::int64_t>(a.ghw.k);
      for (std::size_t i = 0; i < h.size(); ++i) {
        const auto r = static_cast<std::int64_t>(i + 1);
        probe.expect(h[i] >= r && h[i] <= n - k + r, tag(p, m) + " sandwich at r=" + std::to_string(r));
        if (i) probe.expect(h[i] > h[i - 1], tag(p, m) + " monotonicity at r=" + std::to_string(r));
      }
      ++hierarchies;
    }
  }
  probe.note(std::to_string(subspaces) + " subspaces, " + std::to_string(hierarchies) + " hierarchies");
}

struct Entry {
  const char* id;
  const char* title;
  std::function<Status(Probe&, unsigned)> body;
};

Status pass_if_ok(Probe& probe) { return probe.ok() ? Status::Pass : Status::Fail; }

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"1", "(3,3) d=1: [8,2] code, hierarchy (6,8) by all methods, 2-MDS, both bounds met",
       [](Probe& pr, unsigned t) { check_example_one(pr, t); return pass_if_ok(pr); }},
      {"2", "(3,6) d=1: [242,5] code, hierarchy (162,216,234,240,242), 5-MDS, both bounds met",
       [](Probe& pr, unsigned t) { check_example_two(pr, t); return pass_if_ok(pr); }},
      {"3", "(3,2) special: [4,2] code, hierarchy (2,4) by all methods, d_2 meets Plotkin-like",
       [](Probe& pr, unsigned t) { check_example_three(pr, t); return pass_if_ok(pr); }},
      {"4", "(7,2) special: n=12, weights {6,12}, hierarchy (6,12) closed vs subcode",
       [](Probe& pr, unsigned t) { check_special(pr, 7, 12, {6, 12}, {{0, 1}, {6, 12}, {12, 36}}, t); return pass_if_ok(pr); }},
      {"5", "(11,2) special: n=20, hierarchy (10,20) closed vs subcode",
       [](Probe& pr, unsigned t) { check_special(pr, 11, 20, {10, 20}, {}, t); return pass_if_ok(pr); }},
      {"6", "(5,2) special: empty code",
       [](Probe& pr, unsigned) { check_empty(pr); return pass_if_ok(pr); }},
      {"7", "(3,6) special: length probe against the family formula",
       [](Probe& pr, unsigned) { return check_inconsistency(pr); }},
      {"8", "quadratic Gaussian periods: closed form vs brute force, q <= 2*10^4",
       [](Probe& pr, unsigned) { check_quadratic_periods(pr); return pass_if_ok(pr); }},
      {"9", "Omega(a,b): closed form vs brute force for (p,M) in {(3,4),(7,8),(11,12)}",
       [](Probe& pr, unsigned) { check_omega(pr); return pass_if_ok(pr); }},
      {"10", "sum of eta_t(y) over F_p^* equals 2 eta_0 of F_{p^2}",
       [](Probe& pr, unsigned) { check_period_identity(pr); return pass_if_ok(pr); }},
      {"11", "structure: subspace counts, hierarchy invariants, trace fibers, dlog",
       [](Probe& pr, unsigned t) { check_structure(pr, t); return pass_if_ok(pr); }},
      {"grid", "method agreement and bounds on the small grid",
       [](Probe& pr, unsigned t) { check_grid(pr, t); return pass_if_ok(pr); }},
  };
  return entries;
}

}  // namespace

std::vector<std::string> check_ids(Suite suite) {
  if (suite == Suite::Core) return {"1", "2", "3", "4", "5", "6", "7", "10", "grid"};
  return {"1", "2", "3", "4", "5", "6", "7", "10", "grid", "8", "9", "11"};
}

CheckResult run_check(std::string_view id, unsigned threads) {
  const auto& entries = registry();
  auto it = std::find_if(entries.begin(), entries.end(), [&](const Entry& e) { return e.id == id; });
  if (it == entries.end()) throw Error(Errc::InconsistentParams, "unknown check '" + std::string(id) + "'");
  CheckResult out;
  out.id = it->id;
  out.title = it->title;
  const auto start = std::chrono::steady_clock::now();
  Probe probe;
  try {
    out.status = it->body(probe, std::max(1u, threads));
    out.detail = probe.detail();
  } catch (const std::exception& e) {
    out.status = Status::Fail;
    out.detail = e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<CheckResult> run_suite(Suite suite, unsigned threads) {
  std::vector<CheckResult> out;
  for (const auto& id : check_ids(suite)) out.push_back(run_check(id, threads));
  return out;
}

bool passed(const std::vector<CheckResult>& results) {
  return std::none_of(results.begin(), results.end(), [](const CheckResult& r) { return r.status == Status::Fail; });
}

std::string format_table(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << std::left << std::setw(5) << r.id << std::setw(21) << to_string(r.status) << std::right << std::fixed
       << std::setprecision(2) << std::setw(7) << r.seconds << "s  " << r.title << "\n";
    if (!r.detail.empty()) os << std::string(5, ' ') << r.detail << "\n";
  }
  return os.str();
}

}  // namespace ghwlab::verify
