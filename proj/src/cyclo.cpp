#include "ghwlab/cyclo.hpp"

#include <sstream>

#include "ghwlab/error.hpp"

namespace ghwlab::cyclo {

void canonicalize(std::vector<std::int64_t>& coeffs) {
  if (coeffs.empty()) return;
  const std::int64_t last = coeffs.back();
  if (last == 0) return;
  for (auto& c : coeffs) c = checked_sub(c, last);
}

CycInt::CycInt(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { canonicalize(coeffs_); }

CycInt CycInt::integer(std::uint32_t p, std::int64_t value) {
  std::vector<std::int64_t> c(p, 0);
  c[0] = value;
  return CycInt(std::move(c));
}

CycInt CycInt::root(std::uint32_t p, std::int64_t e) {
  const std::int64_t pp = p;
  std::vector<std::int64_t> c(p, 0);
  c[static_cast<std::size_t>(((e % pp) + pp) % pp)] = 1;
  return CycInt(std::move(c));
}

bool CycInt::is_zero() const noexcept {
  for (auto c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::optional<std::int64_t> CycInt::as_integer() const noexcept {
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) return std::nullopt;
  return coeffs_.empty() ? 0 : coeffs_[0];
}

std::string CycInt::to_string() const {
  if (auto v = as_integer()) return std::to_string(*v);
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const std::int64_t c = coeffs_[j];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << '-';
    const std::int64_t mag = c < 0 ? -c : c;
    if (j == 0) os << mag;
    else {
      if (mag != 1) os << mag << '*';
      os << "z^" << j;
    }
    first = false;
  }
  return os.str();
}

namespace {

void require_same(const CycInt& a, const CycInt& b) {
  if (a.p() != b.p()) throw Error(Errc::FieldMismatch, "cyclotomic elements over different p");
}

}  // namespace

CycInt cyc_from_counts(std::uint32_t p, std::span<const std::int64_t> counts) {
  if (counts.size() != p) throw Error(Errc::LengthMismatch, "counts must have length p");
  return CycInt(std::vector<std::int64_t>(counts.begin(), counts.end()));
}

CycInt cyc_add(const CycInt& a, const CycInt& b) {
  require_same(a, b);
  std::vector<std::int64_t> c(a.p());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = checked_add(a[j], b[j]);
  return CycInt(std::move(c));
}

CycInt cyc_sub(const CycInt& a, const CycInt& b) {
  require_same(a, b);
  std::vector<std::int64_t> c(a.p());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = checked_sub(a[j], b[j]);
  return CycInt(std::move(c));
}

CycInt cyc_mul(const CycInt& a, const CycInt& b) {
  require_same(a, b);
  const std::size_t p = a.p();
  std::vector<std::int64_t> c(p, 0);
  for (std::size_t i = 0; i < p; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < p; ++j) {
      if (b[j] == 0) continue;
      const std::size_t k = (i + j) % p;
      c[k] = checked_add(c[k], checked_mul(a[i], b[j]));
    }
  }
  return CycInt(std::move(c));
}

CycInt cyc_scale(const CycInt& a, std::int64_t k) {
  std::vector<std::int64_t> c(a.p());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = checked_mul(a[j], k);
  return CycInt(std::move(c));
}

CycInt cyc_neg(const CycInt& a) { return cyc_scale(a, -1); }

CycInt cyc_div_exact(const CycInt& a, std::int64_t k) {
  if (k == 0) throw Error(Errc::DivisionByZero, "division of cyclotomic integer by 0");
  std::vector<std::int64_t> c(a.p());
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (a[j] % k != 0) {
      if (k == 2) throw Error(Errc::NotDivisibleByTwo, a.to_string() + " is not divisible by 2");
      throw Error(Errc::InconsistentParams, a.to_string() + " is not divisible by " + std::to_string(k));
    }
    c[j] = a[j] / k;
  }
  return CycInt(std::move(c));
}

CycInt gauss_sum(std::uint32_t p) {
  std::vector<std::int64_t> counts(p, 0);
  for (std::uint64_t x = 0; x < p; ++x) ++counts[x * x % p];
  return CycInt(std::move(counts));
}

std::int64_t p_star(std::uint32_t p) {
  return (p % 4 == 1) ? std::int64_t{p} : -std::int64_t{p};
}

std::string QuadVal::to_string(std::uint32_t p) const {
  std::ostringstream os;
  os << "(" << u;
  if (v != 0) os << (v > 0 ? " + " : " - ") << (v > 0 ? v : -v) << "*sqrt(" << p_star(p) << ")";
  os << ")/2";
  return os.str();
}

QuadVal quad_add(QuadVal a, QuadVal b) { return {checked_add(a.u, b.u), checked_add(a.v, b.v)}; }

QuadVal quad_mul(std::uint32_t p, QuadVal a, QuadVal b) {
  // (u1 + v1 r)(u2 + v2 r)/4 with r^2 = p*
  const std::int64_t u = checked_add(checked_mul(a.u, b.u), checked_mul(checked_mul(a.v, b.v), p_star(p)));
  const std::int64_t v = checked_add(checked_mul(a.u, b.v), checked_mul(a.v, b.u));
  if (u % 2 != 0 || v % 2 != 0) throw Error(Errc::NotDivisibleByTwo, "product leaves (1/2)Z[sqrt(p*)]");
  return {u / 2, v / 2};
}

CycInt quad_to_cyc(std::uint32_t p, QuadVal x) {
  const CycInt twice = cyc_add(CycInt::integer(p, x.u), cyc_scale(gauss_sum(p), x.v));
  return cyc_div_exact(twice, 2);
}

}  // namespace ghwlab::cyclo
