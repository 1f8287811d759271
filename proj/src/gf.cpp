#include "ghwlab/gf.hpp"

#include <algorithm>
#include <sstream>

#include "ghwlab/error.hpp"

namespace ghwlab {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::LogOfZero: return "LogOfZero";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::NotDivisibleByTwo: return "NotDivisibleByTwo";
    case Errc::Overflow: return "Overflow";
    case Errc::InconsistentParams: return "InconsistentParams";
    case Errc::ZeroA: return "ZeroA";
    case Errc::InvalidDMode: return "InvalidDMode";
    case Errc::TooLarge: return "TooLarge";
    case Errc::RankOutOfRange: return "RankOutOfRange";
    case Errc::WrongMode: return "WrongMode";
    case Errc::NonIntegerN: return "NonIntegerN";
    case Errc::BoundViolation: return "BoundViolation";
  }
  return "Unknown";
}

namespace gf {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace poly {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // a^{p-2} mod p
  std::uint64_t result = 1, base = a % p;
  for (std::uint64_t e = p - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly rem(Poly a, const Poly& mod, std::uint32_t p) {
  trim(a);
  const std::size_t dm = mod.size() - 1;
  const std::uint64_t lead_inv = inv_mod(mod.back(), p);
  while (a.size() > dm) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = factor * mod[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& mod, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  Poly out(acc.begin(), acc.end());
  return rem(std::move(out), mod, p);
}

Poly powmod(Poly base, std::uint64_t exp, const Poly& mod, std::uint32_t p) {
  Poly result{1};
  result = rem(result, mod, p);
  base = rem(std::move(base), mod, p);
  while (exp) {
    if (exp & 1) result = mulmod(result, base, mod, p);
    exp >>= 1;
    if (exp) base = mulmod(base, base, mod, p);
  }
  return result;
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t li = inv_mod(a.back(), p);
    for (auto& c : a) c = static_cast<std::uint32_t>(c * li % p);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
    if (v == 0) return false;
  }
  Poly xpow{0, 1};
  for (std::size_t i = 1; i <= deg / 2; ++i) {
    xpow = powmod(xpow, p, f, p);
    Poly diff = xpow;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (gcd(f, diff, p).size() != 1) return false;
  }
  return true;
}

}  // namespace poly

FieldCtx FieldCtx::build(std::uint32_t p, unsigned m, std::uint64_t ceiling) {
  if (p == 2 || !is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not an odd prime");
  if (m < 1) throw Error(Errc::InconsistentParams, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > ceiling) throw Error(Errc::FieldTooLarge, "p^m exceeds the table ceiling " + std::to_string(ceiling));
  }

  FieldCtx ctx;
  ctx.p_ = p;
  ctx.m_ = m;
  ctx.q_ = static_cast<std::uint32_t>(q);
  ctx.digit_weight_.resize(m);
  ctx.digit_weight_[0] = 1;
  for (unsigned i = 1; i < m; ++i) ctx.digit_weight_[i] = ctx.digit_weight_[i - 1] * p;

  // Smallest monic irreducible of degree m.
  for (std::uint64_t lower = 0; lower < q; ++lower) {
    Poly f(m + 1);
    std::uint64_t v = lower;
    for (unsigned i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    f[m] = 1;
    if (poly::is_irreducible(f, p)) {
      ctx.modulus_ = std::move(f);
      break;
    }
  }

  const std::uint64_t order = q - 1;
  const auto factors = prime_factors(order);
  auto to_poly = [&](std::uint32_t packed) {
    Poly f(m);
    for (unsigned i = 0; i < m; ++i) {
      f[i] = packed % p;
      packed /= p;
    }
    poly::trim(f);
    return f;
  };
  auto is_one = [](const Poly& f) { return f.size() == 1 && f[0] == 1; };
  for (std::uint32_t cand = 1; cand < q; ++cand) {
    const Poly g = to_poly(cand);
    if (!is_one(poly::powmod(g, order, ctx.modulus_, p))) continue;
    bool primitive = true;
    for (auto l : factors) {
      if (is_one(poly::powmod(g, order / l, ctx.modulus_, p))) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      ctx.alpha_ = FqElem{cand};
      break;
    }
  }

  ctx.log_.assign(q, 0);
  ctx.antilog_.resize(order);
  FqElem cur = ctx.one();
  for (std::uint64_t k = 0; k < order; ++k) {
    ctx.antilog_[k] = cur;
    ctx.log_[cur.packed] = static_cast<std::uint32_t>(k);
    cur = ctx.mul_poly(cur, ctx.alpha_);
  }

  ctx.trace1_.assign(q, 0);
  for (std::uint32_t x = 1; x < q; ++x) {
    FqElem acc = ctx.zero();
    std::uint64_t lg = ctx.log_[x];
    for (unsigned i = 0; i < m; ++i) {
      acc = ctx.add(acc, ctx.antilog_[lg]);
      lg = lg * p % order;
    }
    ctx.trace1_[x] = acc.packed;  // lies in F_p, i.e. a constant polynomial
  }
  return ctx;
}

FqElem FieldCtx::scalar(std::int64_t c) const noexcept {
  const std::int64_t r = ((c % p_) + p_) % p_;
  return FqElem{static_cast<std::uint32_t>(r)};
}

FqElem FieldCtx::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != m_) throw Error(Errc::LengthMismatch, "coefficient vector must have length m");
  std::uint32_t packed = 0;
  for (unsigned i = m_; i-- > 0;) {
    if (coeffs[i] >= p_) throw Error(Errc::InconsistentParams, "coefficient out of range");
    packed = packed * p_ + coeffs[i];
  }
  return FqElem{packed};
}

std::vector<std::uint32_t> FieldCtx::coeffs(FqElem x) const {
  std::vector<std::uint32_t> out(m_);
  std::uint32_t v = x.packed;
  for (unsigned i = 0; i < m_; ++i) {
    out[i] = v % p_;
    v /= p_;
  }
  return out;
}

std::string FieldCtx::to_string(FqElem x) const {
  std::ostringstream os;
  os << '[';
  const auto c = coeffs(x);
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

FqElem FieldCtx::add(FqElem a, FqElem b) const noexcept {
  std::uint32_t x = a.packed, y = b.packed, out = 0;
  for (unsigned i = 0; i < m_ && (x | y); ++i) {
    std::uint32_t d = x % p_ + y % p_;
    if (d >= p_) d -= p_;
    out += d * digit_weight_[i];
    x /= p_;
    y /= p_;
  }
  return FqElem{out};
}

FqElem FieldCtx::neg(FqElem a) const noexcept {
  std::uint32_t x = a.packed, out = 0;
  for (unsigned i = 0; i < m_ && x; ++i) {
    const std::uint32_t d = x % p_;
    if (d) out += (p_ - d) * digit_weight_[i];
    x /= p_;
  }
  return FqElem{out};
}

FqElem FieldCtx::sub(FqElem a, FqElem b) const noexcept { return add(a, neg(b)); }

FqElem FieldCtx::scale(FqElem a, std::uint32_t c) const noexcept {
  std::uint32_t x = a.packed, out = 0;
  c %= p_;
  for (unsigned i = 0; i < m_ && x; ++i) {
    const std::uint32_t d = static_cast<std::uint32_t>(std::uint64_t{x % p_} * c % p_);
    out += d * digit_weight_[i];
    x /= p_;
  }
  return FqElem{out};
}

FqElem FieldCtx::mul(FqElem a, FqElem b) const noexcept {
  if (a.is_zero() || b.is_zero()) return zero();
  std::uint32_t s = log_[a.packed] + log_[b.packed];
  if (s >= order()) s -= order();
  return antilog_[s];
}

FqElem FieldCtx::mul_poly(FqElem a, FqElem b) const {
  const auto ca = coeffs(a), cb = coeffs(b);
  Poly pa(ca.begin(), ca.end()), pb(cb.begin(), cb.end());
  poly::trim(pa);
  poly::trim(pb);
  Poly r = poly::mulmod(pa, pb, modulus_, p_);
  r.resize(m_, 0);
  return from_coeffs(r);
}

FqElem FieldCtx::inv(FqElem a) const {
  if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  const std::uint32_t lg = log_[a.packed];
  return antilog_[lg == 0 ? 0 : order() - lg];
}

FqElem FieldCtx::div(FqElem a, FqElem b) const { return mul(a, inv(b)); }

FqElem FieldCtx::pow(FqElem a, std::int64_t e) const {
  if (a.is_zero()) {
    if (e > 0) return zero();
    if (e == 0) return one();
    throw Error(Errc::DivisionByZero, "negative power of zero");
  }
  const std::int64_t n = order();
  const std::int64_t k = ((std::int64_t{log_[a.packed]} * (e % n)) % n + n) % n;
  return antilog_[static_cast<std::size_t>(k)];
}

std::uint32_t FieldCtx::dlog(FqElem x) const {
  if (x.is_zero()) throw Error(Errc::LogOfZero, "discrete log of zero");
  return log_[x.packed];
}

FqElem FieldCtx::frobenius(FqElem x, unsigned times) const noexcept {
  if (x.is_zero()) return x;
  std::uint64_t lg = log_[x.packed];
  for (unsigned i = 0; i < times; ++i) lg = lg * p_ % order();
  return antilog_[lg];
}

FqElem FieldCtx::trace(FqElem x, unsigned e) const {
  if (e == 0 || m_ % e != 0) throw Error(Errc::NotADivisor, std::to_string(e) + " does not divide m");
  if (e == 1) return FqElem{trace1(x)};
  FqElem acc = zero();
  FqElem term = x;
  for (unsigned i = 0; i < m_ / e; ++i) {
    acc = add(acc, term);
    term = frobenius(term, e);
  }
  return acc;
}

std::vector<FqElem> FieldCtx::embed_subfield(unsigned e) const {
  if (e == 0 || m_ % e != 0) throw Error(Errc::NotADivisor, std::to_string(e) + " does not divide m");
  std::uint64_t sub_q = 1;
  for (unsigned i = 0; i < e; ++i) sub_q *= p_;
  const std::uint64_t step = order() / (sub_q - 1);
  std::vector<FqElem> out;
  out.reserve(sub_q);
  out.push_back(zero());
  for (std::uint64_t j = 0; j + 1 < sub_q; ++j) out.push_back(antilog_[j * step]);
  return out;
}

}  // namespace gf
}  // namespace ghwlab
