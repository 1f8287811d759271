#include "ghwlab/charsums.hpp"

#include <numeric>

#include "ghwlab/error.hpp"

namespace ghwlab::charsums {

namespace {

void require_divides(const FieldCtx& ctx, std::uint32_t n) {
  if (n == 0 || ctx.order() % n != 0)
    throw Error(Errc::NotADivisor, std::to_string(n) + " does not divide q-1 = " + std::to_string(ctx.order()));
}

}  // namespace

std::vector<FqElem> CycloClass::elements(const FieldCtx& ctx) const {
  std::vector<FqElem> out;
  out.reserve(size(ctx));
  for (std::uint64_t k = index; k < ctx.order(); k += order) out.push_back(ctx.exp(k));
  return out;
}

CycloClass cyclo_class(const FieldCtx& ctx, std::uint32_t n, std::uint32_t i) {
  require_divides(ctx, n);
  if (i >= n) throw Error(Errc::RankOutOfRange, "class index out of range");
  return {n, i};
}

std::uint32_t class_index(const FieldCtx& ctx, std::uint32_t n, FqElem x) {
  require_divides(ctx, n);
  return ctx.dlog(x) % n;
}

CycInt character_sum(const FieldCtx& ctx, std::span<const FqElem> xs) {
  std::vector<std::int64_t> counts(ctx.p(), 0);
  for (auto x : xs) ++counts[ctx.trace1(x)];
  return cyclo::cyc_from_counts(ctx.p(), counts);
}

CycInt gaussian_period_bf(const FieldCtx& ctx, std::uint32_t n, std::uint32_t i) {
  const auto cls = cyclo_class(ctx, n, i);
  return character_sum(ctx, cls.elements(ctx));
}

std::vector<CycInt> gaussian_periods_bf(const FieldCtx& ctx, std::uint32_t n) {
  require_divides(ctx, n);
  std::vector<std::vector<std::int64_t>> counts(n, std::vector<std::int64_t>(ctx.p(), 0));
  for (std::uint32_t k = 0; k < ctx.order(); ++k) ++counts[k % n][ctx.trace1(ctx.exp(k))];
  std::vector<CycInt> out;
  out.reserve(n);
  for (auto& c : counts) out.push_back(cyclo::cyc_from_counts(ctx.p(), c));
  return out;
}

QuadVal gaussian_period_closed_n2(std::uint32_t p, unsigned m, unsigned i) {
  if (i > 1) throw Error(Errc::RankOutOfRange, "quadratic periods are indexed by 0 and 1");
  // eta_0 = (-1 + (-1)^{m-1} sqrt(q)) / 2                  for p = 1 (mod 4)
  //       = (-1 + (-1)^{m-1} (sqrt(-1))^m sqrt(q)) / 2     for p = 3 (mod 4)
  // sqrt(q) = p^{m/2} (m even) or p^{(m-1)/2} sqrt(p) (m odd); for p = 3 (mod 4)
  // and odd m the factor i sqrt(p) is sqrt(-p) = sqrt(p*).
  const std::int64_t sign_m1 = (m % 2 == 1) ? 1 : -1;  // (-1)^{m-1}
  QuadVal eta0{-1, 0};
  if (m % 2 == 0) {
    const std::int64_t root_q = checked_pow(p, m / 2);
    std::int64_t sign = sign_m1;
    if (p % 4 == 3) sign *= ((m / 2) % 2 == 0) ? 1 : -1;  // i^m = (-1)^{m/2}
    eta0.u = checked_add(-1, checked_mul(sign, root_q));
  } else {
    const std::int64_t coeff = checked_pow(p, (m - 1) / 2);
    std::int64_t sign = sign_m1;
    if (p % 4 == 3) sign *= (((m - 1) / 2) % 2 == 0) ? 1 : -1;  // i^m = i (-1)^{(m-1)/2}
    eta0.v = checked_mul(sign, coeff);
  }
  if (i == 0) return eta0;
  return QuadVal{checked_sub(-2, eta0.u), -eta0.v};
}

CycInt omega_bf(const FieldCtx& ctx, FqElem a, FqElem b, std::uint32_t big_m) {
  require_divides(ctx, big_m);
  const std::uint64_t d = ctx.order() / big_m;
  std::vector<std::int64_t> counts(ctx.p(), 0);
  for (std::uint64_t k = 0; k < ctx.order(); ++k) {
    const FqElem x = ctx.exp(k);
    const FqElem arg = ctx.add(ctx.mul(a, ctx.exp(k * d % ctx.order())), ctx.mul(b, x));
    ++counts[ctx.trace1(arg)];
  }
  return cyclo::cyc_from_counts(ctx.p(), counts);
}

OmegaParams OmegaParams::derive(const FieldCtx& ctx, std::uint32_t big_m) {
  if (big_m < 2) throw Error(Errc::InconsistentParams, "M must be at least 2");
  require_divides(ctx, big_m);
  const std::uint32_t p = ctx.p();
  unsigned f = 0;
  std::uint64_t pf = 1;
  for (unsigned e = 1; e <= 2 * big_m; ++e) {
    pf = pf * p % big_m;
    if ((pf + 1) % big_m == 0) {
      f = e;
      break;
    }
  }
  if (f == 0) throw Error(Errc::InconsistentParams, "no f with p^f = -1 (mod M)");
  if (ctx.m() % (2 * f) != 0) throw Error(Errc::InconsistentParams, "q is not of the form p^{2fh}");
  const unsigned h = ctx.m() / (2 * f);
  if (std::gcd<std::uint64_t, std::uint64_t>(h, p) != 1) throw Error(Errc::InconsistentParams, "gcd(h, p) != 1");

  OmegaParams out;
  out.big_m = big_m;
  out.f = f;
  out.h = h;
  out.d = ctx.order() / big_m;
  const std::int64_t pf_full = checked_pow(p, f);
  const std::int64_t ratio = (pf_full + 1) / big_m;
  out.first_case = (p % 2 == 1) && (h % 2 == 1) && (ratio % 2 == 1);
  return out;
}

OmegaClosed omega_closed(const FieldCtx& ctx, const OmegaParams& params, FqElem a, FqElem b) {
  if (a.is_zero()) throw Error(Errc::ZeroA, "Omega requires a != 0");
  if (params.big_m == 0 || ctx.order() % params.big_m != 0 || params.d != ctx.order() / params.big_m ||
      ctx.m() != 2 * params.f * params.h)
    throw Error(Errc::InconsistentParams, "Omega parameters do not match the field");

  OmegaClosed out;
  out.period_order = params.d;
  out.period_index = class_index(ctx, params.d, a);
  if (b.is_zero()) {
    out.period_coeff = params.d;
    out.period_denom = 1;
    return out;
  }

  const std::int64_t root_q = checked_pow(ctx.p(), params.f * params.h);
  const std::uint32_t delta = class_index(ctx, params.big_m, b);
  // alpha^{-d delta}
  const std::uint64_t shift = (ctx.order() - (std::uint64_t{params.d} * delta) % ctx.order()) % ctx.order();
  const FqElem twist = ctx.mul(a, ctx.exp(shift));
  out.period_denom = params.big_m;
  if (params.first_case) {
    out.spike = OmegaClosed::Spike{root_q, ctx.trace1(ctx.neg(twist))};
    out.period_coeff = -(root_q + 1);
  } else {
    const std::int64_t sign_h = (params.h % 2 == 0) ? 1 : -1;  // (-1)^h
    out.spike = OmegaClosed::Spike{-sign_h * root_q, ctx.trace1(twist)};
    out.period_coeff = sign_h * root_q - 1;
  }
  return out;
}

CycInt render(const FieldCtx& ctx, const OmegaClosed& value, const std::vector<CycInt>* periods) {
  const CycInt eta = periods ? (*periods)[value.period_index]
                             : gaussian_period_bf(ctx, value.period_order, value.period_index);
  CycInt out = cyclo::cyc_div_exact(cyclo::cyc_scale(eta, value.period_coeff), value.period_denom);
  if (value.spike)
    out = out + cyclo::cyc_scale(CycInt::root(ctx.p(), value.spike->exponent), value.spike->coeff);
  return out;
}

CycInt sum_periods_over_prime_field(const FieldCtx& ctx) {
  if (ctx.m() % 2 != 0) throw Error(Errc::InconsistentParams, "m must be even");
  const std::uint32_t d = ctx.order() / (ctx.p() + 1);
  const auto periods = gaussian_periods_bf(ctx, d);
  CycInt acc = CycInt::zero(ctx.p());
  for (std::uint32_t y = 1; y < ctx.p(); ++y) acc = acc + periods[class_index(ctx, d, ctx.scalar(y))];
  return acc;
}

CycInt twice_quadratic_period_p2(std::uint32_t p) {
  const auto small = FieldCtx::build(p, 2);
  return cyclo::cyc_scale(gaussian_period_bf(small, 2, 0), 2);
}

}  // namespace ghwlab::charsums
