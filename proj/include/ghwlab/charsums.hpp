#pragma once

// Cyclotomic classes, Gaussian periods and the exponential sum
// Omega(a, b) = Sum_{x != 0} chi(a x^{(q-1)/M} + b x), each available both
// by direct summation and in closed form where one is known.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ghwlab/cyclo.hpp"
#include "ghwlab/gf.hpp"

namespace ghwlab::charsums {

using cyclo::CycInt;
using cyclo::QuadVal;
using gf::FieldCtx;
using gf::FqElem;

/// C_i^{(N,q)} = alpha^i <alpha^N>.
struct CycloClass {
  std::uint32_t order = 1;  // N
  std::uint32_t index = 0;  // i

  std::uint32_t size(const FieldCtx& ctx) const { return ctx.order() / order; }
  std::vector<FqElem> elements(const FieldCtx& ctx) const;
};

CycloClass cyclo_class(const FieldCtx& ctx, std::uint32_t n, std::uint32_t i);

/// dlog(x) mod N.
std::uint32_t class_index(const FieldCtx& ctx, std::uint32_t n, FqElem x);

/// Sum over `xs` of chi(x), evaluated through trace-fiber counts.
CycInt character_sum(const FieldCtx& ctx, std::span<const FqElem> xs);

CycInt gaussian_period_bf(const FieldCtx& ctx, std::uint32_t n, std::uint32_t i);
/// All N periods of order N in one pass over F_q^*.
std::vector<CycInt> gaussian_periods_bf(const FieldCtx& ctx, std::uint32_t n);

/// Closed form of eta_i^{(2,p^m)} as (u + v sqrt(p*))/2.
QuadVal gaussian_period_closed_n2(std::uint32_t p, unsigned m, unsigned i);

CycInt omega_bf(const FieldCtx& ctx, FqElem a, FqElem b, std::uint32_t big_m);

/// Parameters of the closed form for Omega: q = p^{2fh} with f the least
/// positive integer such that p^f = -1 (mod M) and gcd(h, p) = 1.
struct OmegaParams {
  std::uint32_t big_m = 0;
  unsigned f = 0;
  unsigned h = 0;
  std::uint32_t d = 0;     // (q-1)/M
  bool first_case = false; // p, h and (p^f+1)/M all odd

  /// Throws InconsistentParams if no admissible (f, h) exists for the field.
  static OmegaParams derive(const FieldCtx& ctx, std::uint32_t big_m);
};

/// Closed-form value of Omega(a, b):
///   spike.coeff * zeta^{spike.exponent} + period_coeff * eta_t^{(d,q)} / period_denom
/// The period of order d is not quadratic in general, so it is kept
/// symbolic and only expanded by render().
struct OmegaClosed {
  struct Spike {
    std::int64_t coeff = 0;
    std::uint32_t exponent = 0;
    bool operator==(const Spike&) const = default;
  };

  std::optional<Spike> spike;
  std::int64_t period_coeff = 0;
  std::int64_t period_denom = 1;
  std::uint32_t period_order = 1;  // d
  std::uint32_t period_index = 0;  // t with a in C_t^{(d,q)}
};

OmegaClosed omega_closed(const FieldCtx& ctx, const OmegaParams& params, FqElem a, FqElem b);

/// Expands an OmegaClosed into Z[zeta_p]. `periods`, when supplied, must be
/// gaussian_periods_bf(ctx, value.period_order).
CycInt render(const FieldCtx& ctx, const OmegaClosed& value,
              const std::vector<CycInt>* periods = nullptr);

/// Sum_{y in F_p^*} eta_{t(y)}^{(d,q)} with d = (q-1)/(p+1) and t(y) the
/// class of y; requires m even.
CycInt sum_periods_over_prime_field(const FieldCtx& ctx);

/// 2 eta_0^{(2,p^2)}, summed directly over a freshly built F_{p^2}.
CycInt twice_quadratic_period_p2(std::uint32_t p);

}  // namespace ghwlab::charsums
