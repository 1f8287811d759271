#pragma once

// Arithmetic in F_p and F_{p^m} backed by dense log/antilog tables.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ghwlab::gf {

/// Element of F_{p^m}. The coefficient vector (c_0, ..., c_{m-1}) of the
/// polynomial-basis representation is packed as the base-p integer
/// c_0 + c_1 p + ... + c_{m-1} p^{m-1}, so ordering packed values is the
/// base-p digit order of the coefficient vector.
struct FqElem {
  std::uint32_t packed = 0;

  bool is_zero() const noexcept { return packed == 0; }
  auto operator<=>(const FqElem&) const = default;
};

inline constexpr std::uint64_t kDefaultTableCeiling = 2'000'000;

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Polynomial over F_p, coefficients low-to-high, no trailing zeros
/// (the zero polynomial is empty).
using Poly = std::vector<std::uint32_t>;

namespace poly {
void trim(Poly& f);
Poly rem(Poly a, const Poly& mod, std::uint32_t p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& mod, std::uint32_t p);
Poly powmod(Poly base, std::uint64_t exp, const Poly& mod, std::uint32_t p);
Poly gcd(Poly a, Poly b, std::uint32_t p);
/// Rabin-style test: no roots (degree >= 2) and gcd(x^{p^i} - x, f) = 1 for i <= deg/2.
bool is_irreducible(const Poly& monic, std::uint32_t p);
}  // namespace poly

/// Immutable description of F_{p^m}. Construction is deterministic: the
/// modulus is the smallest monic irreducible of degree m (lower coefficients
/// read as a base-p number) and alpha is the smallest packed element of
/// multiplicative order q - 1.
class FieldCtx {
 public:
  static FieldCtx build(std::uint32_t p, unsigned m,
                        std::uint64_t ceiling = kDefaultTableCeiling);

  std::uint32_t p() const noexcept { return p_; }
  unsigned m() const noexcept { return m_; }
  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t order() const noexcept { return q_ - 1; }

  /// Monic modulus, m + 1 coefficients low-to-high.
  const Poly& modulus() const noexcept { return modulus_; }
  FqElem alpha() const noexcept { return alpha_; }

  FqElem zero() const noexcept { return {0}; }
  FqElem one() const noexcept { return {1}; }
  /// Residue c mod p embedded as a constant polynomial.
  FqElem scalar(std::int64_t c) const noexcept;
  FqElem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FqElem x) const;
  std::string to_string(FqElem x) const;

  FqElem add(FqElem a, FqElem b) const noexcept;
  FqElem sub(FqElem a, FqElem b) const noexcept;
  FqElem neg(FqElem a) const noexcept;
  /// Multiply by a residue of F_p.
  FqElem scale(FqElem a, std::uint32_t c) const noexcept;
  FqElem mul(FqElem a, FqElem b) const noexcept;
  FqElem inv(FqElem a) const;
  FqElem div(FqElem a, FqElem b) const;
  FqElem pow(FqElem a, std::int64_t e) const;
  /// Schoolbook multiplication modulo the modulus; table-free.
  FqElem mul_poly(FqElem a, FqElem b) const;

  /// alpha^k for any k >= 0.
  FqElem exp(std::uint64_t k) const noexcept { return antilog_[k % order()]; }
  std::uint32_t dlog(FqElem x) const;
  /// log_table lookup without the zero check; x must be nonzero.
  std::uint32_t dlog_unchecked(FqElem x) const noexcept { return log_[x.packed]; }

  /// Absolute trace to F_p as a residue in [0, p).
  std::uint32_t trace1(FqElem x) const noexcept { return trace1_[x.packed]; }
  /// Relative trace to the embedded subfield F_{p^e}; e must divide m.
  FqElem trace(FqElem x, unsigned e) const;
  /// x^{p^times}.
  FqElem frobenius(FqElem x, unsigned times = 1) const noexcept;

  /// The p^e elements of the subfield F_{p^e}, zero first, then alpha^{j (q-1)/(p^e-1)}.
  std::vector<FqElem> embed_subfield(unsigned e) const;

 private:
  FieldCtx() = default;

  std::uint32_t p_ = 0;
  unsigned m_ = 0;
  std::uint32_t q_ = 0;
  Poly modulus_;
  FqElem alpha_;
  std::vector<std::uint32_t> digit_weight_;  // p^i
  std::vector<std::uint32_t> log_;           // indexed by packed value; log_[0] unused
  std::vector<FqElem> antilog_;              // q - 1 entries
  std::vector<std::uint32_t> trace1_;        // indexed by packed value
};

}  // namespace ghwlab::gf
