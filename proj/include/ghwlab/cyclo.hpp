#pragma once

// Exact arithmetic in Z[zeta_p] and in the quadratic subring spanned by
// 1 and sqrt(p*), p* = (-1)^{(p-1)/2} p.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ghwlab::cyclo {

/// Element of Z[zeta_p] stored as p coefficients of zeta^0 .. zeta^{p-1}.
/// The canonical form has a zero coefficient on zeta^{p-1}; since
/// 1 + zeta + ... + zeta^{p-1} = 0 this is obtained by subtracting the last
/// coefficient from every coordinate. Canonical forms are unique.
class CycInt {
 public:
  CycInt() = default;
  /// Canonicalizes `coeffs`; p = coeffs.size().
  explicit CycInt(std::vector<std::int64_t> coeffs);

  static CycInt zero(std::uint32_t p) { return CycInt(std::vector<std::int64_t>(p, 0)); }
  static CycInt integer(std::uint32_t p, std::int64_t value);
  /// zeta^e
  static CycInt root(std::uint32_t p, std::int64_t e);

  std::uint32_t p() const noexcept { return static_cast<std::uint32_t>(coeffs_.size()); }
  std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }
  std::int64_t operator[](std::size_t j) const { return coeffs_[j]; }

  bool is_zero() const noexcept;
  /// Set when the value lies in Z.
  std::optional<std::int64_t> as_integer() const noexcept;

  bool operator==(const CycInt&) const = default;
  std::string to_string() const;

 private:
  std::vector<std::int64_t> coeffs_;
};

void canonicalize(std::vector<std::int64_t>& coeffs);

/// Sum_j counts[j] zeta^j.
CycInt cyc_from_counts(std::uint32_t p, std::span<const std::int64_t> counts);

CycInt cyc_add(const CycInt& a, const CycInt& b);
CycInt cyc_sub(const CycInt& a, const CycInt& b);
CycInt cyc_mul(const CycInt& a, const CycInt& b);
CycInt cyc_scale(const CycInt& a, std::int64_t k);
CycInt cyc_neg(const CycInt& a);
/// Exact division by a nonzero integer; throws NotDivisibleByTwo if k = 2 and
/// the element is not divisible, InconsistentParams for other k.
CycInt cyc_div_exact(const CycInt& a, std::int64_t k);

inline CycInt operator+(const CycInt& a, const CycInt& b) { return cyc_add(a, b); }
inline CycInt operator-(const CycInt& a, const CycInt& b) { return cyc_sub(a, b); }
inline CycInt operator*(const CycInt& a, const CycInt& b) { return cyc_mul(a, b); }

/// Quadratic Gauss sum Sum_{x in F_p} zeta^{x^2}; its square is p*.
CycInt gauss_sum(std::uint32_t p);

/// p* = (-1)^{(p-1)/2} p.
std::int64_t p_star(std::uint32_t p);

/// (u + v sqrt(p*)) / 2.
struct QuadVal {
  std::int64_t u = 0;
  std::int64_t v = 0;

  bool is_rational() const noexcept { return v == 0; }
  bool operator==(const QuadVal&) const = default;
  std::string to_string(std::uint32_t p) const;
};

QuadVal quad_add(QuadVal a, QuadVal b);
/// Product in (1/2)Z[sqrt(p*)]; throws NotDivisibleByTwo when the result
/// leaves the half-integer lattice.
QuadVal quad_mul(std::uint32_t p, QuadVal a, QuadVal b);

/// (u + v * gauss_sum(p)) / 2 inside Z[zeta_p].
CycInt quad_to_cyc(std::uint32_t p, QuadVal x);

}  // namespace ghwlab::cyclo
