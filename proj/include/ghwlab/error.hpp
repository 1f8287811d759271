#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ghwlab {

enum class Errc {
  NotPrime,
  FieldTooLarge,
  DivisionByZero,
  NotADivisor,
  LogOfZero,
  LengthMismatch,
  FieldMismatch,
  NotDivisibleByTwo,
  Overflow,
  InconsistentParams,
  ZeroA,
  InvalidDMode,
  TooLarge,
  RankOutOfRange,
  WrongMode,
  NonIntegerN,
  BoundViolation,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Overflow-checked machine integer helpers.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(Errc::Overflow, "addition overflow");
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw Error(Errc::Overflow, "subtraction overflow");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(Errc::Overflow, "multiplication overflow");
  return out;
}

inline std::int64_t checked_pow(std::int64_t base, unsigned exp) {
  std::int64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

}  // namespace ghwlab
