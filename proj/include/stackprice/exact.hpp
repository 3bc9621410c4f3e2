#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace stackprice {

/// Arbitrary-precision rational with a single +infinity sentinel.
///
/// Finite values are kept canonical (lowest terms, positive denominator) by
/// GMP. Infinity is greater than every finite value and absorbs addition of
/// finite values. Operations without a defined result (inf - inf, inf * 0,
/// negation of inf, x / 0) throw ArithmeticError. There is no -infinity.
class ExactNumber {
 public:
  ExactNumber() = default;
  ExactNumber(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit ExactNumber(mpq_class value);
  ExactNumber(long num, long den);

  static ExactNumber infinity();

  /// Accepts "inf", integers ("-3"), decimals ("5.25") and fractions
  /// ("21/4"). Decoding is exact. Throws ParseError.
  static ExactNumber parse(std::string_view text);

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  bool is_zero() const { return !infinite_ && sgn(value_) == 0; }
  int sign() const { return infinite_ ? 1 : sgn(value_); }

  /// Underlying rational; throws ArithmeticError on infinity.
  const mpq_class& rational() const;

  /// Exact text: "inf", "5", "-21/4".
  std::string str() const;
  /// Decimal rendering with `digits` significant digits.
  std::string decimal(int digits = 6) const;

  ExactNumber& operator+=(const ExactNumber& rhs);
  ExactNumber& operator-=(const ExactNumber& rhs);
  ExactNumber& operator*=(const ExactNumber& rhs);
  ExactNumber& operator/=(const ExactNumber& rhs);

  friend ExactNumber operator+(ExactNumber lhs, const ExactNumber& rhs) { return lhs += rhs; }
  friend ExactNumber operator-(ExactNumber lhs, const ExactNumber& rhs) { return lhs -= rhs; }
  friend ExactNumber operator*(ExactNumber lhs, const ExactNumber& rhs) { return lhs *= rhs; }
  friend ExactNumber operator/(ExactNumber lhs, const ExactNumber& rhs) { return lhs /= rhs; }
  ExactNumber operator-() const;

  friend bool operator==(const ExactNumber& a, const ExactNumber& b);
  friend std::strong_ordering operator<=>(const ExactNumber& a, const ExactNumber& b);

 private:
  mpq_class value_{0};
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const ExactNumber& x);

/// base^exponent for finite non-zero base (negative exponents allowed).
ExactNumber pow(const ExactNumber& base, int exponent);

/// H_n = 1 + 1/2 + ... + 1/n; H_0 = 0.
ExactNumber harmonic(int n);

ExactNumber min(const ExactNumber& a, const ExactNumber& b);
ExactNumber max(const ExactNumber& a, const ExactNumber& b);

/// Least common multiple of the denominator of a finite value with `acc`.
mpz_class lcm_denominator(const mpz_class& acc, const ExactNumber& x);

/// 64-bit FNV-1a; used for content digests that must agree across platforms.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace stackprice
