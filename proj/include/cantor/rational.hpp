#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cantor {

/// Arbitrary precision integer (GMP).
using BigInt = mpz_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input value outside the domain of an operation (x >= 1, digit out of
/// range, non-periodic base sequence where one is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Parses a plain decimal integer with an optional leading '-'.
/// Throws DomainError on anything else (including whitespace).
BigInt parse_bigint(std::string_view text);

std::size_t to_index(const BigInt& value);

/// Exact rational number, always stored reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(BigInt num, BigInt den = 1);
  Rational(long num, long den = 1) : Rational(BigInt(num), BigInt(den)) {}
  Rational(int num, int den = 1) : Rational(BigInt(num), BigInt(den)) {}

  /// Accepts "p/r" or "p". Non-reduced input is reduced.
  static Rational parse(std::string_view text);

  [[nodiscard]] BigInt num() const { return value_.get_num(); }
  [[nodiscard]] BigInt den() const { return value_.get_den(); }
  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] int sign() const { return sgn(value_); }

  /// Largest integer not exceeding the value.
  [[nodiscard]] BigInt floor() const;

  /// Always "p/r", including "0/1" and "1/1".
  [[nodiscard]] std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  explicit Rational(mpq_class value);

  mpq_class value_{0};
};

}  // namespace cantor
