#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/rational.hpp"
#include "cantor/sequences.hpp"

namespace cantor {

/// Residue state of the digit recurrence after n steps: rho / r = sigma^n(p/r).
struct ExtractionState {
  std::size_t n = 0;
  BigInt rho;
};

/// Full record of step n computed from the big-integer formulas.
struct ExtractionTrace {
  std::size_t n = 0;
  BigInt delta_big;  ///< p Q_n - r varsigma_n
  BigInt varsigma;   ///< delta_1 q_2..q_n + ... + delta_{n-1} q_n
  BigInt digit;      ///< floor(delta_big / r)
  BigInt rho;        ///< delta_big - r digit
};

/// Throws DomainError unless 0 <= x < 1.
void require_expansion_input(const Rational& x);

/// Streaming digit extraction for a rational in [0, 1).
///
/// Only the residue rho_n in [0, r) is carried between steps:
///   delta_n = floor(q_n rho_{n-1} / r),  rho_n = q_n rho_{n-1} mod r,  rho_0 = p.
/// Digits come out in the terminating (trailing zeros) form for Q-rationals.
class DigitStream {
 public:
  DigitStream(const Rational& x, BaseSequenceSpec spec);

  /// Emits the next digit delta_{n+1} and advances the state.
  BigInt next();

  /// Emits the next `count` digits.
  std::vector<BigInt> take(std::size_t count);

  [[nodiscard]] const ExtractionState& state() const { return state_; }
  [[nodiscard]] const BigInt& denominator() const { return den_; }
  [[nodiscard]] const BaseSequenceSpec& spec() const { return spec_; }

  /// True once rho_n = 0; every later digit is then 0.
  [[nodiscard]] bool terminated() const { return sgn(state_.rho) == 0; }

 private:
  BaseSequenceSpec spec_;
  BigInt den_;
  ExtractionState state_;
};

[[nodiscard]] DigitStream digit_stream(const Rational& x, const BaseSequenceSpec& spec);

/// First `count` digits of x.
[[nodiscard]] std::vector<BigInt> expand_prefix(const Rational& x, const BaseSequenceSpec& spec, std::size_t count);

/// Step n (n >= 1) from the closed formulas, without the residue recurrence.
/// The earlier digits feeding varsigma_n come from delta_i = floor(Q_i x) - q_i floor(Q_{i-1} x).
[[nodiscard]] ExtractionTrace digits_direct(const Rational& x, const BaseSequenceSpec& spec, std::size_t n);

/// sigma^n(x) = rho_n / r.
[[nodiscard]] Rational shift_n(const Rational& x, const BaseSequenceSpec& spec, std::size_t n);

/// Checks x == sum_{i<=n} delta_i / Q_i + sigma^n(x) / Q_n exactly.
[[nodiscard]] bool verify_decomposition(const Rational& x, const BaseSequenceSpec& spec, std::size_t n);

/// Digits 0-9 as single characters, larger digits bracketed: "035229[11]4".
[[nodiscard]] std::string render_digits(std::span<const BigInt> digits);

/// Inverse of render_digits. Throws DomainError on malformed input.
[[nodiscard]] std::vector<BigInt> parse_digits(std::string_view text);

}  // namespace cantor
