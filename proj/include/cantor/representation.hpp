#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cantor/rational.hpp"
#include "cantor/sequences.hpp"

namespace cantor {

/// A digit that does not satisfy 0 <= d_k <= q_k - 1.
class DigitRangeError : public DomainError {
 public:
  DigitRangeError(std::size_t position, const BigInt& digit, const BigInt& base);
  /// 1-based position k of the offending digit.
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Checks 0 <= digits[i] < q_{offset + i + 1} for every i.
void check_digit_bounds(std::span<const BigInt> digits, const BaseSequenceSpec& spec, std::size_t offset = 0);

namespace repr {

/// Terminating expansion; never stores trailing zeros.
struct Finite {
  std::vector<BigInt> digits;
};

/// preperiod followed by period repeated forever.
struct EventuallyPeriodic {
  std::vector<BigInt> preperiod;
  std::vector<BigInt> period;
};

/// Leading digits of a longer (possibly infinite) expansion.
struct Truncated {
  std::vector<BigInt> digits;
};

using Variant = std::variant<Finite, EventuallyPeriodic, Truncated>;

}  // namespace repr

/// A digit representation relative to a base sequence. Invariants are
/// enforced by the named constructors.
class CantorRepr {
 public:
  /// Trailing zeros are dropped.
  static CantorRepr finite(std::vector<BigInt> digits, BaseSequenceSpec spec);

  /// Requires a Constant or Periodic spec with period length L, a preperiod
  /// whose length is a multiple of L, and a non-empty period whose length is a
  /// multiple of L that is not entirely made of maximal digits q_k - 1.
  static CantorRepr eventually_periodic(std::vector<BigInt> preperiod, std::vector<BigInt> period,
                                        BaseSequenceSpec spec);

  static CantorRepr truncated(std::vector<BigInt> digits, BaseSequenceSpec spec);

  [[nodiscard]] const repr::Variant& digits() const { return digits_; }
  [[nodiscard]] const BaseSequenceSpec& spec() const { return spec_; }

 private:
  CantorRepr(repr::Variant digits, BaseSequenceSpec spec) : digits_(std::move(digits)), spec_(std::move(spec)) {}

  repr::Variant digits_;
  BaseSequenceSpec spec_;
};

/// Rank-m cylinder: all x whose first m digits are `base`, i.e. [left, right].
struct Cylinder {
  std::vector<BigInt> base;
  BaseSequenceSpec spec;
  Rational left;
  Rational right;

  [[nodiscard]] std::size_t rank() const { return base.size(); }
  [[nodiscard]] bool contains(const Rational& x) const { return left <= x && x <= right; }
};

/// sum d_i / Q_i.
[[nodiscard]] Rational eval_finite(std::span<const BigInt> digits, const BaseSequenceSpec& spec);

/// A + (1/Q_m) N / (P - 1) with A the preperiod value, P the product of q over
/// the period block and N the period block read as a mixed-radix integer.
[[nodiscard]] Rational eval_periodic(std::span<const BigInt> preperiod, std::span<const BigInt> period,
                                     const BaseSequenceSpec& spec);

/// Value of any representation; Truncated evaluates its prefix.
[[nodiscard]] Rational evaluate(const CantorRepr& repr);

[[nodiscard]] Cylinder cylinder_interval(std::span<const BigInt> base, const BaseSequenceSpec& spec);

/// 1 / Q_n, the bound on x - S_n for the canonical n-digit prefix S_n.
[[nodiscard]] Rational truncation_bound(const Rational& x, const BaseSequenceSpec& spec, std::size_t n);

/// "<spec> | <digits>", "<spec> | <digits>..." or "<spec> | <pre>(<period>)".
[[nodiscard]] std::string render_record(const CantorRepr& repr);
[[nodiscard]] CantorRepr parse_record(std::string_view line);

}  // namespace cantor
