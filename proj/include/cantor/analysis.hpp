#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cantor/rational.hpp"
#include "cantor/representation.hpp"
#include "cantor/sequences.hpp"

namespace cantor {

/// Smallest k0 <= bound with r | Q_{k0}, found by repeatedly stripping
/// gcd(m, q_k) from m = r. Every reduced p/r then terminates by digit k0.
/// r = 1 answers 1.
[[nodiscard]] std::optional<std::size_t> finiteness_horizon(const BigInt& r, const BaseSequenceSpec& spec,
                                                            std::size_t bound);

struct PeriodReport {
  /// Minimal lengths found from the first repeated state (rho_n, n mod L).
  std::size_t preperiod_len = 0;
  std::size_t period_len = 0;
  /// Digits with the preperiod rounded up to a multiple of L and the period
  /// rotated to match; these feed eval_periodic directly.
  std::vector<BigInt> preperiod_digits;
  std::vector<BigInt> period_digits;
  /// Digits extracted before the repeat was seen (at most r * L).
  std::size_t steps = 0;
};

/// Requires a Constant or Periodic spec.
[[nodiscard]] PeriodReport detect_period(const Rational& x, const BaseSequenceSpec& spec);

[[nodiscard]] CantorRepr to_repr(const PeriodReport& report, const BaseSequenceSpec& spec);

struct UnitFractionResult {
  /// (q_k - 1) / w for k <= horizon, when w divides every q_k - 1 there.
  std::optional<std::vector<BigInt>> digits;
  /// First k <= horizon with w not dividing q_k - 1.
  std::optional<std::size_t> failing_k;
  /// Divisibility was decided for every k from the spec parameters.
  bool certified = false;
};

[[nodiscard]] UnitFractionResult unit_fraction_digits(const BigInt& w, const BaseSequenceSpec& spec,
                                                      std::size_t horizon);

struct ConstantShiftResult {
  /// eps_n = eps_0 (q_n - 1) / (q_0 - 1) as a non-negative integer for every n0 < n <= horizon.
  bool holds = false;
  BigInt min_base;                ///< q_0
  std::size_t min_position = 0;   ///< first n attaining q_0
  BigInt min_digit;               ///< eps_0
  std::optional<std::size_t> first_failure;
  /// q_0 is attained again at a position with a different digit.
  bool ambiguous_min = false;
  /// sigma^n(x) takes one value over n0 <= n <= horizon.
  bool shift_constant = false;
  Rational shift_value;           ///< sigma^{n0}(x)
};

/// Requires horizon > n0.
[[nodiscard]] ConstantShiftResult constant_shift_check(const Rational& x, const BaseSequenceSpec& spec,
                                                       std::size_t n0, std::size_t horizon);

struct GroupingReport {
  std::vector<std::size_t> breakpoints;
  std::vector<BigInt> lambdas;
  std::vector<BigInt> mus;
  std::vector<Rational> ratios;
  bool constant = false;
  std::optional<Rational> common_ratio;
  Rational shift_at_start;        ///< sigma^{n_1}(x)
  bool matches_shift = false;     ///< constant and common_ratio == shift_at_start
  BigInt mu_min;
  std::optional<Rational> lambda_scaled;  ///< common_ratio * mu_min
};

/// Blocks (n_k, n_{k+1}] between consecutive breakpoints; needs at least
/// three strictly increasing breakpoints, the last one <= horizon.
[[nodiscard]] GroupingReport grouping_ratios(const Rational& x, const BaseSequenceSpec& spec,
                                             std::span<const std::size_t> breakpoints, std::size_t horizon);

/// "preperiod=<digits> period=(<digits>)"
[[nodiscard]] std::string render_period_report(const PeriodReport& report);

/// One "block=" line per block, then "constant=..." and the cross-check lines.
[[nodiscard]] std::string render_grouping_report(const GroupingReport& report);

}  // namespace cantor
