#include "cantor/representation.hpp"

#include <algorithm>
#include <utility>

#include "cantor/expansion.hpp"

namespace cantor {

DigitRangeError::DigitRangeError(std::size_t position, const BigInt& digit, const BigInt& base)
    : DomainError("digit " + digit.get_str() + " out of range at k=" + std::to_string(position) + " (q_" +
                  std::to_string(position) + " = " + base.get_str() + ")"),
      position_(position) {}

void check_digit_bounds(std::span<const BigInt> digits, const BaseSequenceSpec& spec, std::size_t offset) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const std::size_t k = offset + i + 1;
    const BigInt q = spec.q_at(k);
    if (sgn(digits[i]) < 0 || digits[i] >= q) throw DigitRangeError(k, digits[i], q);
  }
}

namespace {

std::size_t require_period_length(const BaseSequenceSpec& spec) {
  const auto length = spec.period_length();
  if (!length) throw DomainError("spec '" + render(spec) + "' is not periodic");
  return *length;
}

// Validates an eventually periodic digit layout against a periodic spec.
void check_periodic_layout(std::span<const BigInt> preperiod, std::span<const BigInt> period,
                           const BaseSequenceSpec& spec) {
  const std::size_t L = require_period_length(spec);
  if (preperiod.size() % L != 0) {
    throw DomainError("preperiod length " + std::to_string(preperiod.size()) +
                      " is not a multiple of the base period " + std::to_string(L));
  }
  if (period.empty()) throw DomainError("period must be non-empty");
  if (period.size() % L != 0) {
    throw DomainError("period length " + std::to_string(period.size()) + " is not a multiple of the base period " +
                      std::to_string(L));
  }
  check_digit_bounds(preperiod, spec);
  check_digit_bounds(period, spec, preperiod.size());
  bool all_max = true;
  for (std::size_t i = 0; i < period.size() && all_max; ++i) {
    all_max = period[i] == spec.q_at(preperiod.size() + i + 1) - 1;
  }
  if (all_max) throw DomainError("period of maximal digits is the non-canonical tail form");
}

}  // namespace

CantorRepr CantorRepr::finite(std::vector<BigInt> digits, BaseSequenceSpec spec) {
  check_digit_bounds(digits, spec);
  while (!digits.empty() && sgn(digits.back()) == 0) digits.pop_back();
  return CantorRepr(repr::Finite{std::move(digits)}, std::move(spec));
}

CantorRepr CantorRepr::eventually_periodic(std::vector<BigInt> preperiod, std::vector<BigInt> period,
                                           BaseSequenceSpec spec) {
  check_periodic_layout(preperiod, period, spec);
  return CantorRepr(repr::EventuallyPeriodic{std::move(preperiod), std::move(period)}, std::move(spec));
}

CantorRepr CantorRepr::truncated(std::vector<BigInt> digits, BaseSequenceSpec spec) {
  check_digit_bounds(digits, spec);
  return CantorRepr(repr::Truncated{std::move(digits)}, std::move(spec));
}

Rational eval_finite(std::span<const BigInt> digits, const BaseSequenceSpec& spec) {
  check_digit_bounds(digits, spec);
  // Horner form: (((d_1) q_2 + d_2) q_3 + ... + d_m) / Q_m
  BigInt numerator = 0;
  BigInt product = 1;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const BigInt q = spec.q_at(i + 1);
    numerator = numerator * q + digits[i];
    product *= q;
  }
  return Rational(numerator, product);
}

Rational eval_periodic(std::span<const BigInt> preperiod, std::span<const BigInt> period,
                       const BaseSequenceSpec& spec) {
  check_periodic_layout(preperiod, period, spec);
  const std::size_t m = preperiod.size();
  const Rational head = eval_finite(preperiod, spec);
  const BigInt head_product = block_product(spec, 0, m);

  BigInt block_value = 0;
  BigInt block_prod = 1;
  for (std::size_t i = 0; i < period.size(); ++i) {
    const BigInt q = spec.q_at(m + i + 1);
    block_value = block_value * q + period[i];
    block_prod *= q;
  }
  return head + Rational(block_value, head_product * (block_prod - 1));
}

Rational evaluate(const CantorRepr& repr) {
  struct Visitor {
    const BaseSequenceSpec& spec;
    Rational operator()(const repr::Finite& f) const { return eval_finite(f.digits, spec); }
    Rational operator()(const repr::Truncated& t) const { return eval_finite(t.digits, spec); }
    Rational operator()(const repr::EventuallyPeriodic& p) const {
      return eval_periodic(p.preperiod, p.period, spec);
    }
  };
  return std::visit(Visitor{repr.spec()}, repr.digits());
}

Cylinder cylinder_interval(std::span<const BigInt> base, const BaseSequenceSpec& spec) {
  Rational left = eval_finite(base, spec);
  Rational right = left + Rational(BigInt(1), partial_product(spec, base.size()).value);
  return Cylinder{std::vector<BigInt>(base.begin(), base.end()), spec, std::move(left), std::move(right)};
}

Rational truncation_bound(const Rational& x, const BaseSequenceSpec& spec, std::size_t n) {
  require_expansion_input(x);
  return Rational(BigInt(1), partial_product(spec, n).value);
}

namespace {

constexpr std::string_view kSeparator = " | ";
constexpr std::string_view kEllipsis = "...";

}  // namespace

std::string render_record(const CantorRepr& repr) {
  struct Visitor {
    std::string operator()(const repr::Finite& f) const { return render_digits(f.digits); }
    std::string operator()(const repr::Truncated& t) const { return render_digits(t.digits) + std::string(kEllipsis); }
    std::string operator()(const repr::EventuallyPeriodic& p) const {
      return render_digits(p.preperiod) + "(" + render_digits(p.period) + ")";
    }
  };
  return render(repr.spec()) + std::string(kSeparator) + std::visit(Visitor{}, repr.digits());
}

CantorRepr parse_record(std::string_view line) {
  const auto sep = line.find(kSeparator);
  if (sep == std::string_view::npos) throw DomainError("record is missing the ' | ' separator");
  BaseSequenceSpec spec = parse_spec(line.substr(0, sep));
  std::string_view body = line.substr(sep + kSeparator.size());

  if (body.ends_with(kEllipsis)) {
    body.remove_suffix(kEllipsis.size());
    return CantorRepr::truncated(parse_digits(body), std::move(spec));
  }
  const auto open = body.find('(');
  if (open == std::string_view::npos) return CantorRepr::finite(parse_digits(body), std::move(spec));
  if (!body.ends_with(')')) throw DomainError("periodic record must end with ')'");
  auto preperiod = parse_digits(body.substr(0, open));
  auto period = parse_digits(body.substr(open + 1, body.size() - open - 2));
  return CantorRepr::eventually_periodic(std::move(preperiod), std::move(period), std::move(spec));
}

}  // namespace cantor
