#include "cantor/analysis.hpp"

#include <map>
#include <utility>

#include "cantor/expansion.hpp"

namespace cantor {

std::optional<std::size_t> finiteness_horizon(const BigInt& r, const BaseSequenceSpec& spec, std::size_t bound) {
  if (r < 1) throw DomainError("denominator must be positive");
  if (bound == 0) throw DomainError("bound must be positive");
  if (r == 1) return 1;
  BigInt m = r;
  for (std::size_t k = 1; k <= bound; ++k) {
    BigInt g;
    const BigInt q = spec.q_at(k);
    mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), q.get_mpz_t());
    m /= g;
    if (m == 1) return k;
  }
  return std::nullopt;
}

PeriodReport detect_period(const Rational& x, const BaseSequenceSpec& spec) {
  const auto period = spec.period_length();
  if (!period) throw DomainError("spec '" + render(spec) + "' is not periodic");
  const std::size_t L = *period;

  DigitStream stream(x, spec);
  std::map<std::pair<BigInt, std::size_t>, std::size_t> first_seen;
  std::vector<BigInt> digits;
  first_seen.emplace(std::make_pair(stream.state().rho, std::size_t{0}), 0);
  std::size_t start = 0;
  while (true) {
    digits.push_back(stream.next());
    const std::size_t n = stream.state().n;
    auto [it, inserted] = first_seen.emplace(std::make_pair(stream.state().rho, n % L), n);
    if (!inserted) {
      start = it->second;
      break;
    }
  }

  PeriodReport report;
  report.steps = digits.size();
  report.preperiod_len = start;
  report.period_len = digits.size() - start;

  // digit at 0-based position t >= start repeats with period_len
  const auto digit_at = [&](std::size_t t) -> const BigInt& {
    if (t < digits.size()) return digits[t];
    return digits[start + (t - start) % report.period_len];
  };
  const std::size_t aligned = (start + L - 1) / L * L;
  for (std::size_t t = 0; t < aligned; ++t) report.preperiod_digits.push_back(digit_at(t));
  for (std::size_t t = aligned; t < aligned + report.period_len; ++t) report.period_digits.push_back(digit_at(t));
  return report;
}

CantorRepr to_repr(const PeriodReport& report, const BaseSequenceSpec& spec) {
  return CantorRepr::eventually_periodic(report.preperiod_digits, report.period_digits, spec);
}

namespace {

// Whether w | (q_k - 1) for every k >= 1, decided from the spec parameters.
bool divides_all(const BigInt& w, const BaseSequenceSpec& spec) {
  const auto divides = [&](const BigInt& v) { return mpz_divisible_p(v.get_mpz_t(), w.get_mpz_t()) != 0; };
  struct Visitor {
    const BigInt& w;
    decltype(divides)& div;
    bool operator()(const seq::Constant& c) const { return div(c.base - 1); }
    bool operator()(const seq::Periodic& p) const {
      for (const auto& q : p.period) {
        if (!div(q - 1)) return false;
      }
      return true;
    }
    // q_k - 1 = a k + c - 1: w must divide the first term and the step a.
    bool operator()(const seq::Affine& a) const { return div(a.slope) && div(a.slope + a.offset - 1); }
    // q_1 - 1 = 1 for both families.
    bool operator()(const seq::Factorial&) const { return w == 1; }
    bool operator()(const seq::EvenDouble&) const { return w == 1; }
    bool operator()(const seq::ExplicitPrefix& p) const {
      for (const auto& q : p.prefix) {
        if (!div(q - 1)) return false;
      }
      return divides_all(w, *p.tail);
    }
  };
  return std::visit(Visitor{w, divides}, spec.kind());
}

}  // namespace

UnitFractionResult unit_fraction_digits(const BigInt& w, const BaseSequenceSpec& spec, std::size_t horizon) {
  if (w < 1) throw DomainError("w must be positive");
  UnitFractionResult result;
  result.certified = divides_all(w, spec);

  std::vector<BigInt> digits;
  digits.reserve(horizon);
  for (std::size_t k = 1; k <= horizon; ++k) {
    const BigInt q_minus_one = spec.q_at(k) - 1;
    if (!mpz_divisible_p(q_minus_one.get_mpz_t(), w.get_mpz_t())) {
      result.failing_k = k;
      result.certified = false;
      return result;
    }
    digits.push_back(q_minus_one / w);
  }

  // w = 1 is the maximal-digit form of 1, which the canonical stream never emits.
  if (w > 1 && expand_prefix(Rational(BigInt(1), w), spec, horizon) != digits) {
    throw std::logic_error("unit fraction digits disagree with the digit stream for 1/" + w.get_str());
  }
  result.digits = std::move(digits);
  return result;
}

ConstantShiftResult constant_shift_check(const Rational& x, const BaseSequenceSpec& spec, std::size_t n0,
                                         std::size_t horizon) {
  if (horizon <= n0) throw DomainError("horizon must exceed n0");
  ConstantShiftResult result;
  result.shift_value = shift_n(x, spec, n0);

  DigitStream stream(x, spec);
  std::vector<BigInt> digits;  // digits[n] = eps_n for n in (n0, horizon]
  std::vector<BigInt> bases;
  digits.resize(horizon + 1);
  bases.resize(horizon + 1);
  result.shift_constant = true;
  for (std::size_t n = 1; n <= horizon; ++n) {
    digits[n] = stream.next();
    bases[n] = spec.q_at(n);
    if (n > n0 && Rational(stream.state().rho, stream.denominator()) != result.shift_value) {
      result.shift_constant = false;
    }
  }

  result.min_position = n0 + 1;
  for (std::size_t n = n0 + 1; n <= horizon; ++n) {
    if (bases[n] < bases[result.min_position]) result.min_position = n;
  }
  result.min_base = bases[result.min_position];
  result.min_digit = digits[result.min_position];
  for (std::size_t n = result.min_position + 1; n <= horizon; ++n) {
    if (bases[n] == result.min_base && digits[n] != result.min_digit) result.ambiguous_min = true;
  }

  const BigInt divisor = result.min_base - 1;
  result.holds = true;
  for (std::size_t n = n0 + 1; n <= horizon; ++n) {
    const BigInt scaled = result.min_digit * (bases[n] - 1);
    if (!mpz_divisible_p(scaled.get_mpz_t(), divisor.get_mpz_t()) || scaled / divisor != digits[n]) {
      result.holds = false;
      result.first_failure = n;
      break;
    }
  }
  return result;
}

GroupingReport grouping_ratios(const Rational& x, const BaseSequenceSpec& spec,
                               std::span<const std::size_t> breakpoints, std::size_t horizon) {
  if (breakpoints.size() < 3) throw DomainError("grouping needs at least three breakpoints (two blocks)");
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (breakpoints[i] <= breakpoints[i - 1]) throw DomainError("breakpoints must be strictly increasing");
  }
  if (breakpoints.back() > horizon) throw DomainError("breakpoints exceed the horizon");

  const auto digits = expand_prefix(x, spec, breakpoints.back());

  GroupingReport report;
  report.breakpoints.assign(breakpoints.begin(), breakpoints.end());
  for (std::size_t b = 0; b + 1 < breakpoints.size(); ++b) {
    BigInt lambda = 0;
    BigInt product = 1;
    for (std::size_t k = breakpoints[b] + 1; k <= breakpoints[b + 1]; ++k) {
      const BigInt q = spec.q_at(k);
      lambda = lambda * q + digits[k - 1];
      product *= q;
    }
    BigInt mu = product - 1;
    report.ratios.emplace_back(lambda, mu);
    report.lambdas.push_back(std::move(lambda));
    report.mus.push_back(std::move(mu));
  }

  report.constant = true;
  for (const auto& ratio : report.ratios) report.constant = report.constant && ratio == report.ratios.front();
  report.mu_min = report.mus.front();
  for (const auto& mu : report.mus) {
    if (mu < report.mu_min) report.mu_min = mu;
  }
  report.shift_at_start = shift_n(x, spec, breakpoints.front());
  if (report.constant) {
    report.common_ratio = report.ratios.front();
    report.lambda_scaled = *report.common_ratio * Rational(report.mu_min);
    report.matches_shift = *report.common_ratio == report.shift_at_start;
  }
  return report;
}

std::string render_period_report(const PeriodReport& report) {
  return "preperiod=" + render_digits(report.preperiod_digits) + " period=(" + render_digits(report.period_digits) +
         ")";
}

std::string render_grouping_report(const GroupingReport& report) {
  std::string out;
  for (std::size_t b = 0; b < report.ratios.size(); ++b) {
    out += "block=(" + std::to_string(report.breakpoints[b]) + "," + std::to_string(report.breakpoints[b + 1]) +
           "] lambda=" + report.lambdas[b].get_str() + " mu=" + report.mus[b].get_str() +
           " ratio=" + report.ratios[b].to_string() + "\n";
  }
  out += "constant=" + std::string(report.constant ? "true" : "false");
  if (report.common_ratio) out += " common_ratio=" + report.common_ratio->to_string();
  out += "\nshift=" + report.shift_at_start.to_string() + " matches_shift=" + (report.matches_shift ? "true" : "false");
  return out;
}

}  // namespace cantor
