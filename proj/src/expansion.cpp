#include "cantor/expansion.hpp"

#include <utility>

namespace cantor {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

void require_expansion_input(const Rational& x) {
  if (x.sign() < 0 || x >= Rational(1)) {
    throw DomainError("expansion input must satisfy 0 <= p/r < 1, got " + x.to_string());
  }
}

DigitStream::DigitStream(const Rational& x, BaseSequenceSpec spec)
    : spec_(std::move(spec)), den_(x.den()), state_{0, x.num()} {
  require_expansion_input(x);
}

BigInt DigitStream::next() {
  const std::size_t k = state_.n + 1;
  const BigInt q = spec_.q_at(k);
  const BigInt scaled = q * state_.rho;
  BigInt digit;
  BigInt rho;
  mpz_fdiv_qr(digit.get_mpz_t(), rho.get_mpz_t(), scaled.get_mpz_t(), den_.get_mpz_t());
  if (sgn(digit) < 0 || digit >= q) {
    throw std::logic_error("digit " + digit.get_str() + " out of range at k=" + std::to_string(k));
  }
  state_ = ExtractionState{k, std::move(rho)};
  return digit;
}

std::vector<BigInt> DigitStream::take(std::size_t count) {
  std::vector<BigInt> digits;
  digits.reserve(count);
  for (std::size_t i = 0; i < count; ++i) digits.push_back(next());
  return digits;
}

DigitStream digit_stream(const Rational& x, const BaseSequenceSpec& spec) { return DigitStream(x, spec); }

std::vector<BigInt> expand_prefix(const Rational& x, const BaseSequenceSpec& spec, std::size_t count) {
  return DigitStream(x, spec).take(count);
}

ExtractionTrace digits_direct(const Rational& x, const BaseSequenceSpec& spec, std::size_t n) {
  require_expansion_input(x);
  if (n == 0) throw DomainError("digits_direct needs n >= 1");
  const BigInt p = x.num();
  const BigInt r = x.den();

  std::vector<BigInt> q(n + 1);
  for (std::size_t k = 1; k <= n; ++k) q[k] = spec.q_at(k);

  // delta_i = floor(p Q_i / r) - q_i floor(p Q_{i-1} / r), i < n.
  std::vector<BigInt> digits(n);
  BigInt product = 1;
  BigInt prev_floor = 0;
  for (std::size_t i = 1; i < n; ++i) {
    product *= q[i];
    const BigInt cur_floor = floor_div(p * product, r);
    digits[i] = cur_floor - q[i] * prev_floor;
    prev_floor = cur_floor;
  }
  product *= q[n];

  // varsigma_n = sum_{i<n} delta_i q_{i+1} ... q_n
  ExtractionTrace trace;
  trace.n = n;
  trace.varsigma = 0;
  for (std::size_t i = 1; i < n; ++i) {
    BigInt weight = 1;
    for (std::size_t j = i + 1; j <= n; ++j) weight *= q[j];
    trace.varsigma += digits[i] * weight;
  }
  trace.delta_big = p * product - r * trace.varsigma;
  mpz_fdiv_qr(trace.digit.get_mpz_t(), trace.rho.get_mpz_t(), trace.delta_big.get_mpz_t(), r.get_mpz_t());
  return trace;
}

Rational shift_n(const Rational& x, const BaseSequenceSpec& spec, std::size_t n) {
  DigitStream stream(x, spec);
  for (std::size_t i = 0; i < n && !stream.terminated(); ++i) stream.next();
  return Rational(stream.state().rho, stream.denominator());
}

bool verify_decomposition(const Rational& x, const BaseSequenceSpec& spec, std::size_t n) {
  DigitStream stream(x, spec);
  Rational partial_sum;
  BigInt product = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    const BigInt digit = stream.next();
    product *= spec.q_at(k);
    partial_sum += Rational(digit, product);
  }
  const Rational tail(stream.state().rho, stream.denominator());
  return partial_sum + tail * Rational(BigInt(1), product) == x;
}

std::string render_digits(std::span<const BigInt> digits) {
  std::string out;
  for (const auto& d : digits) {
    if (d < 10) {
      out += d.get_str();
    } else {
      out += '[';
      out += d.get_str();
      out += ']';
    }
  }
  return out;
}

std::vector<BigInt> parse_digits(std::string_view text) {
  std::vector<BigInt> digits;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      digits.emplace_back(c - '0');
      ++i;
      continue;
    }
    if (c != '[') {
      throw DomainError("unexpected character '" + std::string(1, c) + "' at position " + std::to_string(i));
    }
    const auto close = text.find(']', i);
    if (close == std::string_view::npos) throw DomainError("unterminated '[' at position " + std::to_string(i));
    const auto inner = text.substr(i + 1, close - i - 1);
    if (inner.empty() || inner.front() == '-') {
      throw DomainError("malformed bracketed digit at position " + std::to_string(i));
    }
    BigInt value = parse_bigint(inner);
    if (value < 10 || inner.front() == '0') {
      throw DomainError("bracketed digit must be >= 10 without leading zeros at position " + std::to_string(i));
    }
    digits.push_back(std::move(value));
    i = close + 1;
  }
  return digits;
}

}  // namespace cantor
