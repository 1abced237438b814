#include "cantor/rational.hpp"

#include <limits>

namespace cantor {

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && text[0] == '-') i = 1;
  if (i == text.size()) throw DomainError("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw DomainError("expected an integer, got '" + std::string(text) + "'");
    }
  }
  return BigInt(std::string(text), 10);
}

std::size_t to_index(const BigInt& value) {
  if (sgn(value) < 0 || !value.fits_ulong_p() ||
      value.get_ui() > std::numeric_limits<std::size_t>::max()) {
    throw DomainError("index out of range: " + value.get_str());
  }
  return static_cast<std::size_t>(value.get_ui());
}

Rational::Rational(BigInt num, BigInt den) {
  if (sgn(den) == 0) throw DomainError("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  return Rational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::to_string() const { return num().get_str() + "/" + den().get_str(); }

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return Rational(mpq_class(a.value_ / b.value_));
}

}  // namespace cantor
