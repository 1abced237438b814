#include <doctest.h>

#include <numeric>

#include "cantor/expansion.hpp"
#include "oracle.hpp"
#include "test_helpers.hpp"

using namespace cantor;
using testing::digits;
using testing::frac;

TEST_CASE("digit_stream examples") {
  const auto odd = BaseSequenceSpec::odd();
  CHECK(expand_prefix(frac(1, 4), odd, 8) == digits({0, 3, 5, 2, 2, 9, 11, 4}));
  CHECK(expand_prefix(frac(3, 8), odd, 9) == digits({1, 0, 4, 3, 4, 1, 9, 6, 7}));

  auto half = digit_stream(frac(1, 2), odd);
  for (long k = 1; k <= 50; ++k) REQUIRE(half.next() == k);

  auto zero = digit_stream(Rational(0), BaseSequenceSpec::factorial());
  CHECK(zero.terminated());
  for (int k = 0; k < 10; ++k) CHECK(zero.next() == 0);

  auto seventh = digit_stream(frac(1, 7), BaseSequenceSpec::factorial());
  CHECK(seventh.take(6) == digits({0, 0, 3, 2, 0, 6}));
  CHECK(seventh.terminated());
  CHECK(seventh.take(5) == digits({0, 0, 0, 0, 0}));
}

TEST_CASE("digit_stream rejects inputs outside [0, 1)") {
  const auto odd = BaseSequenceSpec::odd();
  CHECK_THROWS_AS((void)digit_stream(Rational(1), odd), DomainError);
  CHECK_THROWS_AS((void)digit_stream(frac(5, 4), odd), DomainError);
  CHECK_THROWS_AS((void)digit_stream(frac(-1, 4), odd), DomainError);
}

TEST_CASE("digits_direct examples") {
  const auto odd = BaseSequenceSpec::odd();
  const auto t1 = digits_direct(frac(1, 2), odd, 1);
  CHECK(t1.delta_big == 3);
  CHECK(t1.digit == 1);
  CHECK(t1.rho == 1);
  CHECK(t1.varsigma == 0);

  CHECK(digits_direct(frac(1, 4), odd, 7).digit == 11);

  for (std::size_t n = 1; n <= 8; ++n) {
    const auto t = digits_direct(Rational(0), BaseSequenceSpec::factorial(), n);
    CHECK(t.delta_big == 0);
    CHECK(t.digit == 0);
    CHECK(t.rho == 0);
  }
  CHECK_THROWS_AS((void)digits_direct(frac(1, 2), odd, 0), DomainError);
}

TEST_CASE("shift_n examples") {
  const auto odd = BaseSequenceSpec::odd();
  for (std::size_t n = 0; n <= 20; ++n) CHECK(shift_n(frac(1, 2), odd, n) == frac(1, 2));
  CHECK(shift_n(frac(1, 6), odd, 1) == frac(1, 2));
  CHECK(shift_n(frac(3, 11), BaseSequenceSpec::factorial(), 0) == frac(3, 11));
  CHECK(shift_n(frac(1, 7), BaseSequenceSpec::factorial(), 6) == Rational(0));
  CHECK(shift_n(frac(1, 7), BaseSequenceSpec::factorial(), 9) == Rational(0));
}

TEST_CASE("verify_decomposition examples") {
  CHECK(verify_decomposition(frac(3, 8), BaseSequenceSpec::odd(), 5));
  CHECK(verify_decomposition(Rational(0), BaseSequenceSpec::odd(), 1));
  CHECK(verify_decomposition(frac(1, 7), BaseSequenceSpec::factorial(), 6));
}

TEST_CASE("digit rendering") {
  CHECK(render_digits(digits({0, 3, 5, 2, 2, 9, 11, 4})) == "035229[11]4");
  CHECK(render_digits(digits({})) == "");
  CHECK(parse_digits("035229[11]4") == digits({0, 3, 5, 2, 2, 9, 11, 4}));
  CHECK(parse_digits("[123456]0") == digits({123456, 0}));
  CHECK_THROWS_AS((void)parse_digits("[5]"), DomainError);
  CHECK_THROWS_AS((void)parse_digits("[011]"), DomainError);
  CHECK_THROWS_AS((void)parse_digits("1[12"), DomainError);
  CHECK_THROWS_AS((void)parse_digits("1 2"), DomainError);
  CHECK_THROWS_AS((void)parse_digits("[]"), DomainError);
}

TEST_CASE("property: stream agrees with the cylinder-search oracle") {
  const std::vector<std::pair<BaseSequenceSpec, oracle::Base>> bases{
      {BaseSequenceSpec::odd(), oracle::odd},
      {BaseSequenceSpec::even(), oracle::even},
      {BaseSequenceSpec::factorial(), oracle::factorial},
      {BaseSequenceSpec::constant(10), oracle::decimal},
      {BaseSequenceSpec::periodic({3, 4, 5}), oracle::periodic_345},
  };
  for (const auto& [spec, base] : bases) {
    for (long r = 1; r <= 16; ++r) {
      for (long p = 0; p < r; ++p) {
        if (std::gcd(p, r) != 1) continue;
        const auto stream = expand_prefix(frac(p, r), spec, 12);
        const auto expected = oracle::cylinder_digits(mpq_class(p, r), base, 12);
        REQUIRE(stream == expected);
      }
    }
  }
}

TEST_CASE("property: trace identities and termination") {
  const std::vector<BaseSequenceSpec> specs{BaseSequenceSpec::odd(), BaseSequenceSpec::factorial(),
                                            BaseSequenceSpec::periodic({2, 3}),
                                            BaseSequenceSpec::prefixed({7, 2}, BaseSequenceSpec::even())};
  for (const auto& spec : specs) {
    for (long r = 1; r <= 18; ++r) {
      for (long p = 0; p < r; ++p) {
        if (std::gcd(p, r) != 1) continue;
        const auto x = frac(p, r);
        auto stream = digit_stream(x, spec);
        Rational partial;
        BigInt product = 1;
        std::optional<ExtractionTrace> previous;
        bool terminated = stream.terminated();
        for (std::size_t n = 1; n <= 15; ++n) {
          const BigInt digit = stream.next();
          const auto trace = digits_direct(x, spec, n);
          REQUIRE(trace.digit == digit);
          REQUIRE(trace.rho == stream.state().rho);
          REQUIRE(trace.delta_big == x.num() * partial_product(spec, n).value - x.den() * trace.varsigma);
          if (previous) REQUIRE(trace.delta_big == spec.q_at(n) * (previous->delta_big - x.den() * previous->digit));
          REQUIRE(shift_n(x, spec, n) == Rational(trace.rho, x.den()));
          if (terminated) REQUIRE(digit == 0);
          terminated = terminated || stream.terminated();

          product *= spec.q_at(n);
          partial += Rational(digit, product);
          REQUIRE(partial <= x);
          REQUIRE(x < partial + Rational(BigInt(1), product));
          previous = trace;
        }
      }
    }
  }
}
