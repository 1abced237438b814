#include <doctest.h>

#include <numeric>

#include "cantor/analysis.hpp"
#include "cantor/expansion.hpp"
#include "cantor/representation.hpp"
#include "test_helpers.hpp"

using namespace cantor;
using testing::digits;
using testing::frac;

TEST_CASE("eval_finite examples") {
  CHECK(eval_finite(digits({0, 0, 3, 2, 0, 6}), BaseSequenceSpec::factorial()) == frac(1, 7));
  CHECK(eval_finite(digits({}), BaseSequenceSpec::odd()) == Rational(0));
  CHECK(eval_finite(digits({1, 2, 3}), BaseSequenceSpec::odd()) == frac(52, 105));
}

TEST_CASE("eval_finite reports the offending position") {
  try {
    (void)eval_finite(digits({1, 2, 7}), BaseSequenceSpec::odd());
    FAIL("expected a range error");
  } catch (const DigitRangeError& e) {
    CHECK(e.position() == 3);
  }
  CHECK_THROWS_AS((void)eval_finite(digits({-1}), BaseSequenceSpec::odd()), DigitRangeError);
}

TEST_CASE("eval_periodic examples") {
  CHECK(eval_periodic(digits({}), digits({0, 1}), BaseSequenceSpec::periodic({2, 3})) == frac(1, 5));
  CHECK(eval_periodic(digits({}), digits({3}), BaseSequenceSpec::constant(10)) == frac(1, 3));
  CHECK(eval_periodic(digits({5}), digits({0}), BaseSequenceSpec::constant(10)) == frac(1, 2));
  CHECK(eval_periodic(digits({}), digits({1, 0, 1, 0}), BaseSequenceSpec::periodic({2, 3})) == frac(1, 2) * frac(6, 5));
}

TEST_CASE("eval_periodic errors") {
  CHECK_THROWS_AS((void)eval_periodic(digits({}), digits({9}), BaseSequenceSpec::constant(10)), DomainError);
  CHECK_THROWS_AS((void)eval_periodic(digits({}), digits({1, 2}), BaseSequenceSpec::periodic({2, 3})), DomainError);
  CHECK_THROWS_AS((void)eval_periodic(digits({}), digits({1}), BaseSequenceSpec::odd()), DomainError);
  CHECK_THROWS_AS((void)eval_periodic(digits({1}), digits({0, 1}), BaseSequenceSpec::periodic({2, 3})), DomainError);
  CHECK_THROWS_AS((void)eval_periodic(digits({}), digits({1}), BaseSequenceSpec::periodic({2, 3})), DomainError);
  CHECK_THROWS_AS((void)eval_periodic(digits({}), digits({}), BaseSequenceSpec::constant(10)), DomainError);
  CHECK_THROWS_AS((void)eval_periodic(digits({}), digits({0, 3}), BaseSequenceSpec::periodic({2, 3})), DigitRangeError);
}

TEST_CASE("cylinder_interval examples") {
  const auto odd = BaseSequenceSpec::odd();
  const auto c0 = cylinder_interval(digits({0}), odd);
  CHECK(c0.left == Rational(0));
  CHECK(c0.right == frac(1, 3));
  const auto c12 = cylinder_interval(digits({1, 2}), odd);
  CHECK(c12.left == frac(7, 15));
  CHECK(c12.right == frac(8, 15));
  CHECK(c12.rank() == 2);
  const auto root = cylinder_interval(digits({}), BaseSequenceSpec::factorial());
  CHECK(root.left == Rational(0));
  CHECK(root.right == Rational(1));
  CHECK_THROWS_AS((void)cylinder_interval(digits({3}), odd), DigitRangeError);
}

TEST_CASE("truncation_bound examples") {
  CHECK(truncation_bound(frac(1, 4), BaseSequenceSpec::odd(), 3) == frac(1, 105));
  CHECK(truncation_bound(frac(1, 4), BaseSequenceSpec::constant(10), 2) == frac(1, 100));
  CHECK(truncation_bound(frac(1, 4), BaseSequenceSpec::factorial(), 4) == frac(1, 120));
}

TEST_CASE("CantorRepr invariants") {
  const auto f = CantorRepr::finite(digits({0, 3, 0, 0}), BaseSequenceSpec::odd());
  CHECK(std::get<repr::Finite>(f.digits()).digits == digits({0, 3}));
  CHECK_THROWS_AS(CantorRepr::finite(digits({3}), BaseSequenceSpec::odd()), DigitRangeError);
  CHECK_THROWS_AS(CantorRepr::eventually_periodic({}, digits({1}), BaseSequenceSpec::odd()), DomainError);
  CHECK_THROWS_AS(CantorRepr::truncated(digits({0, 5}), BaseSequenceSpec::odd()), DigitRangeError);
}

TEST_CASE("record format") {
  const auto odd = BaseSequenceSpec::odd();
  const auto t = CantorRepr::truncated(digits({0, 3, 5, 2, 2, 9, 11, 4}), odd);
  CHECK(render_record(t) == "odd | 035229[11]4...");
  CHECK(render_record(CantorRepr::finite(digits({0, 0, 3, 2, 0, 6}), BaseSequenceSpec::factorial())) ==
        "factorial | 003206");
  CHECK(render_record(CantorRepr::eventually_periodic({}, digits({0, 1}), BaseSequenceSpec::periodic({2, 3}))) ==
        "periodic:2,3 | (01)");

  CHECK(evaluate(parse_record("factorial | 003206")) == frac(1, 7));
  CHECK(evaluate(parse_record("periodic:2,3 | (01)")) == frac(1, 5));
  CHECK(evaluate(parse_record("const:10 | 5(0)")) == frac(1, 2));
  CHECK(evaluate(parse_record("odd | 123...")) == frac(52, 105));
  CHECK(std::holds_alternative<repr::Truncated>(parse_record("odd | 123...").digits()));
  CHECK_THROWS_AS((void)parse_record("odd 123"), DomainError);
  CHECK_THROWS_AS((void)parse_record("odd | (1"), DomainError);
  CHECK_THROWS((void)parse_record("bogus | 1"));

  for (const auto& r : {t, CantorRepr::eventually_periodic(digits({5}), digits({0}), BaseSequenceSpec::constant(10))}) {
    CHECK(render_record(parse_record(render_record(r))) == render_record(r));
  }
}

TEST_CASE("property: finite round trip and enclosure") {
  const std::vector<BaseSequenceSpec> specs{BaseSequenceSpec::factorial(), BaseSequenceSpec::even(),
                                            BaseSequenceSpec::constant(10), BaseSequenceSpec::periodic({2, 3}),
                                            BaseSequenceSpec::odd()};
  for (const auto& spec : specs) {
    for (long r = 1; r <= 50; ++r) {
      const auto horizon = finiteness_horizon(r, spec, 200);
      for (long p = 0; p < r; ++p) {
        if (std::gcd(p, r) != 1) continue;
        const auto x = frac(p, r);
        if (horizon) REQUIRE(eval_finite(expand_prefix(x, spec, *horizon), spec) == x);
        for (std::size_t n = 0; n <= 10; ++n) {
          const auto s = eval_finite(expand_prefix(x, spec, n), spec);
          REQUIRE(s <= x);
          REQUIRE(x < s + truncation_bound(x, spec, n));
        }
      }
    }
  }
}

TEST_CASE("property: periodic round trip through detect_period") {
  const std::vector<BaseSequenceSpec> specs{BaseSequenceSpec::constant(10), BaseSequenceSpec::constant(7),
                                            BaseSequenceSpec::periodic({2, 3}), BaseSequenceSpec::periodic({3, 4, 5}),
                                            BaseSequenceSpec::periodic({6, 2, 2, 9})};
  for (const auto& spec : specs) {
    for (long r = 1; r <= 50; ++r) {
      for (long p = 0; p < r; ++p) {
        if (std::gcd(p, r) != 1) continue;
        const auto x = frac(p, r);
        const auto report = detect_period(x, spec);
        REQUIRE(eval_periodic(report.preperiod_digits, report.period_digits, spec) == x);
      }
    }
  }
}

TEST_CASE("property: cylinders nest and children partition") {
  const std::vector<BaseSequenceSpec> specs{BaseSequenceSpec::odd(), BaseSequenceSpec::periodic({2, 3}),
                                            BaseSequenceSpec::factorial()};
  for (const auto& spec : specs) {
    // walk a few bases of rank up to 3, choosing digit (k mod q_k)
    std::vector<BigInt> base;
    for (std::size_t m = 0; m < 4; ++m) {
      const auto parent = cylinder_interval(base, spec);
      REQUIRE(parent.right - parent.left == Rational(BigInt(1), partial_product(spec, m).value));
      const BigInt q = spec.q_at(m + 1);
      Rational cursor = parent.left;
      for (BigInt d = 0; d < q; ++d) {
        auto child_base = base;
        child_base.push_back(d);
        const auto child = cylinder_interval(child_base, spec);
        REQUIRE(child.left == cursor);
        REQUIRE(parent.contains(child.left));
        REQUIRE(parent.contains(child.right));
        cursor = child.right;
      }
      REQUIRE(cursor == parent.right);
      base.push_back(BigInt(static_cast<unsigned long>(m + 1)) % q);
    }
  }
}
