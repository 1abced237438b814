#include "cantor/sequences.hpp"

#include <utility>

namespace cantor {

SpecSyntaxError::SpecSyntaxError(const std::string& message, std::size_t position)
    : Error("syntax error at position " + std::to_string(position) + ": " + message), position_(position) {}

namespace seq {

bool operator==(const ExplicitPrefix& a, const ExplicitPrefix& b) {
  if (a.prefix != b.prefix) return false;
  if (a.tail == b.tail) return true;
  return a.tail && b.tail && *a.tail == *b.tail;
}

}  // namespace seq

namespace {

std::string too_small(std::size_t k, const BigInt& q) {
  return "q_" + std::to_string(k) + " = " + q.get_str() + " violates q_k >= 2";
}

void validate(const seq::Kind& kind) {
  struct Visitor {
    void operator()(const seq::Constant& c) const {
      if (c.base < 2) throw SpecValidationError(too_small(1, c.base));
    }
    void operator()(const seq::Periodic& p) const {
      if (p.period.empty()) throw SpecValidationError("periodic spec needs at least one entry");
      for (std::size_t i = 0; i < p.period.size(); ++i) {
        if (p.period[i] < 2) throw SpecValidationError(too_small(i + 1, p.period[i]));
      }
    }
    void operator()(const seq::Affine& a) const {
      if (a.slope < 0) {
        throw SpecValidationError("affine slope a = " + a.slope.get_str() + " must be non-negative");
      }
      // q_k is non-decreasing, so q_1 >= 2 covers every k.
      const BigInt first = a.slope + a.offset;
      if (first < 2) throw SpecValidationError(too_small(1, first));
    }
    void operator()(const seq::Factorial&) const {}
    void operator()(const seq::EvenDouble&) const {}
    void operator()(const seq::ExplicitPrefix& p) const {
      if (!p.tail) throw SpecValidationError("prefix spec needs a tail");
      for (std::size_t i = 0; i < p.prefix.size(); ++i) {
        if (p.prefix[i] < 2) throw SpecValidationError(too_small(i + 1, p.prefix[i]));
      }
    }
  };
  std::visit(Visitor{}, kind);
}

}  // namespace

BaseSequenceSpec::BaseSequenceSpec(seq::Kind kind) : kind_(std::move(kind)) { validate(kind_); }

BaseSequenceSpec BaseSequenceSpec::constant(BigInt base) { return BaseSequenceSpec(seq::Constant{std::move(base)}); }

BaseSequenceSpec BaseSequenceSpec::periodic(std::vector<BigInt> period) {
  return BaseSequenceSpec(seq::Periodic{std::move(period)});
}

BaseSequenceSpec BaseSequenceSpec::affine(BigInt slope, BigInt offset) {
  return BaseSequenceSpec(seq::Affine{std::move(slope), std::move(offset)});
}

BaseSequenceSpec BaseSequenceSpec::factorial() { return BaseSequenceSpec(seq::Factorial{}); }

BaseSequenceSpec BaseSequenceSpec::even() { return BaseSequenceSpec(seq::EvenDouble{}); }

BaseSequenceSpec BaseSequenceSpec::prefixed(std::vector<BigInt> prefix, BaseSequenceSpec tail) {
  return BaseSequenceSpec(
      seq::ExplicitPrefix{std::move(prefix), std::make_shared<const BaseSequenceSpec>(std::move(tail))});
}

BigInt BaseSequenceSpec::q_at(std::size_t k) const {
  if (k == 0) throw DomainError("base sequence indices start at 1");
  struct Visitor {
    std::size_t k;
    BigInt operator()(const seq::Constant& c) const { return c.base; }
    BigInt operator()(const seq::Periodic& p) const { return p.period[(k - 1) % p.period.size()]; }
    BigInt operator()(const seq::Affine& a) const { return a.slope * BigInt(static_cast<unsigned long>(k)) + a.offset; }
    BigInt operator()(const seq::Factorial&) const { return BigInt(static_cast<unsigned long>(k)) + 1; }
    BigInt operator()(const seq::EvenDouble&) const { return BigInt(static_cast<unsigned long>(k)) * 2; }
    BigInt operator()(const seq::ExplicitPrefix& p) const {
      if (k <= p.prefix.size()) return p.prefix[k - 1];
      return p.tail->q_at(k - p.prefix.size());
    }
  };
  return std::visit(Visitor{k}, kind_);
}

std::optional<std::size_t> BaseSequenceSpec::period_length() const {
  if (std::holds_alternative<seq::Constant>(kind_)) return 1;
  if (const auto* p = std::get_if<seq::Periodic>(&kind_)) return p->period.size();
  return std::nullopt;
}

PartialProduct partial_product(const BaseSequenceSpec& spec, std::size_t n) {
  return PartialProduct{n, block_product(spec, 0, n)};
}

BigInt block_product(const BaseSequenceSpec& spec, std::size_t from, std::size_t to) {
  BigInt product = 1;
  for (std::size_t k = from + 1; k <= to; ++k) product *= spec.q_at(k);
  return product;
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  BaseSequenceSpec parse_all() {
    auto spec = parse_spec_at();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw SpecSyntaxError(message, pos_); }

  bool consume(std::string_view token) {
    if (text_.substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  BigInt parse_int() {
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected integer");
    }
    return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
  }

  std::vector<BigInt> parse_int_list() {
    std::vector<BigInt> values{parse_int()};
    while (consume(",")) values.push_back(parse_int());
    return values;
  }

  BaseSequenceSpec parse_spec_at() {
    if (consume("const:")) return BaseSequenceSpec::constant(parse_int());
    if (consume("periodic:")) return BaseSequenceSpec::periodic(parse_int_list());
    if (consume("affine:")) {
      BigInt slope = parse_int();
      if (!consume(",")) fail("expected ','");
      BigInt offset = parse_int();
      return BaseSequenceSpec::affine(std::move(slope), std::move(offset));
    }
    if (consume("odd")) return BaseSequenceSpec::odd();
    if (consume("even")) return BaseSequenceSpec::even();
    if (consume("factorial")) return BaseSequenceSpec::factorial();
    if (consume("prefix:")) {
      auto prefix = parse_int_list();
      if (!consume(";")) fail("expected ';'");
      // Validate the prefix before descending so errors name the leading k.
      for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (prefix[i] < 2) throw SpecValidationError(too_small(i + 1, prefix[i]));
      }
      auto tail = parse_spec_at();
      return BaseSequenceSpec::prefixed(std::move(prefix), std::move(tail));
    }
    fail("expected one of const:, periodic:, affine:, odd, even, factorial, prefix:");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string join(const std::vector<BigInt>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += values[i].get_str();
  }
  return out;
}

}  // namespace

BaseSequenceSpec parse_spec(std::string_view text) { return SpecParser(text).parse_all(); }

std::string render(const BaseSequenceSpec& spec) {
  struct Visitor {
    std::string operator()(const seq::Constant& c) const { return "const:" + c.base.get_str(); }
    std::string operator()(const seq::Periodic& p) const { return "periodic:" + join(p.period); }
    std::string operator()(const seq::Affine& a) const {
      if (a.slope == 2 && a.offset == 1) return "odd";
      return "affine:" + a.slope.get_str() + "," + a.offset.get_str();
    }
    std::string operator()(const seq::Factorial&) const { return "factorial"; }
    std::string operator()(const seq::EvenDouble&) const { return "even"; }
    std::string operator()(const seq::ExplicitPrefix& p) const {
      return "prefix:" + join(p.prefix) + ";" + render(*p.tail);
    }
  };
  return std::visit(Visitor{}, spec.kind());
}

}  // namespace cantor
