#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cantor/rational.hpp"

namespace cantor {

/// A base-sequence string that does not match the grammar.
class SpecSyntaxError : public Error {
 public:
  SpecSyntaxError(const std::string& message, std::size_t position);
  /// Zero-based offset into the input string.
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A base sequence that would produce some q_k < 2.
class SpecValidationError : public Error {
 public:
  using Error::Error;
};

class BaseSequenceSpec;

namespace seq {

struct Constant {
  BigInt base;
  friend bool operator==(const Constant&, const Constant&) = default;
};

struct Periodic {
  std::vector<BigInt> period;
  friend bool operator==(const Periodic&, const Periodic&) = default;
};

/// q_k = slope * k + offset.
struct Affine {
  BigInt slope;
  BigInt offset;
  friend bool operator==(const Affine&, const Affine&) = default;
};

/// q_k = k + 1, so that Q_n = (n + 1)!.
struct Factorial {
  friend bool operator==(const Factorial&, const Factorial&) = default;
};

/// q_k = 2k.
struct EvenDouble {
  friend bool operator==(const EvenDouble&, const EvenDouble&) = default;
};

/// q_1..q_m taken from `prefix`, then q_{m+j} = tail.q_at(j).
struct ExplicitPrefix {
  std::vector<BigInt> prefix;
  std::shared_ptr<const BaseSequenceSpec> tail;
  friend bool operator==(const ExplicitPrefix& a, const ExplicitPrefix& b);
};

using Kind = std::variant<Constant, Periodic, Affine, Factorial, EvenDouble, ExplicitPrefix>;

}  // namespace seq

/// A validated base sequence Q = (q_k), k >= 1, with q_k >= 2 for every k.
///
/// Construction validates the whole (infinite) sequence symbolically, so a
/// BaseSequenceSpec that exists is always valid. Instances are immutable.
class BaseSequenceSpec {
 public:
  /// Throws SpecValidationError naming the first offending k or parameter.
  explicit BaseSequenceSpec(seq::Kind kind);

  static BaseSequenceSpec constant(BigInt base);
  static BaseSequenceSpec periodic(std::vector<BigInt> period);
  static BaseSequenceSpec affine(BigInt slope, BigInt offset);
  static BaseSequenceSpec odd() { return affine(2, 1); }
  static BaseSequenceSpec factorial();
  static BaseSequenceSpec even();
  static BaseSequenceSpec prefixed(std::vector<BigInt> prefix, BaseSequenceSpec tail);

  [[nodiscard]] const seq::Kind& kind() const { return kind_; }

  /// q_k for k >= 1.
  [[nodiscard]] BigInt q_at(std::size_t k) const;

  /// Length of the repeating block for Constant (1) and Periodic specs.
  [[nodiscard]] std::optional<std::size_t> period_length() const;

  friend bool operator==(const BaseSequenceSpec& a, const BaseSequenceSpec& b) { return a.kind_ == b.kind_; }

 private:
  seq::Kind kind_;
};

/// Q_n = q_1 q_2 ... q_n (Q_0 = 1).
struct PartialProduct {
  std::size_t n = 0;
  BigInt value = 1;
};

[[nodiscard]] inline BigInt q_at(const BaseSequenceSpec& spec, std::size_t k) { return spec.q_at(k); }

[[nodiscard]] PartialProduct partial_product(const BaseSequenceSpec& spec, std::size_t n);

/// Product q_{from+1} ... q_{to}; 1 when from >= to.
[[nodiscard]] BigInt block_product(const BaseSequenceSpec& spec, std::size_t from, std::size_t to);

/// Grammar:
///   spec := "const:" INT | "periodic:" INT ("," INT)* | "affine:" INT "," INT
///         | "odd" | "even" | "factorial" | "prefix:" INT ("," INT)* ";" spec
[[nodiscard]] BaseSequenceSpec parse_spec(std::string_view text);

/// Inverse of parse_spec.
[[nodiscard]] std::string render(const BaseSequenceSpec& spec);

}  // namespace cantor
