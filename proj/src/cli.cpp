#include "cantor/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "cantor/analysis.hpp"
#include "cantor/expansion.hpp"
#include "cantor/representation.hpp"
#include "cantor/sequences.hpp"

namespace cantor::cli {

namespace {

/// A flag value that could not be parsed or validated.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& flag, const std::string& message) : std::runtime_error(flag + ": " + message) {}
};

BaseSequenceSpec spec_flag(const std::string& text) {
  try {
    return parse_spec(text);
  } catch (const Error& e) {
    throw UsageError("--spec", e.what());
  }
}

std::size_t index_flag(const std::string& flag, const std::string& text) {
  try {
    return to_index(parse_bigint(text));
  } catch (const Error& e) {
    throw UsageError(flag, "expected a non-negative integer, got '" + text + "'");
  }
}

std::size_t positive_flag(const std::string& flag, const std::string& text) {
  const std::size_t value = index_flag(flag, text);
  if (value == 0) throw UsageError(flag, "must be positive");
  return value;
}

BigInt bigint_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_bigint(text);
  } catch (const Error& e) {
    throw UsageError(flag, e.what());
  }
}

/// Parses "p/r"; malformed text or r = 0 is a usage error, p/r outside [0, 1) a domain error.
Rational rational_flag(const std::string& flag, const std::string& text) {
  Rational x;
  try {
    x = Rational::parse(text);
  } catch (const Error& e) {
    throw UsageError(flag, "expected P/R, got '" + text + "'");
  }
  require_expansion_input(x);
  return x;
}

std::vector<BigInt> digits_flag(const std::string& flag, std::string_view text) {
  try {
    return parse_digits(text);
  } catch (const Error& e) {
    throw UsageError(flag, e.what());
  }
}

std::vector<std::size_t> breaks_flag(const std::string& text) {
  std::vector<std::size_t> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) values.push_back(index_flag("--breaks", item));
  if (values.empty() || text.ends_with(',')) throw UsageError("--breaks", "expected n1,n2,...");
  return values;
}

std::string reconstruct_digits(const BaseSequenceSpec& spec, std::string_view digits) {
  if (digits.ends_with("...")) {
    digits.remove_suffix(3);
    return evaluate(CantorRepr::truncated(digits_flag("--digits", digits), spec)).to_string();
  }
  return evaluate(CantorRepr::finite(digits_flag("--digits", digits), spec)).to_string();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Cantor series expansions of rational numbers", "cantor"};
  app.require_subcommand(1);

  std::string spec_text;
  std::string x_text;
  std::string count_text;
  std::string n_text;
  std::string digits_text;
  std::string period_text;
  std::string records_path;
  std::string base_text;
  std::string r_text;
  std::string bound_text;
  std::string w_text;
  std::string horizon_text;
  std::string n0_text;
  std::string breaks_text;
  bool marker = false;

  auto* expand = app.add_subcommand("expand", "Print the first N digits of P/R");
  expand->add_option("--spec", spec_text, "Base sequence")->required();
  expand->add_option("--x", x_text, "Rational P/R in [0, 1)")->required();
  expand->add_option("--count", count_text, "Number of digits")->required();
  expand->add_flag("--marker", marker, "Append '...' when the expansion continues past the cut");

  auto* shift = app.add_subcommand("shift", "Print sigma^N(P/R)");
  shift->add_option("--spec", spec_text)->required();
  shift->add_option("--x", x_text)->required();
  shift->add_option("--n", n_text)->required();

  auto* reconstruct = app.add_subcommand("reconstruct", "Evaluate a digit string back to P/R");
  reconstruct->add_option("--spec", spec_text);
  reconstruct->add_option("--digits", digits_text, "Digits, or the preperiod when --period is given");
  reconstruct->add_option("--period", period_text, "Repeating digits");
  reconstruct->add_option("--records", records_path, "File of '<spec> | <digits>' records, one per line");

  auto* cylinder = app.add_subcommand("cylinder", "Print the endpoints of the cylinder with base D");
  cylinder->add_option("--spec", spec_text)->required();
  cylinder->add_option("--base", base_text)->required();

  auto* period = app.add_subcommand("period", "Find the eventually periodic form of P/R");
  period->add_option("--spec", spec_text)->required();
  period->add_option("--x", x_text)->required();

  auto* finite = app.add_subcommand("finite", "Smallest k0 <= B with R | q_1...q_k0");
  finite->add_option("--r", r_text)->required();
  finite->add_option("--spec", spec_text)->required();
  finite->add_option("--bound", bound_text)->required();

  auto* unitfrac = app.add_subcommand("unitfrac", "Digits (q_k - 1)/W of 1/W");
  unitfrac->add_option("--w", w_text)->required();
  unitfrac->add_option("--spec", spec_text)->required();
  unitfrac->add_option("--horizon", horizon_text)->required();

  auto* constshift = app.add_subcommand("constshift", "Check sigma^n(P/R) = const for n >= N0");
  constshift->add_option("--spec", spec_text)->required();
  constshift->add_option("--x", x_text)->required();
  constshift->add_option("--n0", n0_text)->required();
  constshift->add_option("--horizon", horizon_text)->required();

  auto* grouping = app.add_subcommand("grouping", "Block ratios lambda_k / mu_k between breakpoints");
  grouping->add_option("--spec", spec_text)->required();
  grouping->add_option("--x", x_text)->required();
  grouping->add_option("--breaks", breaks_text)->required();
  grouping->add_option("--horizon", horizon_text)->required();

  std::vector<const char*> argv{"cantor"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (expand->parsed()) {
      const auto spec = spec_flag(spec_text);
      const auto x = rational_flag("--x", x_text);
      const auto count = index_flag("--count", count_text);
      DigitStream stream(x, spec);
      out << render_digits(stream.take(count));
      if (marker && !stream.terminated()) out << "...";
      out << "\n";
    } else if (shift->parsed()) {
      const auto spec = spec_flag(spec_text);
      const auto x = rational_flag("--x", x_text);
      out << shift_n(x, spec, index_flag("--n", n_text)) << "\n";
    } else if (reconstruct->parsed()) {
      if (!records_path.empty()) {
        if (!spec_text.empty() || !digits_text.empty() || !period_text.empty()) {
          throw UsageError("--records", "cannot be combined with --spec, --digits or --period");
        }
        std::ifstream in(records_path);
        if (!in) throw UsageError("--records", "cannot open '" + records_path + "'");
        std::string line;
        while (std::getline(in, line)) {
          if (line.empty()) continue;
          out << evaluate(parse_record(line)) << "\n";
        }
      } else {
        if (spec_text.empty()) throw UsageError("--spec", "is required");
        if (reconstruct->count("--digits") == 0 && reconstruct->count("--period") == 0) {
          throw UsageError("--digits", "is required");
        }
        const auto spec = spec_flag(spec_text);
        if (reconstruct->count("--period") != 0) {
          const auto pre = digits_flag("--digits", digits_text);
          const auto rep = digits_flag("--period", period_text);
          out << eval_periodic(pre, rep, spec) << "\n";
        } else {
          out << reconstruct_digits(spec, digits_text) << "\n";
        }
      }
    } else if (cylinder->parsed()) {
      const auto spec = spec_flag(spec_text);
      const auto c = cylinder_interval(digits_flag("--base", base_text), spec);
      out << "left=" << c.left << " right=" << c.right << "\n";
    } else if (period->parsed()) {
      const auto spec = spec_flag(spec_text);
      const auto x = rational_flag("--x", x_text);
      const auto report = detect_period(x, spec);
      out << render_period_report(report) << "\n";
      out << "x=" << evaluate(to_repr(report, spec)) << "\n";
    } else if (finite->parsed()) {
      const auto r = bigint_flag("--r", r_text);
      if (r < 1) throw UsageError("--r", "must be positive");
      const auto spec = spec_flag(spec_text);
      const auto k0 = finiteness_horizon(r, spec, positive_flag("--bound", bound_text));
      out << "k0=" << (k0 ? std::to_string(*k0) : std::string("none")) << "\n";
    } else if (unitfrac->parsed()) {
      const auto w = bigint_flag("--w", w_text);
      if (w < 1) throw UsageError("--w", "must be positive");
      const auto spec = spec_flag(spec_text);
      const auto result = unit_fraction_digits(w, spec, positive_flag("--horizon", horizon_text));
      if (result.digits) {
        out << "digits=" << render_digits(*result.digits) << " certified=" << (result.certified ? "true" : "false")
            << "\n";
      } else {
        out << "absent k=" << *result.failing_k << "\n";
      }
    } else if (constshift->parsed()) {
      const auto spec = spec_flag(spec_text);
      const auto x = rational_flag("--x", x_text);
      const auto n0 = index_flag("--n0", n0_text);
      const auto horizon = index_flag("--horizon", horizon_text);
      if (horizon <= n0) throw UsageError("--horizon", "must exceed --n0");
      const auto result = constant_shift_check(x, spec, n0, horizon);
      out << "holds=" << (result.holds ? "true" : "false") << " q0=" << result.min_base
          << " position=" << result.min_position << " eps0=" << result.min_digit;
      if (result.first_failure) out << " first_failure=" << *result.first_failure;
      if (result.ambiguous_min) out << " ambiguous_min=true";
      out << "\n";
      out << "shift=" << result.shift_value << " shift_constant=" << (result.shift_constant ? "true" : "false")
          << "\n";
    } else if (grouping->parsed()) {
      const auto spec = spec_flag(spec_text);
      const auto x = rational_flag("--x", x_text);
      const auto breaks = breaks_flag(breaks_text);
      const auto horizon = index_flag("--horizon", horizon_text);
      out << render_grouping_report(grouping_ratios(x, spec, breaks, horizon)) << "\n";
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace cantor::cli
