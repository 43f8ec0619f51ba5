#include "cli.hpp"

#include "oddzeta/diophantine.hpp"
#include "oddzeta/equidist.hpp"
#include "oddzeta/errors.hpp"
#include "oddzeta/expr.hpp"
#include "oddzeta/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace oddzeta::cli {

namespace {

using Json = nlohmann::ordered_json;

// Bad flag values that CLI11 cannot catch on its own.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kEscalationAttempts = 8;
constexpr long kMaxTerms = 5000;
constexpr long kMaxCoeffIndex = 2000;

std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6e", value);
  return buffer;
}

// As many significant digits (up to max_digits) as the enclosure certifies.
std::string certified_decimal(const HReal& x, int max_digits) {
  for (int d = max_digits; d >= 1; --d) {
    try {
      return render_decimal(x, Digits{d});
    } catch (const InsufficientPrecision&) {
    }
  }
  return format_double(x.to_double());
}

Json convergent_list(const ContinuedFraction& cf) {
  Json out = Json::array();
  for (const Convergent& c : cf.convergents) {
    out.push_back(BigRational(c.p, c.q).to_string());
  }
  return out;
}

Json quotient_list(const ContinuedFraction& cf) {
  Json out = Json::array();
  for (const BigInt& a : cf.quotients) {
    out.push_back(a.fits_slong_p() ? Json(a.get_si()) : Json(a.get_str()));
  }
  return out;
}

Json metadata(std::string_view method, Json cutoffs, Bits bits, Digits digits) {
  Json meta;
  meta["method"] = method;
  meta["cutoffs"] = cutoffs.is_null() ? Json::object() : std::move(cutoffs);
  meta["precision_bits"] = bits.value;
  meta["precision_digits"] = digits.value;
  return meta;
}

Bits escalate(Bits bits) { return Bits{bits.value + bits.value / 2}; }

// Evaluates an expression at increasing precision until its continued fraction
// certifies @p terms quotients and @p accept (if given) succeeds.
struct CertifiedConstant {
  HReal value;
  ContinuedFraction cf;
  Bits bits{0};
};

CertifiedConstant certify_constant(const std::string& expr, Digits digits, std::size_t terms,
                                   const std::function<void(const CertifiedConstant&)>& accept = {}) {
  Bits bits = bits_for_digits(digits);
  for (int attempt = 0; attempt < kEscalationAttempts; ++attempt, bits = escalate(bits)) {
    CertifiedConstant c;
    c.bits = bits;
    c.value = evaluate_expr(expr, bits);
    try {
      c.cf = cf_expand(c.value, terms, expr);
      if (c.cf.certified_terms < terms) {
        continue;
      }
      if (accept) {
        accept(c);
      }
    } catch (const InsufficientPrecision&) {
      continue;
    }
    return c;
  }
  throw InsufficientPrecision("'" + expr + "': " + std::to_string(terms) +
                              " certified quotients not reached within the escalation cap");
}

Json zeta_command(int s, const std::string& method, Digits digits) {
  ZetaResult result;
  Json cutoffs = Json::object();
  std::optional<BigRational> coefficient;
  if (method == "direct") {
    result = zeta_direct(s, digits);
    cutoffs["N"] = result.truncation;
    cutoffs["euler_maclaurin_terms"] = result.correction_terms;
  } else if (method == "euler") {
    if (s < 2 || s % 2 != 0) {
      throw ConfigError("--method euler needs an even s >= 2");
    }
    result = zeta_even_exact(s / 2, digits);
    coefficient = even_zeta_coeff(static_cast<unsigned long>(s / 2));
  } else if (method == "lerch") {
    if (s < 3) {
      throw ConfigError("--method lerch needs s = 3 (mod 4)");
    }
    result = zeta_odd_lerch(s, digits);
    coefficient = lerch_leading_coeff(static_cast<unsigned long>((s - 1) / 2));
    cutoffs["M"] = result.truncation;
  } else {
    if (s != 5) {
      throw ConfigError("--method ramanujan is only defined for s = 5");
    }
    result = zeta5_ramanujan(digits);
    coefficient = BigRational(1, 294);
    cutoffs["M"] = result.truncation;
  }

  Json report;
  report["command"] = "zeta";
  report["inputs"] = {{"s", s}, {"digits", digits.value}, {"method", method}};
  report["value_decimal"] = render_decimal(result.value, digits);
  report["error_bound_decimal"] = render_radius(result.value);
  if (coefficient) {
    report["exact_rational"] = coefficient->to_string();
  }
  report["metadata"] = metadata(to_string(result.method), std::move(cutoffs), result.precision, digits);
  return report;
}

Json coeff_command(const std::string& kind, long n, Digits digits) {
  if (n < 0 || n > kMaxCoeffIndex) {
    throw ConfigError("--n must lie in [0, " + std::to_string(kMaxCoeffIndex) + "]");
  }
  const auto index = static_cast<unsigned long>(n);
  BigRational value;
  if (kind == "bernoulli") {
    value = bernoulli(index);
  } else if (kind == "euler") {
    value = BigRational(euler_number(index));
  } else if (kind == "even-zeta") {
    value = even_zeta_coeff(index);
  } else if (kind == "lerch") {
    value = lerch_leading_coeff(index);
  } else {
    value = dirichlet_beta_coeff(index);
  }
  const Bits bits = bits_for_digits(digits);
  const HReal decimal = HReal::from_rational(value, bits);

  Json report;
  report["command"] = "coeff";
  report["inputs"] = {{"kind", kind}, {"n", n}};
  report["value_decimal"] = render_decimal(decimal, digits);
  report["error_bound_decimal"] = render_radius(decimal);
  report["exact_rational"] = value.to_string();
  report["metadata"] = metadata("exact", Json::object(), bits, digits);
  return report;
}

Json split_command(int s, Digits digits, const std::optional<std::string>& supplied) {
  std::optional<BigRational> a;
  if (supplied) {
    a = BigRational::parse(*supplied);
  }
  const PiSplit split = pi_split(s, digits, a);
  const Bits bits = bits_for_digits(Digits{digits.value + 4});
  const HReal zeta = HReal::from_rational(split.a, bits) * pow(pi(bits), static_cast<unsigned long>(s)) +
                     split.b;

  Json report;
  report["command"] = "split";
  report["inputs"] = {{"s", s}, {"digits", digits.value}};
  if (supplied) {
    report["inputs"]["a"] = *supplied;
  }
  report["value_decimal"] = certified_decimal(zeta, digits.value);
  report["error_bound_decimal"] = render_radius(zeta);
  report["exact_rational"] = split.a.to_string();
  report["split"] = {{"a", split.a.to_string()},
                     {"b_decimal", certified_decimal(split.b, digits.value)},
                     {"b_error_bound", render_radius(split.b)},
                     {"degenerate", split.degenerate}};
  Json cutoffs = Json::object();
  cutoffs[split.source == ZetaMethod::direct ? "N" : "M"] = split.truncation;
  report["metadata"] = metadata(to_string(split.source), std::move(cutoffs), split.b.precision(), digits);
  return report;
}

Json cf_command(const std::string& expr, long terms, Digits digits) {
  if (terms < 1 || terms > kMaxTerms) {
    throw ConfigError("--terms must lie in [1, " + std::to_string(kMaxTerms) + "]");
  }
  const CertifiedConstant c = certify_constant(expr, digits, static_cast<std::size_t>(terms));

  Json report;
  report["command"] = "cf";
  report["inputs"] = {{"const", expr}, {"terms", terms}, {"digits", digits.value}};
  report["value_decimal"] = certified_decimal(c.value, digits.value);
  report["error_bound_decimal"] = render_radius(c.value);
  report["quotients"] = quotient_list(c.cf);
  report["convergents"] = convergent_list(c.cf);
  report["metadata"] = metadata("certified continued fraction", Json::object(), c.bits, digits);
  return report;
}

Json check_dioph_command(const std::string& expr, long max_n, Digits digits, std::optional<long> brute_bound,
                         std::optional<long> exclude_digits) {
  if (max_n < 0 || max_n > kMaxTerms) {
    throw ConfigError("--max-n must lie in [0, " + std::to_string(kMaxTerms) + "]");
  }
  if (brute_bound && (*brute_bound < 1 || *brute_bound > 1000000)) {
    throw ConfigError("--brute-force-bound must lie in [1, 10^6]");
  }
  if (exclude_digits && (*exclude_digits < 1 || *exclude_digits > kMaxDigits / 2)) {
    throw ConfigError("--exclude-denominator-digits must lie in [1, " + std::to_string(kMaxDigits / 2) + "]");
  }
  std::vector<InequalityCheck> checks;
  const CertifiedConstant c = certify_constant(
      expr, digits, static_cast<std::size_t>(max_n) + 2,
      [&](const CertifiedConstant& candidate) { checks = check_two_sided_inequality(candidate.cf, candidate.value); });

  Json rows = Json::array();
  long failures = 0;
  for (const InequalityCheck& check : checks) {
    if (check.n > static_cast<std::size_t>(max_n)) {
      break;
    }
    failures += check.passed() ? 0 : 1;
    rows.push_back({{"n", check.n},
                    {"p", check.p.get_str()},
                    {"q", check.q.get_str()},
                    {"q_next", check.q_next.get_str()},
                    {"residual", format_double(check.residual_estimate)},
                    {"lower_bound", format_double(0.5 / check.q_next.get_d())},
                    {"upper_bound", format_double(1.0 / check.q.get_d())},
                    {"lower", check.lower == CheckStatus::pass ? "pass" : "fail"},
                    {"upper", check.upper == CheckStatus::pass ? "pass" : "fail"}});
  }

  Json report;
  report["command"] = "check-dioph";
  report["inputs"] = {{"const", expr}, {"max_n", max_n}, {"digits", digits.value}};
  if (brute_bound) {
    report["inputs"]["brute_force_bound"] = *brute_bound;
  }
  if (exclude_digits) {
    report["inputs"]["exclude_denominator_digits"] = *exclude_digits;
  }
  report["value_decimal"] = certified_decimal(c.value, digits.value);
  report["error_bound_decimal"] = render_radius(c.value);
  report["quotients"] = quotient_list(c.cf);
  report["convergents"] = convergent_list(c.cf);
  report["checks"] = std::move(rows);
  report["failures"] = failures;

  if (brute_bound) {
    Json scans = Json::array();
    for (std::size_t n = 0; n < c.cf.certified_terms && c.cf.convergents[n].q <= *brute_bound; ++n) {
      const BestApproximationReport best = best_approx_bruteforce(c.value, c.cf, n);
      scans.push_back({{"n", best.n},
                       {"p", best.p.get_str()},
                       {"q", best.q.get_str()},
                       {"scanned", best.scanned},
                       {"optimal", best.optimal},
                       {"witness_k", best.witness_k ? Json(*best.witness_k) : Json(nullptr)},
                       {"scaled_bound_holds", best.scaled_bound_holds}});
    }
    report["best_approximation"] = std::move(scans);
  }
  if (exclude_digits) {
    const Digits needed{static_cast<int>(std::max<long>(digits.value, 2 * *exclude_digits + 4))};
    const HReal alpha = evaluate_expr(expr, bits_for_digits(needed));
    BigInt bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 10, static_cast<unsigned long>(*exclude_digits));
    const ExclusionReport exclusion = rational_exclusion(alpha, bound);
    report["exclusion"] = {{"denominator_bound", "10^" + std::to_string(*exclude_digits)},
                           {"epsilon", exclusion.epsilon},
                           {"rational_found", exclusion.rational_found},
                           {"simplest_rational", exclusion.simplest.to_string()},
                           {"convergents_examined", exclusion.convergents_examined},
                           {"statement", exclusion.statement}};
  }
  report["metadata"] = metadata("certified continued fraction", Json::object(), c.bits, digits);
  return report;
}

std::string_view mode_name(BruteMode mode) {
  switch (mode) {
    case BruteMode::high_precision:
      return "high_precision";
    case BruteMode::compensated_double:
      return "compensated_double";
    case BruteMode::automatic:
      break;
  }
  return "automatic";
}

Json weyl_command(const std::string& expr, long x, bool grid, Digits digits) {
  if (!grid && (x < 1 || x > 1000000)) {
    throw ConfigError("--x must lie in [1, 10^6]");
  }
  const Bits bits = bits_for_digits(digits);
  const HReal t = evaluate_expr(expr, bits);
  const std::vector<WeylReport> reports =
      grid ? weyl_grid(t) : std::vector<WeylReport>{weyl_average(t, static_cast<std::int64_t>(x))};

  Json rows = Json::array();
  for (const WeylReport& r : reports) {
    rows.push_back({{"x", r.x},
                    {"mode", mode_name(r.brute.mode)},
                    {"brute", certified_decimal(r.brute.real, 20)},
                    {"brute_error_bound", render_radius(r.brute.real)},
                    {"closed", certified_decimal(r.closed, 20)},
                    {"normalized", certified_decimal(r.normalized, 12)},
                    {"bound", certified_decimal(r.bound, 12)},
                    {"brute_matches_closed", r.brute_matches_closed},
                    {"within_bound", r.within_bound}});
  }

  Json report;
  report["command"] = "weyl";
  report["inputs"] = {{"t", expr}, {"digits", digits.value}};
  if (grid) {
    report["inputs"]["grid"] = true;
  } else {
    report["inputs"]["x"] = x;
  }
  report["value_decimal"] = certified_decimal(t, digits.value);
  report["error_bound_decimal"] = render_radius(t);
  report["checks"] = std::move(rows);
  report["metadata"] = metadata("dirichlet kernel", Json::object(), bits, digits);
  return report;
}

Json probe_command(const std::string& expr, long k, Digits digits) {
  if (k == 0) {
    throw ConfigError("--k must be nonzero");
  }
  const Bits bits = bits_for_digits(digits);
  const HReal alpha = evaluate_expr(expr, bits);
  const ContinuedFraction cf = cf_expand(alpha / pi(bits), kMaxTerms, expr + "/pi");
  const SineProbe probe = sine_probe(alpha, k, cf);

  Json report;
  report["command"] = "probe";
  report["inputs"] = {{"alpha", expr}, {"k", k}, {"digits", digits.value}};
  report["value_decimal"] = certified_decimal(probe.sin_value, digits.value);
  report["error_bound_decimal"] = render_radius(probe.sin_value);
  report["checks"] = Json::array({{{"nearest_multiple", probe.nearest_multiple.get_str()},
                                   {"distance_to_pi_multiple", certified_decimal(probe.distance_to_pi_multiple, 20)},
                                   {"convergent_index", probe.convergent_index},
                                   {"q_next", probe.q_next.get_str()},
                                   {"convergent_lower_bound", certified_decimal(probe.convergent_lower_bound, 20)},
                                   {"measured_ratio", certified_decimal(probe.measured_ratio, 12)},
                                   {"above_convergent_floor", !(probe.measured_ratio -
                                                                HReal::from_int(1, bits)).provably_negative()},
                                   {"concavity_holds", probe.concavity_holds}}});
  report["metadata"] = metadata("sine probe", Json{{"cf_terms", cf.certified_terms}}, bits, digits);
  return report;
}

Json derive_command(int at, Digits digits) {
  if (at != -2 && at != -4) {
    throw ConfigError("--at must be -2 or -4");
  }
  const int n = -at / 2;
  const DerivativeReport d = derivative_report(n, digits);
  const std::string reduction = n == 1 ? "zeta'(-2) = -zeta(3)/(4 pi^2)" : "zeta'(-4) = 3 zeta(5)/(4 pi^4)";

  Json checks = Json::array();
  checks.push_back({{"route", "closed_form"},
                    {"formula", reduction},
                    {"value", render_decimal(d.closed_form, digits)},
                    {"matches_numeric", d.numeric_matches_closed_form}});
  checks.push_back({{"route", "numeric_differentiation"},
                    {"value", certified_decimal(d.numeric.value, digits.value)},
                    {"step", format_double(d.numeric.step)},
                    {"spread", render_radius(d.numeric.spread)}});
  if (d.published) {
    checks.push_back({{"route", "published_constant"},
                      {"formula", d.published_formula},
                      {"value", certified_decimal(*d.published, digits.value)},
                      {"matches_numeric", d.numeric_matches_published}});
  }

  Json report;
  report["command"] = "derive";
  report["inputs"] = {{"at", at}, {"digits", digits.value}};
  report["value_decimal"] = render_decimal(d.closed_form, digits);
  report["error_bound_decimal"] = render_radius(d.closed_form);
  report["checks"] = std::move(checks);
  const std::string verdict = d.numeric_matches_closed_form ? "agrees" : "disagrees";
  if (d.published && !d.numeric_matches_published) {
    report["discrepancy"] = "the published constant (" + d.published_formula + ") disagrees with the reduction (" +
                            reduction + "); numerical differentiation " + verdict + " with the reduction to " +
                            std::to_string(d.agreement_digits) + " digits";
  } else {
    report["discrepancy"] = nullptr;
  }
  report["metadata"] =
      metadata("functional equation + zeta(2n+1)", Json{{"agreement_digits", d.agreement_digits}},
               d.closed_form.precision(), digits);
  return report;
}

// Nested objects flatten to dotted keys, arrays of scalars to space-separated values.
void flatten(const Json& value, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (value.is_object()) {
    for (const auto& [key, item] : value.items()) {
      flatten(item, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else if (value.is_array()) {
    std::string joined;
    for (const Json& item : value) {
      if (!joined.empty()) {
        joined += ' ';
      }
      joined += item.is_string() ? item.get<std::string>() : item.dump();
    }
    out.emplace_back(prefix, joined);
  } else {
    out.emplace_back(prefix, value.is_string() ? value.get<std::string>() : value.dump());
  }
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) {
    return text;
  }
  std::string quoted = "\"";
  for (const char c : text) {
    quoted += c;
    if (c == '"') {
      quoted += '"';
    }
  }
  return quoted + "\"";
}

std::string scalar_text(const Json& value) { return value.is_string() ? value.get<std::string>() : value.dump(); }

// Reports with per-row checks become a table; everything else a field,value list.
void write_csv(const Json& report, std::ostream& out) {
  const Json* table = nullptr;
  for (const char* key : {"checks", "best_approximation"}) {
    if (report.contains(key) && report[key].is_array() && !report[key].empty()) {
      table = &report[key];
      break;
    }
  }
  if (table == nullptr) {
    std::vector<std::pair<std::string, std::string>> fields;
    flatten(report, "", fields);
    out << "field,value\n";
    for (const auto& [key, value] : fields) {
      out << csv_field(key) << ',' << csv_field(value) << '\n';
    }
    return;
  }
  std::vector<std::string> columns;
  for (const Json& row : *table) {
    for (const auto& [key, item] : row.items()) {
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) {
        columns.push_back(key);
      }
    }
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out << (i ? "," : "") << csv_field(columns[i]);
  }
  out << '\n';
  for (const Json& row : *table) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      out << (i ? "," : "") << (row.contains(columns[i]) ? csv_field(scalar_text(row[columns[i]])) : "");
    }
    out << '\n';
  }
}

void write_plain(const Json& report, std::ostream& out) {
  for (const auto& [key, item] : report.items()) {
    if (item.is_array() && !item.empty() && item.front().is_object()) {
      out << key << ":\n";
      for (const Json& row : item) {
        std::string line;
        for (const auto& [field, value] : row.items()) {
          line += (line.empty() ? "  " : "  ") + field + "=" + scalar_text(value);
        }
        out << line << '\n';
      }
      continue;
    }
    std::vector<std::pair<std::string, std::string>> fields;
    flatten(item, key, fields);
    for (const auto& [name, value] : fields) {
      out << name << ": " << value << '\n';
    }
  }
}

int default_digits() {
  const char* env = std::getenv(kDigitsEnv);
  if (env == nullptr || *env == '\0') {
    return kDefaultDigits;
  }
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(env, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || env[used] != '\0') {
    throw ConfigError(std::string(kDigitsEnv) + " is not an integer: '" + env + "'");
  }
  return value;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"High-precision zeta constants, continued fractions and Diophantine checks", "oddzeta"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv", "plain"}));

  std::optional<int> digits_flag;
  auto add_digits = [&](CLI::App* sub) {
    sub->add_option("--digits", digits_flag, "Significant decimal digits (default 50 or $" +
                                                 std::string(kDigitsEnv) + ")");
  };

  int s = 0;
  std::string method = "direct";
  auto* zeta = app.add_subcommand("zeta", "zeta(s) for integer s >= 2");
  zeta->add_option("--s", s)->required();
  zeta->add_option("--method", method)->check(CLI::IsMember({"direct", "euler", "lerch", "ramanujan"}));
  add_digits(zeta);

  std::string kind;
  long n = 0;
  auto* coeff = app.add_subcommand("coeff", "Exact rational coefficients");
  coeff->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"bernoulli", "euler", "even-zeta", "lerch", "beta"}));
  coeff->add_option("--n", n)->required();
  add_digits(coeff);

  std::optional<std::string> supplied_a;
  auto* split = app.add_subcommand("split", "zeta(s) = a pi^s + b for odd s >= 3");
  split->add_option("--s", s)->required();
  split->add_option("--a", supplied_a, "Rational coefficient p/q for s = 1 (mod 4), s != 5");
  add_digits(split);

  std::string constant;
  long terms = 20;
  auto* cf = app.add_subcommand("cf", "Certified continued fraction of a constant");
  cf->add_option("--const", constant)->required();
  cf->add_option("--terms", terms);
  add_digits(cf);

  long max_n = 40;
  std::optional<long> brute_bound;
  std::optional<long> exclude_digits;
  auto* dioph = app.add_subcommand("check-dioph", "Two-sided convergent inequality checks");
  dioph->add_option("--const", constant)->required();
  dioph->add_option("--max-n", max_n);
  dioph->add_option("--brute-force-bound", brute_bound, "Scan convergents with q_n <= Q exhaustively");
  dioph->add_option("--exclude-denominator-digits", exclude_digits,
                    "Report rationals with denominator <= 10^K near the constant");
  add_digits(dioph);

  std::string t_expr;
  long x = 0;
  bool grid = false;
  auto* weyl = app.add_subcommand("weyl", "Dirichlet kernel and Weyl average");
  weyl->add_option("--t", t_expr)->required();
  auto* x_option = weyl->add_option("--x", x);
  weyl->add_flag("--grid", grid, "x = 10^3, 10^4, 10^5, 10^6");
  add_digits(weyl);

  std::string alpha;
  long k = 0;
  auto* probe = app.add_subcommand("probe", "sin(alpha k) with its convergent floor");
  probe->add_option("--alpha", alpha)->required();
  probe->add_option("--k", k)->required();
  add_digits(probe);

  int at = 0;
  auto* derive = app.add_subcommand("derive", "zeta'(-2) and zeta'(-4) by two routes");
  derive->add_option("--at", at)->required();
  add_digits(derive);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      out << app.help();
      return kExitOk;
    }
    err << "oddzeta: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    const int digits_value = digits_flag ? *digits_flag : default_digits();
    if (digits_value < kMinDigits || digits_value > kMaxDigits) {
      throw ConfigError("digits must lie in [" + std::to_string(kMinDigits) + ", " + std::to_string(kMaxDigits) +
                        "], got " + std::to_string(digits_value));
    }
    const Digits digits{digits_value};

    Json report;
    if (zeta->parsed()) {
      report = zeta_command(s, method, digits);
    } else if (coeff->parsed()) {
      report = coeff_command(kind, n, digits);
    } else if (split->parsed()) {
      report = split_command(s, digits, supplied_a);
    } else if (cf->parsed()) {
      report = cf_command(constant, terms, digits);
    } else if (dioph->parsed()) {
      report = check_dioph_command(constant, max_n, digits, brute_bound, exclude_digits);
    } else if (weyl->parsed()) {
      if (!grid && x_option->count() == 0) {
        throw ConfigError("weyl needs --x or --grid");
      }
      report = weyl_command(t_expr, x, grid, digits);
    } else if (probe->parsed()) {
      report = probe_command(alpha, k, digits);
    } else {
      report = derive_command(at, digits);
    }

    if (format == "json") {
      out << report.dump(2) << '\n';
    } else if (format == "csv") {
      write_csv(report, out);
    } else {
      write_plain(report, out);
    }
    return kExitOk;
  } catch (const InsufficientPrecision& e) {
    err << "oddzeta: insufficient precision: " << e.what() << '\n';
    return kExitPrecision;
  } catch (const NearSingularity& e) {
    err << "oddzeta: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "oddzeta: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::domain_error& e) {
    err << "oddzeta: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ConfigError& e) {
    err << "oddzeta: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace oddzeta::cli
