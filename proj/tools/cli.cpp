#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "vpal/number_core.hpp"
#include "vpal/oracle.hpp"
#include "vpal/report_json.hpp"
#include "vpal/spectrum.hpp"

namespace vpal::cli {
namespace {

using nlohmann::json;

enum class Format { kPretty, kJson, kCsv };

struct Config {
  Format format = Format::kPretty;
  FactorBudget budget;
  unsigned workers = 1;
};

constexpr std::uint64_t kMinBudget = 10'000;

// The 18 rows of the published table of indicator functions.
const std::vector<std::string> kPublishedPreset = {"13",  "17",  "18",  "19",  "26",  "37",
                                               "39",  "48",  "49",  "56",  "79",  "103",
                                               "107", "109", "113", "117", "119", "122"};

// ---------------------------------------------------------------------------
// Output helpers

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << csv_field(fields[i]);
  }
  out << "\r\n";
}

// Left-aligned columns separated by two spaces.
class TextTable {
 public:
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out, const std::string& indent = "  ") const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      if (width.size() < row.size()) width.resize(row.size(), 0);
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows_) {
      std::string line = indent;
      for (std::size_t i = 0; i < row.size(); ++i) {
        line += row[i];
        if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
      }
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string set_text(std::span<const BigInt> values) {
  std::vector<std::string> parts;
  for (const auto& v : values) parts.push_back(to_decimal(v));
  return "{" + join(parts, ",") + "}";
}

std::string optional_set_text(const std::optional<BigInt>& v) {
  return v ? "{" + to_decimal(*v) + "}" : "{}";
}

std::string tuple_text(const CharSolution& u) {
  std::vector<std::string> parts;
  for (const auto& x : u) parts.push_back(to_decimal(x));
  return "(" + join(parts, ",") + ")";
}

std::string factorization_text(const Factorization& f) {
  if (f.empty()) return "1";
  std::vector<std::string> parts;
  for (const auto& [p, e] : f) parts.push_back(to_decimal(p) + (e > 1 ? "^" + std::to_string(e) : ""));
  return join(parts, " * ");
}

std::string complex_text(spectrum::Complex z) {
  std::ostringstream s;
  s << std::setprecision(12);
  const double re = std::abs(z.real()) < spectrum::kZeroTolerance ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < spectrum::kZeroTolerance ? 0.0 : z.imag();
  s << re;
  if (im != 0.0) s << (im > 0 ? "+" : "-") << std::abs(im) << "i";
  return s.str();
}

std::string witness_text(const std::optional<std::pair<BigInt, BigInt>>& w) {
  return w ? to_decimal(w->first) + " does not divide " + to_decimal(w->second) : "";
}

BigInt parse_n(const std::string& text) {
  const DigitNumber n = DigitNumber::parse(text);
  if (n.value() < 1) throw InvalidInput("n must be a positive integer");
  return n.value();
}

// ---------------------------------------------------------------------------
// analyze

void print_analysis(std::ostream& out, const AnalysisReport& r) {
  out << "n = " << r.n << " = " << factorization_text(r.n_factors) << '\n';
  out << "r(n) = " << r.reverse << " = " << factorization_text(r.reverse_factors) << '\n';
  out << "d = " << r.digits << "\n\ncrucial primes\n";

  TextTable primes;
  primes.add({"p", "a", "b", "delta", "mu", "h_p", "h_p^2"});
  for (std::size_t i = 0; i < r.crucial.size(); ++i) {
    const auto& c = r.crucial[i];
    primes.add({to_decimal(c.p), std::to_string(c.a), std::to_string(c.b), std::to_string(c.delta),
                std::to_string(c.mu), r.h[i] ? to_decimal(r.h[i]->h1) : "-",
                r.h[i] ? to_decimal(r.h[i]->h2) : "-"});
  }
  primes.print(out);

  out << "\ncharacteristic solutions: " << r.solutions.size() << '\n';
  if (!r.solutions.empty()) {
    TextTable cases;
    std::vector<std::string> head = {"#", "u"};
    for (const auto& c : r.crucial) head.push_back("D(" + to_decimal(c.p) + ")");
    cases.add(head);
    for (std::size_t j = 0; j < r.solutions.size(); ++j) {
      const auto& s = r.solutions[j];
      std::vector<std::string> row = {std::to_string(j + 1), tuple_text(s.solution)};
      for (auto label : s.labels) row.push_back(to_string(label));
      cases.add(row);
    }
    cases.print(out);

    out << "\nconstraint pairs\n";
    TextTable pairs;
    head = {"#"};
    for (const auto& c : r.crucial) head.push_back("T(" + to_decimal(c.p) + ")");
    head.insert(head.end(), {"A_u", "B_u", "S_u"});
    pairs.add(head);
    for (std::size_t j = 0; j < r.solutions.size(); ++j) {
      const auto& s = r.solutions[j];
      std::vector<std::string> row = {std::to_string(j + 1)};
      for (const auto& t : s.pairs) {
        row.push_back("(" + optional_set_text(t.a) + "," + optional_set_text(t.b) + ")");
      }
      row.push_back(set_text(s.A));
      row.push_back(set_text(s.B));
      row.push_back(s.degenerate ? "empty" : "S(" + set_text(s.A) + "," + set_text(s.B) + ")");
      pairs.add(row);
    }
    pairs.print(out);
  }

  out << '\n';
  out << "I = " << r.indicator.to_string() << '\n';
  out << "c(n) = " << to_string(r.order_value) << '\n';
  out << "omega0 = " << r.omega0 << '\n';
  out << "omega_f = " << r.omega_f << '\n';
  out << "omega_b = " << r.omega_b << '\n';
}

int cmd_analyze(const Config& cfg, const std::string& n_text, std::ostream& out) {
  const AnalysisReport r = analyze(parse_n(n_text), cfg.budget);
  switch (cfg.format) {
    case Format::kJson:
      out << render_json(r) << '\n';
      break;
    case Format::kCsv:
      csv_row(out, {"n", "indicator", "order", "omega0", "omega_f", "omega_b"});
      csv_row(out, {to_decimal(r.n), r.indicator.to_string(), to_string(r.order_value),
                    to_decimal(r.omega0), to_decimal(r.omega_f), to_decimal(r.omega_b)});
      break;
    case Format::kPretty:
      print_analysis(out, r);
      break;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

std::string observed_text(const std::optional<bool>& b) {
  return b ? (*b ? "1" : "0") : "UNVERIFIED";
}

std::string agrees_text(const std::optional<bool>& b) {
  return b ? (*b ? "yes" : "NO") : "SKIPPED";
}

int cmd_verify(const Config& cfg, const std::string& n_text, unsigned long k_max,
               const std::string& mode_name, bool strict, std::ostream& out) {
  oracle::BruteForceMode mode;
  if (mode_name == "direct") {
    mode = oracle::BruteForceMode::kDirect;
  } else if (mode_name == "accelerated") {
    mode = oracle::BruteForceMode::kAccelerated;
  } else {
    mode = oracle::BruteForceMode::kAuto;
  }
  const auto report = oracle::verify(parse_n(n_text), k_max, cfg.budget, mode);

  switch (cfg.format) {
    case Format::kJson: {
      json rows = json::array();
      for (const auto& row : report.rows) {
        rows.push_back({{"k", std::to_string(row.k)},
                        {"digits", std::to_string(row.digits)},
                        {"predicted", row.predicted},
                        {"observed", row.observed ? json(*row.observed) : json("UNVERIFIED")},
                        {"mode", oracle::to_string(row.mode)},
                        {"agrees", row.agrees() ? json(*row.agrees()) : json("SKIPPED")}});
      }
      json doc = {{"n", to_decimal(report.n)},
                  {"indicator", to_json(report.indicator)},
                  {"rows", std::move(rows)},
                  {"agreements", std::to_string(report.agreements)},
                  {"disagreements", std::to_string(report.disagreements)},
                  {"unverified", std::to_string(report.unverified)}};
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      csv_row(out, {"k", "digits", "predicted", "observed", "mode", "agrees"});
      for (const auto& row : report.rows) {
        csv_row(out, {std::to_string(row.k), std::to_string(row.digits), row.predicted ? "1" : "0",
                      observed_text(row.observed), oracle::to_string(row.mode),
                      agrees_text(row.agrees())});
      }
      break;
    case Format::kPretty: {
      out << "n = " << report.n << '\n';
      out << "I = " << report.indicator.to_string() << '\n';
      TextTable t;
      t.add({"k", "digits", "predicted", "observed", "mode", "agrees"});
      for (const auto& row : report.rows) {
        t.add({std::to_string(row.k), std::to_string(row.digits), row.predicted ? "1" : "0",
               observed_text(row.observed), oracle::to_string(row.mode), agrees_text(row.agrees())});
      }
      t.print(out);
      out << "rows = " << report.rows.size() << ", agree = " << report.agreements
          << ", disagree = " << report.disagreements << ", unverified = " << report.unverified
          << '\n';
      break;
    }
  }
  if (report.disagreements > 0) return kDisagreement;
  if (strict && report.unverified > 0) return kBudgetExhausted;
  return kOk;
}

// ---------------------------------------------------------------------------
// table

int cmd_table(const Config& cfg, bool preset, std::vector<std::string> values, std::ostream& out) {
  if (preset) values.insert(values.begin(), kPublishedPreset.begin(), kPublishedPreset.end());
  if (values.empty()) throw InvalidInput("table needs --preset paper or a list of n");

  std::vector<AnalysisReport> reports;
  for (const auto& v : values) reports.push_back(analyze(parse_n(v), cfg.budget));

  switch (cfg.format) {
    case Format::kJson: {
      json rows = json::array();
      for (const auto& r : reports) {
        rows.push_back({{"n", to_decimal(r.n)},
                        {"indicator", to_json(r.indicator)},
                        {"order", to_string(r.order_value)},
                        {"omega0", to_decimal(r.omega0)}});
      }
      out << rows.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      csv_row(out, {"n", "indicator", "c", "omega0"});
      for (const auto& r : reports) {
        csv_row(out, {to_decimal(r.n), r.indicator.to_string(), to_string(r.order_value),
                      to_decimal(r.omega0)});
      }
      break;
    case Format::kPretty: {
      TextTable t;
      t.add({"n", "I^n", "c(n)", "omega0(n)"});
      bool footnote = false;
      for (const auto& r : reports) {
        std::string w0 = to_decimal(r.omega0);
        if (preset && r.n == 117) {
          w0 += "*";
          footnote = true;
        }
        t.add({to_decimal(r.n), r.indicator.to_string(), to_string(r.order_value), w0});
      }
      t.print(out);
      if (footnote) {
        out << "* printed as 2045 in the original table; I_2054 forces omega0 = 2054\n";
      }
      break;
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// search

json hit_json(const oracle::SearchHit& hit) {
  const auto& r = hit.evidence;
  json doc = {{"n", to_decimal(hit.n)},
              {"property", oracle::to_string(hit.property)},
              {"indicator", to_json(r.indicator)},
              {"order", to_string(r.order_value)},
              {"omega0", to_decimal(r.omega0)},
              {"omega_f", to_decimal(r.omega_f)},
              {"omega_b", to_decimal(r.omega_b)}};
  if (hit.witness) doc["witness"] = {to_decimal(hit.witness->first), to_decimal(hit.witness->second)};
  return doc;
}

int cmd_search(const Config& cfg, const std::string& property_name, const std::string& until,
               bool first_only, std::ostream& out) {
  const auto property = oracle::parse_search_property(property_name);
  oracle::SearchOptions options;
  options.workers = cfg.workers;
  options.budget = cfg.budget;
  options.stop_at_first = first_only;

  if (cfg.format == Format::kCsv) {
    csv_row(out, {"n", "property", "indicator", "order", "omega0", "omega_f", "omega_b", "witness"});
  }
  options.on_hit = [&](const oracle::SearchHit& hit) {
    const auto& r = hit.evidence;
    switch (cfg.format) {
      case Format::kJson:
        out << hit_json(hit).dump() << '\n';
        break;
      case Format::kCsv:
        csv_row(out, {to_decimal(hit.n), oracle::to_string(hit.property), r.indicator.to_string(),
                      to_string(r.order_value), to_decimal(r.omega0), to_decimal(r.omega_f),
                      to_decimal(r.omega_b), witness_text(hit.witness)});
        break;
      case Format::kPretty:
        out << hit.n << "  I = " << r.indicator.to_string() << "  c(n) = " << to_string(r.order_value)
            << "  omega0 = " << r.omega0 << "  omega_f = " << r.omega_f
            << "  omega_b = " << r.omega_b;
        if (hit.witness) out << "  witness: " << witness_text(hit.witness);
        out << '\n';
        break;
    }
    out.flush();
  };
  const auto hits = oracle::search(parse_n(until), property, options);
  if (cfg.format == Format::kPretty) out << "hits = " << hits.size() << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// spectrum

std::vector<spectrum::Complex> parse_samples(const std::string& text) {
  // Comma separated; each sample is "re" or "re:im".
  auto number = [&](std::string_view s) {
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw InvalidInput("malformed sample '" + std::string(s) + "'");
    }
    return v;
  };
  std::vector<spectrum::Complex> out;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    std::string_view token = rest.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    const auto colon = token.find(':');
    if (colon == std::string_view::npos) {
      out.emplace_back(number(token), 0.0);
    } else {
      out.emplace_back(number(token.substr(0, colon)), number(token.substr(colon + 1)));
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (out.size() > 4096) throw InvalidInput("at most 4096 samples are accepted");
  return out;
}

void print_spectral_map(std::ostream& out, const Config& cfg, const spectrum::SpectralMap& g) {
  if (cfg.format == Format::kCsv) {
    csv_row(out, {"root", "coefficient"});
    for (const auto& [r, c] : g.entries()) {
      csv_row(out, {std::to_string(r.num) + "/" + std::to_string(r.den), complex_text(c)});
    }
    return;
  }
  TextTable t;
  t.add({"root", "coefficient"});
  for (const auto& [r, c] : g.entries()) {
    t.add({std::to_string(r.num) + "/" + std::to_string(r.den), complex_text(c)});
  }
  t.print(out);
}

json spectral_map_json(const spectrum::SpectralMap& g) {
  json out = json::array();
  for (const auto& [r, c] : g.entries()) {
    out.push_back({{"num", std::to_string(r.num)},
                   {"den", std::to_string(r.den)},
                   {"re", c.real()},
                   {"im", c.imag()}});
  }
  return out;
}

int cmd_spectrum_periods(const Config& cfg, const std::string& samples_text, std::ostream& out) {
  const auto s = spectrum::PeriodicSamples::from(parse_samples(samples_text));
  const auto g = spectrum::samples_to_spectrum(s);
  const auto by_support = spectrum::support_period(g);
  const auto by_theorem9 = spectrum::theorem9_period(s);
  const auto by_scan = spectrum::naive_fundamental_period(s);
  if (cfg.format == Format::kJson) {
    json doc = {{"omega", std::to_string(s.period)},
                {"spectrum", spectral_map_json(g)},
                {"support_period", std::to_string(by_support)},
                {"theorem9_period", std::to_string(by_theorem9)},
                {"naive_period", std::to_string(by_scan)}};
    out << doc.dump(2) << '\n';
    return kOk;
  }
  if (cfg.format == Format::kPretty) out << "omega = " << s.period << '\n';
  print_spectral_map(out, cfg, g);
  if (cfg.format == Format::kCsv) {
    csv_row(out, {"formula", "period"});
    csv_row(out, {"support", std::to_string(by_support)});
    csv_row(out, {"theorem9", std::to_string(by_theorem9)});
    csv_row(out, {"naive", std::to_string(by_scan)});
  } else {
    out << "support_period = " << by_support << '\n';
    out << "theorem9_period = " << by_theorem9 << '\n';
    out << "naive_period = " << by_scan << '\n';
  }
  return kOk;
}

int cmd_spectrum_indicator(const Config& cfg, const std::string& a_text, std::ostream& out) {
  const BigInt a = parse_n(a_text);
  if (!fits_u64(a) || a > 1'000'000) throw InvalidInput("indicator modulus must be <= 1000000");
  const auto g = spectrum::indicator_spectrum(static_cast<std::int64_t>(to_u64(a)));
  if (cfg.format == Format::kJson) {
    json doc = {{"a", to_decimal(a)},
                {"spectrum", spectral_map_json(g)},
                {"support_period", std::to_string(spectrum::support_period(g))}};
    out << doc.dump(2) << '\n';
    return kOk;
  }
  print_spectral_map(out, cfg, g);
  if (cfg.format == Format::kPretty) out << "support_period = " << spectrum::support_period(g) << '\n';
  return kOk;
}

int cmd_spectrum_of_indicator(const Config& cfg, const std::string& n_text, std::ostream& out) {
  const AnalysisReport r = analyze(parse_n(n_text), cfg.budget);
  const auto s = spectrum::combination_divisor_spectrum(r.indicator);
  const BigInt period = spectrum::support_period(s);
  auto euler_phi = [](const BigInt& d) {
    BigInt phi = 1;
    for (const auto& [p, e] : factorize(d)) phi *= (p - 1) * pow(p, e - 1);
    return phi;
  };

  switch (cfg.format) {
    case Format::kJson: {
      json classes = json::array();
      for (const auto& [d, c] : s.coefficients()) {
        classes.push_back({{"d", to_decimal(d)}, {"roots", to_decimal(euler_phi(d))},
                           {"coefficient", c.get_str()}});
      }
      json doc = {{"n", to_decimal(r.n)},
                  {"indicator", to_json(r.indicator)},
                  {"classes", std::move(classes)},
                  {"support_period", to_decimal(period)},
                  {"omega0", to_decimal(r.omega0)}};
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      csv_row(out, {"d", "roots", "coefficient"});
      for (const auto& [d, c] : s.coefficients()) {
        csv_row(out, {to_decimal(d), to_decimal(euler_phi(d)), c.get_str()});
      }
      break;
    case Format::kPretty: {
      out << "I = " << r.indicator.to_string() << '\n';
      out << "coefficient of every primitive d-th root of unity:\n";
      TextTable t;
      t.add({"d", "roots", "coefficient"});
      for (const auto& [d, c] : s.coefficients()) {
        t.add({to_decimal(d), to_decimal(euler_phi(d)), c.get_str()});
      }
      t.print(out);
      out << "support_period = " << period << '\n';
      out << "omega0 = " << r.omega0 << '\n';
      break;
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------

std::uint64_t resolve_budget(const std::optional<std::string>& flag) {
  std::optional<std::string> text = flag;
  if (!text) {
    if (const char* env = std::getenv("VPAL_FACTOR_BUDGET"); env && *env) text = env;
  }
  if (!text) return FactorBudget{}.max_rho_iterations;
  const BigInt value = parse_decimal(*text);
  if (value < kMinBudget) throw InvalidInput("factor budget must be >= 10000");
  return fits_u64(value) ? to_u64(value) : UINT64_MAX;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"vpal: v-palindromic repeated concatenations"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "pretty";
  std::optional<std::string> budget_text;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"pretty", "json", "csv"}));
  app.add_option("--budget", budget_text,
                 "Pollard-rho iteration cap (default 4000000; env VPAL_FACTOR_BUDGET)");

  std::string n_text;
  bool json_flag = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Indicator function, order and periods of n");
  analyze_cmd->add_option("n", n_text, "Integer n")->required();
  analyze_cmd->add_flag("--json", json_flag, "Same as --format json");

  unsigned long k_max = 0;
  bool strict = false;
  std::string mode_name = "auto";
  auto* verify_cmd = app.add_subcommand("verify", "Compare the indicator with brute force");
  verify_cmd->add_option("n", n_text, "Integer n")->required();
  verify_cmd->add_option("--kmax", k_max, "Largest k checked")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--strict", strict, "Exit 3 when some row is UNVERIFIED");
  verify_cmd->add_option("--mode", mode_name, "Brute-force mode")
      ->check(CLI::IsMember({"direct", "accelerated", "auto"}));

  std::string preset;
  std::vector<std::string> table_values;
  auto* table_cmd = app.add_subcommand("table", "Indicator listing for several n");
  table_cmd->add_option("--preset", preset, "Named list of n")->check(CLI::IsMember({"paper"}));
  table_cmd->add_option("n", table_values, "Integers n");

  std::string property_name, until;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  bool first_only = false;
  auto* search_cmd = app.add_subcommand("search", "Scan n for counterexamples");
  search_cmd->add_option("property", property_name, "conj1, omegab or anomaly")->required();
  search_cmd->add_option("--until", until, "Last n scanned")->required();
  search_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  search_cmd->add_flag("--first", first_only, "Stop after the first hit");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Root-of-unity spectra");
  spectrum_cmd->require_subcommand(1);
  std::string samples_text, spectrum_arg;
  auto* periods_cmd = spectrum_cmd->add_subcommand("periods", "Fundamental period of samples");
  periods_cmd->add_option("--samples", samples_text, "f(0),...,f(w-1); complex as re:im")
      ->required();
  auto* of_indicator_cmd =
      spectrum_cmd->add_subcommand("of-indicator", "Exact spectrum of the indicator of n");
  of_indicator_cmd->add_option("n", spectrum_arg, "Integer n")->required();
  auto* indicator_cmd = spectrum_cmd->add_subcommand("indicator", "Spectrum of I_a");
  indicator_cmd->add_option("a", spectrum_arg, "Modulus a")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    Config cfg;
    cfg.format = format_name == "json" ? Format::kJson
                 : format_name == "csv" ? Format::kCsv
                                        : Format::kPretty;
    if (json_flag) cfg.format = Format::kJson;
    cfg.budget.max_rho_iterations = resolve_budget(budget_text);
    cfg.workers = workers;

    if (*analyze_cmd) return cmd_analyze(cfg, n_text, out);
    if (*verify_cmd) return cmd_verify(cfg, n_text, k_max, mode_name, strict, out);
    if (*table_cmd) return cmd_table(cfg, !preset.empty(), table_values, out);
    if (*search_cmd) return cmd_search(cfg, property_name, until, first_only, out);
    if (*periods_cmd) return cmd_spectrum_periods(cfg, samples_text, out);
    if (*of_indicator_cmd) return cmd_spectrum_of_indicator(cfg, spectrum_arg, out);
    if (*indicator_cmd) return cmd_spectrum_indicator(cfg, spectrum_arg, out);
  } catch (const BudgetExceeded& e) {
    err << "error: factor budget exhausted: " << e.what() << '\n';
    return kBudgetExhausted;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const PeriodMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    // Self-check failures are treated like a disagreement.
    err << "error: " << e.what() << '\n';
    return kDisagreement;
  }
  return kOk;
}

}  // namespace vpal::cli
