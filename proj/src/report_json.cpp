#include "vpal/report_json.hpp"

namespace vpal {
namespace {

using nlohmann::json;

json decimal_array(std::span<const BigInt> values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

json optional_set(const std::optional<BigInt>& v) {
  json out = json::array();
  if (v) out.push_back(to_decimal(*v));
  return out;
}

}  // namespace

json to_json(const Factorization& f) {
  json out = json::array();
  for (const auto& [p, e] : f) out.push_back({{"p", to_decimal(p)}, {"e", std::to_string(e)}});
  return out;
}

json to_json(const IndicatorCombination& comb) {
  json out = json::array();
  for (const auto& [c, lambda] : comb.terms()) {
    out.push_back({{"c", to_decimal(c)}, {"lambda", std::to_string(lambda)}});
  }
  return out;
}

json to_json(const AnalysisReport& report) {
  json crucial = json::array();
  for (std::size_t i = 0; i < report.crucial.size(); ++i) {
    const auto& r = report.crucial[i];
    json row = {{"p", to_decimal(r.p)},
                {"a", std::to_string(r.a)},
                {"b", std::to_string(r.b)},
                {"delta", std::to_string(r.delta)},
                {"mu", std::to_string(r.mu)}};
    if (report.h[i]) {
      row["h1"] = to_decimal(report.h[i]->h1);
      row["h2"] = to_decimal(report.h[i]->h2);
    }
    crucial.push_back(std::move(row));
  }

  json solutions = json::array();
  for (const auto& s : report.solutions) {
    json cases = json::array();
    for (auto label : s.labels) cases.push_back(to_string(label));
    json pairs = json::array();
    for (const auto& pair : s.pairs) {
      pairs.push_back({{"A", optional_set(pair.a)}, {"B", optional_set(pair.b)}});
    }
    solutions.push_back({{"u", decimal_array(s.solution)},
                         {"cases", std::move(cases)},
                         {"pairs", std::move(pairs)},
                         {"A", decimal_array(s.A)},
                         {"B", decimal_array(s.B)},
                         {"degenerate", s.degenerate}});
  }

  return {{"n", to_decimal(report.n)},
          {"reverse", to_decimal(report.reverse)},
          {"digits", std::to_string(report.digits)},
          {"factorization",
           {{"n", to_json(report.n_factors)}, {"reverse", to_json(report.reverse_factors)}}},
          {"crucial_primes", std::move(crucial)},
          {"solutions", std::move(solutions)},
          {"indicator", to_json(report.indicator)},
          {"order", to_string(report.order_value)},
          {"omega0", to_decimal(report.omega0)},
          {"omega_f", to_decimal(report.omega_f)},
          {"omega_b", to_decimal(report.omega_b)}};
}

std::string render_json(const AnalysisReport& report) { return to_json(report).dump(2); }

}  // namespace vpal
