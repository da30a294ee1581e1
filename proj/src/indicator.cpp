#include "vpal/indicator.hpp"

#include <algorithm>
#include <map>

#include "vpal/number_core.hpp"

namespace vpal {
namespace {

void expand_subsets(std::span<const BigInt> B, std::size_t i, const BigInt& current_lcm,
                    std::int64_t sign, std::vector<IndicatorTerm>& out) {
  if (i == B.size()) {
    out.push_back({current_lcm, sign});
    return;
  }
  expand_subsets(B, i + 1, current_lcm, sign, out);
  expand_subsets(B, i + 1, lcm(current_lcm, B[i]), -sign, out);
}

}  // namespace

IndicatorCombination IndicatorCombination::collect(std::span<const IndicatorTerm> terms) {
  std::map<BigInt, std::int64_t> acc;
  for (const auto& t : terms) {
    if (t.c < 1) throw InvalidInput("indicator subscripts must be positive");
    acc[t.c] += t.lambda;
  }
  IndicatorCombination out;
  for (auto& [c, lambda] : acc) {
    if (lambda != 0) out.terms_.push_back({c, lambda});
  }
  return out;
}

IndicatorCombination& IndicatorCombination::operator+=(const IndicatorCombination& other) {
  std::vector<IndicatorTerm> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  *this = collect(all);
  return *this;
}

std::string IndicatorCombination::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t j = 0; j < terms_.size(); ++j) {
    const auto& [c, lambda] = terms_[j];
    const std::int64_t magnitude = lambda < 0 ? -lambda : lambda;
    if (j == 0) {
      if (lambda < 0) out += "-";
    } else {
      out += lambda < 0 ? " - " : " + ";
    }
    if (magnitude != 1) out += std::to_string(magnitude);
    out += "I_" + to_decimal(c);
  }
  return out;
}

std::string to_string(const Order& order) {
  if (std::holds_alternative<Infinite>(order)) return "infinity";
  return to_decimal(std::get<BigInt>(order));
}

IndicatorCombination expand_solution(const SolutionConstraints& constraints) {
  if (constraints.degenerate) throw InvalidInput("cannot expand a degenerate solution");
  std::vector<IndicatorTerm> terms;
  expand_subsets(constraints.B, 0, lcm_of(constraints.A), 1, terms);
  return IndicatorCombination::collect(terms);
}

BigInt evaluate(const IndicatorCombination& comb, const BigInt& x) {
  BigInt total = 0;
  for (const auto& [c, lambda] : comb.terms()) {
    if (divides(c, x)) total += BigInt(static_cast<long>(lambda));
  }
  return total;
}

BigInt fundamental_period(const IndicatorCombination& comb) {
  BigInt acc = 1;
  for (const auto& t : comb.terms()) acc = lcm(acc, t.c);
  return acc;
}

Order order(const IndicatorCombination& comb) {
  if (comb.empty()) return Infinite{};
  return comb.terms().front().c;
}

std::vector<std::size_t> AnalysisReport::nondegenerate() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    if (!solutions[i].degenerate) out.push_back(i);
  }
  return out;
}

BigInt omega_f(std::span<const std::optional<HPair>> h) {
  BigInt acc = 1;
  for (const auto& pair : h) {
    if (pair) acc = lcm(acc, pair->h2);
  }
  return acc;
}

BigInt omega_b(std::span<const SolutionConstraints> solutions) {
  BigInt acc = 1;
  for (const auto& s : solutions) {
    if (s.degenerate) continue;
    acc = lcm(acc, lcm(lcm_of(s.A), lcm_of(s.B)));
  }
  return acc;
}

AnalysisReport analyze(const BigInt& n, const FactorBudget& budget) {
  require_eligible(n);
  AnalysisReport report;
  report.n = n;
  report.reverse = reverse_digits(n);
  report.digits = digit_count(n);

  // Step 1-2: factor both sides, keep the primes whose exponents differ.
  report.n_factors = factorize(n, budget);
  report.reverse_factors = factorize(report.reverse, budget);
  report.crucial = crucial_primes(report.n_factors, report.reverse_factors);
  report.h = h_pairs(report.crucial, report.digits, budget);

  // Step 3-4: characteristic solutions and their constraint sets.
  for (const auto& u : solve_characteristic(report.crucial)) {
    report.solutions.push_back(assemble_constraints(u, report.crucial, report.h));
  }

  // Step 5: expand the nondegenerate ones and collect like terms.
  for (const auto& s : report.solutions) {
    if (!s.degenerate) report.indicator += expand_solution(s);
  }
  report.order_value = order(report.indicator);
  report.omega0 = fundamental_period(report.indicator);
  report.omega_f = omega_f(report.h);
  report.omega_b = omega_b(report.solutions);
  return report;
}

IndicatorCombination indicator_for(const BigInt& n, const FactorBudget& budget) {
  return analyze(n, budget).indicator;
}

BigInt omega_f(const BigInt& n, const FactorBudget& budget) {
  const auto records = crucial_primes(n, budget);
  return omega_f(h_pairs(records, digit_count(n), budget));
}

BigInt omega_b(const BigInt& n, const FactorBudget& budget) {
  return analyze(n, budget).omega_b;
}

std::optional<CharSolution> type_of(const AnalysisReport& report, const BigInt& k) {
  if (k < 1) throw InvalidInput("type_of requires k >= 1");
  std::optional<CharSolution> found;
  for (const auto& s : report.solutions) {
    if (s.degenerate || !in_S(s.A, s.B, k)) continue;
    if (found) throw Error("solution sets overlap at k = " + to_decimal(k));
    found = s.solution;
  }
  return found;
}

std::optional<CharSolution> type_of(const BigInt& n, const BigInt& k, const FactorBudget& budget) {
  return type_of(analyze(n, budget), k);
}

}  // namespace vpal
