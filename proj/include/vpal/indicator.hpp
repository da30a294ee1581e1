#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "vpal/bigint.hpp"
#include "vpal/characteristic.hpp"
#include "vpal/factorize.hpp"

namespace vpal {

struct IndicatorTerm {
  BigInt c;
  std::int64_t lambda = 0;

  friend bool operator==(const IndicatorTerm&, const IndicatorTerm&) = default;
};

/// Canonical sum of lambda_j * I_{c_j}: c strictly increasing, lambda nonzero.
/// I_c(x) is 1 when c divides x and 0 otherwise.
class IndicatorCombination {
 public:
  IndicatorCombination() = default;

  /// Collects like terms from an arbitrary list; zero totals are dropped.
  static IndicatorCombination collect(std::span<const IndicatorTerm> terms);

  std::span<const IndicatorTerm> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  IndicatorCombination& operator+=(const IndicatorCombination& other);

  /// "I_154 - I_3542"; "0" for the empty combination.
  std::string to_string() const;

  friend bool operator==(const IndicatorCombination&, const IndicatorCombination&) = default;

 private:
  std::vector<IndicatorTerm> terms_;
};

struct Infinite {
  friend bool operator==(Infinite, Infinite) { return true; }
};

/// c(n): the least k with n(k) a v-palindrome, or Infinite.
using Order = std::variant<BigInt, Infinite>;

std::string to_string(const Order& order);

/// Inclusion-exclusion over subsets of B with I_a I_b = I_lcm(a,b).
IndicatorCombination expand_solution(const SolutionConstraints& constraints);

BigInt evaluate(const IndicatorCombination& comb, const BigInt& x);

/// lcm of the c_j; 1 for the empty combination.
BigInt fundamental_period(const IndicatorCombination& comb);

Order order(const IndicatorCombination& comb);

/// Everything the five-step procedure produces for one n.
struct AnalysisReport {
  BigInt n;
  BigInt reverse;
  unsigned long digits = 0;
  Factorization n_factors;
  Factorization reverse_factors;
  std::vector<CrucialPrimeRecord> crucial;
  std::vector<std::optional<HPair>> h;  // parallel to crucial
  std::vector<SolutionConstraints> solutions;
  IndicatorCombination indicator;
  Order order_value = Infinite{};
  BigInt omega0 = 1;
  BigInt omega_f = 1;
  BigInt omega_b = 1;

  /// Indices into `solutions` of the nondegenerate ones.
  std::vector<std::size_t> nondegenerate() const;
};

AnalysisReport analyze(const BigInt& n, const FactorBudget& budget = {});

IndicatorCombination indicator_for(const BigInt& n, const FactorBudget& budget = {});

/// lcm of h_{p^2,d} over crucial primes other than 2 and 5.
BigInt omega_f(const BigInt& n, const FactorBudget& budget = {});
BigInt omega_f(std::span<const std::optional<HPair>> h);

/// lcm of A_u and B_u over the nondegenerate solutions.
BigInt omega_b(const BigInt& n, const FactorBudget& budget = {});
BigInt omega_b(std::span<const SolutionConstraints> solutions);

/// The unique nondegenerate solution u with k in S_u, if any.
std::optional<CharSolution> type_of(const AnalysisReport& report, const BigInt& k);
std::optional<CharSolution> type_of(const BigInt& n, const BigInt& k,
                                    const FactorBudget& budget = {});

}  // namespace vpal
