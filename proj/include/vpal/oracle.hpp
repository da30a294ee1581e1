#pragma once

// Ground truth by direct construction and factorization, independent of the
// characteristic-solution pipeline, plus counterexample searches.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vpal/bigint.hpp"
#include "vpal/factorize.hpp"
#include "vpal/indicator.hpp"

namespace vpal::oracle {

enum class BruteForceMode {
  kDirect,       // build n(k) and its reverse as digit strings, factor both
  kAccelerated,  // factor n, r(n) and rho_k separately and add exponents
  kAuto,         // direct, falling back to accelerated on budget exhaustion
};

std::string to_string(BruteForceMode mode);

struct BruteForceResult {
  std::optional<bool> flag;  // nullopt: UNVERIFIED
  BruteForceMode used = BruteForceMode::kDirect;
};

/// Is n(k) a v-palindrome? nullopt (UNVERIFIED) when factoring runs out of budget.
std::optional<bool> brute_force_flag(const BigInt& n, unsigned long k,
                                     const FactorBudget& budget = {},
                                     BruteForceMode mode = BruteForceMode::kDirect);
BruteForceResult brute_force(const BigInt& n, unsigned long k, const FactorBudget& budget,
                             BruteForceMode mode);

/// Factorization of rho_k = (10^(dk) - 1)/(10^d - 1) through its cyclotomic
/// pieces Phi_m(10), m | dk, m not dividing d.
Factorization factorize_rho(unsigned long k, unsigned long d, const FactorBudget& budget = {});

/// Phi_m(10).
BigInt cyclotomic_at_ten(unsigned long m);

struct VerificationRow {
  unsigned long k = 0;
  bool predicted = false;
  std::optional<bool> observed;  // nullopt: UNVERIFIED
  BruteForceMode mode = BruteForceMode::kDirect;
  std::size_t digits = 0;        // digit count of n(k)

  /// nullopt (SKIPPED) when the observation is missing.
  std::optional<bool> agrees() const;
};

struct VerificationReport {
  BigInt n;
  IndicatorCombination indicator;
  std::vector<VerificationRow> rows;
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  std::size_t unverified = 0;
};

/// Compares the indicator prediction with brute force for k = 1..k_max.
VerificationReport verify(const BigInt& n, unsigned long k_max, const FactorBudget& budget = {},
                          BruteForceMode mode = BruteForceMode::kAuto);

/// Recomputes g_p = ord_p(rho_k) on the explicit integer rho_k and checks that
/// phi(mu_p + g_p) = u_p for all p holds exactly for the solutions whose S_u
/// contains k.
bool thm5_cross_check(const AnalysisReport& report, unsigned long k);
bool thm5_cross_check(const BigInt& n, unsigned long k, const FactorBudget& budget = {});

enum class SearchProperty {
  kConj1Counterexample,   // omega0 not in {1, omega_f}
  kOmegaBCounterexample,  // omega0 not in {1, omega_b}
  kDivisibilityAnomaly,   // some c_j does not divide c_q
};

std::string to_string(SearchProperty property);
/// "conj1", "omegab", "anomaly"; throws InvalidInput otherwise.
SearchProperty parse_search_property(const std::string& name);

struct SearchHit {
  BigInt n;
  SearchProperty property = SearchProperty::kConj1Counterexample;
  AnalysisReport evidence;
  /// For anomalies, the first (c_j, c_q) with c_j not dividing c_q.
  std::optional<std::pair<BigInt, BigInt>> witness;
};

/// Checks the property on an analysis; fills the witness for anomalies.
bool has_property(const AnalysisReport& report, SearchProperty property,
                  std::optional<std::pair<BigInt, BigInt>>* witness = nullptr);

struct SearchOptions {
  unsigned workers = 1;
  FactorBudget budget{};
  bool stop_at_first = false;
  /// Called in increasing n order as hits become final.
  std::function<void(const SearchHit&)> on_hit;
};

/// Scans eligible n in [2, range_end]; hits sorted by n regardless of workers.
std::vector<SearchHit> search(const BigInt& range_end, SearchProperty property,
                              const SearchOptions& options = {});

using TypeTuple = std::vector<std::pair<BigInt, BigInt>>;  // (p, u_p)

struct Representation {
  BigInt base;
  unsigned long k = 0;
  bool eligible = false;
  std::optional<TypeTuple> type;
};

struct TypeInvarianceEntry {
  BigInt m;
  std::vector<Representation> representations;
  bool consistent = false;
};

/// Every way of writing m's digit string as a block repeated k times, with
/// the type of m with respect to each eligible block.
TypeInvarianceEntry type_representations(const BigInt& m, const FactorBudget& budget = {});

/// v-palindromes m <= limit of the form n(k), k >= 2, with their representations.
std::vector<TypeInvarianceEntry> type_invariance_scan(const BigInt& limit,
                                                      const FactorBudget& budget = {});

}  // namespace vpal::oracle
