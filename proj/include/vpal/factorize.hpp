#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vpal/bigint.hpp"

namespace vpal {

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization: primes strictly increasing, exponents >= 1.
/// The empty factorization represents 1.
class Factorization {
 public:
  Factorization() = default;

  /// Sorts, merges repeated primes and drops zero exponents. Does not test
  /// primality of the inputs; callers pass primes.
  static Factorization from_factors(std::vector<PrimePower> factors);

  std::span<const PrimePower> factors() const { return factors_; }
  auto begin() const { return factors_.begin(); }
  auto end() const { return factors_.end(); }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }

  unsigned exponent_of(const BigInt& p) const;
  BigInt value() const;

  /// Multiplies the represented integers (exponents add).
  Factorization& merge(const Factorization& other);

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> factors_;
};

/// Work limit for the Pollard-rho stage, counted in polynomial iterations
/// across all cofactors of one factorize() call.
struct FactorBudget {
  std::uint64_t max_rho_iterations = 4'000'000;
};

/// Trial division stops at this bound.
inline constexpr std::uint32_t kTrialDivisionBound = 1'000'000;

/// Deterministic Miller-Rabin below 3.3e24, Baillie-PSW (GMP) above.
bool is_prime(const BigInt& n);

/// Complete factorization of n >= 1. Throws BudgetExceeded when a composite
/// cofactor survives the rho budget; never reports an unsplit composite.
Factorization factorize(const BigInt& n, const FactorBudget& budget = {});

/// Primes up to kTrialDivisionBound, ascending.
std::span<const std::uint32_t> small_primes();

}  // namespace vpal
