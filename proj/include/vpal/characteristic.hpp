#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vpal/bigint.hpp"
#include "vpal/factorize.hpp"

namespace vpal {

/// Bookkeeping for a prime whose exponent differs between n and r(n).
struct CrucialPrimeRecord {
  BigInt p;
  unsigned a = 0;  // exponent in n
  unsigned b = 0;  // exponent in r(n)
  int delta = 0;   // a - b, never zero
  unsigned mu = 0; // min(a, b)

  int sign() const { return delta > 0 ? 1 : -1; }
  unsigned abs_delta() const { return static_cast<unsigned>(delta > 0 ? delta : -delta); }

  static CrucialPrimeRecord make(BigInt p, unsigned a, unsigned b);
  friend bool operator==(const CrucialPrimeRecord&, const CrucialPrimeRecord&) = default;
};

enum class CaseLabel { kI, kII, kIII, kIV, kV, kVI, kVII };

/// "[i]" ... "[vii]".
std::string to_string(CaseLabel label);

/// Preimage of a value under phi_{p,delta}, as a subset of {0, 1, 2, ...}.
enum class Preimage { kZero, kOne, kZeroOne, kAtLeastTwo };

/// One entry per crucial prime, ordered like the records.
using CharSolution = std::vector<BigInt>;

/// T_{p,u} = (A_{p,u}, B_{p,u}); each side holds at most one integer.
struct ConstraintPair {
  std::optional<BigInt> a;
  std::optional<BigInt> b;

  friend bool operator==(const ConstraintPair&, const ConstraintPair&) = default;
};

/// h_{p,d} and h_{p^2,d}, precomputed for primes other than 2 and 5.
struct HPair {
  BigInt h1;
  BigInt h2;
};

struct SolutionConstraints {
  CharSolution solution;
  std::vector<CaseLabel> labels;      // per crucial prime
  std::vector<ConstraintPair> pairs;  // per crucial prime
  std::vector<BigInt> A;              // sorted, distinct
  std::vector<BigInt> B;              // sorted, distinct
  bool degenerate = false;
};

/// Crucial primes of n sorted by p, from the factorizations of n and r(n).
std::vector<CrucialPrimeRecord> crucial_primes(const Factorization& n_factors,
                                               const Factorization& r_factors);

/// Requires 10 does not divide n and n != r(n); throws InvalidInput otherwise.
std::vector<CrucialPrimeRecord> crucial_primes(const BigInt& n, const FactorBudget& budget = {});

/// Throws InvalidInput unless n >= 1, 10 does not divide n and n is not a palindrome.
void require_eligible(const BigInt& n);

BigInt phi(const BigInt& p, unsigned delta, unsigned long alpha);

/// R_{p,delta}, ascending.
std::vector<BigInt> phi_range(const BigInt& p, unsigned delta);

/// Throws InvalidInput when u is outside the range.
Preimage phi_preimage(const BigInt& p, unsigned delta, const BigInt& u);

CaseLabel classify(const BigInt& p, unsigned delta, const BigInt& u, unsigned mu);

/// All characteristic solutions, lexicographic in the tuple.
std::vector<CharSolution> solve_characteristic(std::span<const CrucialPrimeRecord> records);

/// Cartesian-product filter; used to cross-check the pruned search.
std::vector<CharSolution> solve_characteristic_naive(std::span<const CrucialPrimeRecord> records);

ConstraintPair constraint_pair(const CrucialPrimeRecord& record, const BigInt& u, unsigned long d,
                               const FactorBudget& budget = {});
/// As above with h values supplied; `h` is ignored for p in {2, 5}.
ConstraintPair constraint_pair(const CrucialPrimeRecord& record, const BigInt& u,
                               const std::optional<HPair>& h);

/// h pairs for every record (nullopt for p in {2, 5}).
std::vector<std::optional<HPair>> h_pairs(std::span<const CrucialPrimeRecord> records,
                                          unsigned long d, const FactorBudget& budget = {});

SolutionConstraints assemble_constraints(const CharSolution& solution,
                                         std::span<const CrucialPrimeRecord> records,
                                         std::span<const std::optional<HPair>> h);
SolutionConstraints assemble_constraints(const CharSolution& solution,
                                         std::span<const CrucialPrimeRecord> records,
                                         unsigned long d, const FactorBudget& budget = {});

/// x in S(A, B): divisible by every element of A, by no element of B.
bool in_S(std::span<const BigInt> A, std::span<const BigInt> B, const BigInt& x);

/// S(A, B) is empty iff some b in B divides lcm(A).
bool is_degenerate(std::span<const BigInt> A, std::span<const BigInt> B);

}  // namespace vpal
