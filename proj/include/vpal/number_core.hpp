#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vpal/bigint.hpp"
#include "vpal/factorize.hpp"

namespace vpal {

/// A nonnegative integer together with its base-10 digit string.
class DigitNumber {
 public:
  explicit DigitNumber(BigInt value);
  /// Accepts digits only, no leading zero unless the string is "0".
  static DigitNumber parse(std::string_view digits);

  const BigInt& value() const { return value_; }
  const std::string& digits() const { return digits_; }
  std::size_t digit_count() const { return digits_.size(); }

 private:
  BigInt value_;
  std::string digits_;
};

std::size_t digit_count(const BigInt& n);

/// r(n): the integer whose decimal digits are those of n reversed. Trailing
/// zeros of n become leading zeros and vanish.
BigInt reverse_digits(const BigInt& n);

/// Factorization sum: sum of p, plus e when e >= 2, over the factorization.
/// v(1) = 1 by convention.
BigInt v(const BigInt& n, const FactorBudget& budget = {});
BigInt v(const Factorization& f);

bool is_palindrome(const BigInt& n);

/// 10 does not divide n, n != r(n), and v(n) == v(r(n)).
bool is_v_palindrome(const BigInt& n, const FactorBudget& budget = {});

/// Repetition number: k ones separated by d-1 zeros, i.e. sum of 10^(d*i), i < k.
BigInt rho(unsigned long k, unsigned long d);

/// n(k): the digit string of n written k times. Built from the digit string
/// and checked against n * rho(k, d).
BigInt concat(const BigInt& n, unsigned long k);
/// Same value via n * rho(k, digit_count(n)).
BigInt concat_by_rho(const BigInt& n, unsigned long k);

/// All positive divisors of n >= 1, ascending.
std::vector<BigInt> divisors(const BigInt& n, const FactorBudget& budget = {});
std::vector<BigInt> divisors(const Factorization& f);

/// Largest e with p^e | a, for a >= 1.
unsigned ord_p(const BigInt& a, const BigInt& p);

/// Least t >= 1 with a^t = 1 (mod m). Throws NotCoprime when gcd(a, m) != 1.
BigInt mult_order(const BigInt& a, const BigInt& m, const FactorBudget& budget = {});

/// Multiplicative order of a modulo p^e with p prime; the group order
/// p^(e-1) (p-1) is factored through p-1 only.
BigInt mult_order_prime_power(const BigInt& a, const BigInt& p, unsigned e,
                              const FactorBudget& budget = {});

/// h_{p^alpha, d}: order of 10^d modulo p^(alpha + ord_p(10^d - 1)).
/// Throws InvalidPrime for p in {2, 5}.
BigInt h_constant(const BigInt& p, unsigned alpha, unsigned long d,
                  const FactorBudget& budget = {});

}  // namespace vpal
