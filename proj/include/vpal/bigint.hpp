#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vpal {

/// Arbitrary-precision signed integer used throughout the library.
using BigInt = mpz_class;

/// Base exception for every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition (multiple of 10, palindrome, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Factorization gave up on a cofactor within the configured work limit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotCoprime : public Error {
 public:
  using Error::Error;
};

/// h constants are undefined for p in {2, 5}.
class InvalidPrime : public Error {
 public:
  using Error::Error;
};

class PeriodMismatch : public Error {
 public:
  using Error::Error;
};

/// Parses a nonnegative decimal integer; throws InvalidInput on anything else.
BigInt parse_decimal(std::string_view text);

std::string to_decimal(const BigInt& value);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

/// lcm of a sequence; 1 for the empty sequence.
BigInt lcm_of(std::span<const BigInt> values);

BigInt pow(const BigInt& base, unsigned long exponent);
BigInt pow_mod(const BigInt& base, const BigInt& exponent, const BigInt& modulus);

bool divides(const BigInt& d, const BigInt& x);

/// Converts to uint64; throws std::overflow_error when out of range.
std::uint64_t to_u64(const BigInt& value);
bool fits_u64(const BigInt& value);

}  // namespace vpal
