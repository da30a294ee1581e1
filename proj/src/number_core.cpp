#include "vpal/number_core.hpp"

#include <algorithm>
#include <cassert>

namespace vpal {
namespace {

void require_positive(const BigInt& n, const char* what) {
  if (n < 1) throw InvalidInput(std::string(what) + " requires a positive integer, got " + to_decimal(n));
}

// Order of a in a group whose exponent divides `exponent`, given the
// factorization of `exponent`.
BigInt order_dividing(const BigInt& a, const BigInt& m, BigInt exponent,
                      const Factorization& exponent_factors) {
  for (const auto& [q, e] : exponent_factors) {
    for (unsigned i = 0; i < e; ++i) {
      BigInt candidate = exponent / q;
      if (pow_mod(a, candidate, m) != 1) break;
      exponent = std::move(candidate);
    }
  }
  if (pow_mod(a, exponent, m) != 1) throw Error("multiplicative order self-check failed");
  return exponent;
}

}  // namespace

DigitNumber::DigitNumber(BigInt value) : value_(std::move(value)) {
  if (value_ < 0) throw InvalidInput("DigitNumber must be nonnegative");
  digits_ = to_decimal(value_);
}

DigitNumber DigitNumber::parse(std::string_view digits) {
  if (digits.size() > 1 && digits.front() == '0') {
    throw InvalidInput("leading zero in '" + std::string(digits) + "'");
  }
  return DigitNumber(parse_decimal(digits));
}

std::size_t digit_count(const BigInt& n) { return to_decimal(abs(n)).size(); }

BigInt reverse_digits(const BigInt& n) {
  require_positive(n, "reverse_digits");
  std::string s = to_decimal(n);
  std::reverse(s.begin(), s.end());
  return BigInt(s, 10);
}

BigInt v(const Factorization& f) {
  if (f.empty()) return 1;
  BigInt sum = 0;
  for (const auto& [p, e] : f) {
    sum += p;
    if (e >= 2) sum += e;
  }
  return sum;
}

BigInt v(const BigInt& n, const FactorBudget& budget) {
  require_positive(n, "v");
  return v(factorize(n, budget));
}

bool is_palindrome(const BigInt& n) { return reverse_digits(n) == n; }

bool is_v_palindrome(const BigInt& n, const FactorBudget& budget) {
  require_positive(n, "is_v_palindrome");
  if (divides(10, n)) return false;
  const BigInt r = reverse_digits(n);
  if (r == n) return false;
  return v(n, budget) == v(r, budget);
}

BigInt rho(unsigned long k, unsigned long d) {
  if (k < 1 || d < 1) throw InvalidInput("rho requires k >= 1 and d >= 1");
  std::string s(d * (k - 1) + 1, '0');
  for (unsigned long i = 0; i < k; ++i) s[i * d] = '1';
  return BigInt(s, 10);
}

BigInt concat(const BigInt& n, unsigned long k) {
  require_positive(n, "concat");
  if (k < 1) throw InvalidInput("concat requires k >= 1");
  const std::string block = to_decimal(n);
  std::string s;
  s.reserve(block.size() * k);
  for (unsigned long i = 0; i < k; ++i) s += block;
  BigInt out(s, 10);
  assert(out == concat_by_rho(n, k));
  return out;
}

BigInt concat_by_rho(const BigInt& n, unsigned long k) {
  require_positive(n, "concat");
  return n * rho(k, digit_count(n));
}

std::vector<BigInt> divisors(const Factorization& f) {
  std::vector<BigInt> out = {BigInt(1)};
  for (const auto& [p, e] : f) {
    const std::size_t base = out.size();
    BigInt power = 1;
    for (unsigned i = 1; i <= e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BigInt> divisors(const BigInt& n, const FactorBudget& budget) {
  require_positive(n, "divisors");
  return divisors(factorize(n, budget));
}

unsigned ord_p(const BigInt& a, const BigInt& p) {
  require_positive(a, "ord_p");
  if (p < 2) throw InvalidInput("ord_p requires a prime p");
  BigInt rest = a;
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()));
}

BigInt mult_order_prime_power(const BigInt& a, const BigInt& p, unsigned e,
                              const FactorBudget& budget) {
  if (e < 1) throw InvalidInput("mult_order_prime_power requires e >= 1");
  const BigInt modulus = pow(p, e);
  if (gcd(a, modulus) != 1) throw NotCoprime("a is not coprime to " + to_decimal(modulus));
  if (modulus == 1) return 1;
  Factorization group = factorize(p - 1, budget);
  if (e > 1) group.merge(Factorization::from_factors({{p, e - 1}}));
  BigInt a_mod = a % modulus;
  if (a_mod < 0) a_mod += modulus;
  return order_dividing(a_mod, modulus, group.value(), group);
}

BigInt mult_order(const BigInt& a, const BigInt& m, const FactorBudget& budget) {
  require_positive(m, "mult_order");
  if (gcd(a, m) != 1) throw NotCoprime("gcd(" + to_decimal(a) + ", " + to_decimal(m) + ") != 1");
  if (m == 1) return 1;
  // Exponent of (Z/m)^x: lcm over prime powers of p^(e-1)(p-1), which
  // suffices for the descent even for p = 2.
  const Factorization mf = factorize(m, budget);
  BigInt exponent = 1;
  Factorization exponent_factors;
  for (const auto& [p, e] : mf) {
    Factorization part = factorize(p - 1, budget);
    if (e > 1) part.merge(Factorization::from_factors({{p, e - 1}}));
    exponent = lcm(exponent, part.value());
  }
  exponent_factors = factorize(exponent, budget);
  BigInt a_mod = a % m;
  if (a_mod < 0) a_mod += m;
  return order_dividing(a_mod, m, exponent, exponent_factors);
}

BigInt h_constant(const BigInt& p, unsigned alpha, unsigned long d, const FactorBudget& budget) {
  if (p == 2 || p == 5) throw InvalidPrime("h is undefined for p = " + to_decimal(p));
  if (alpha < 1 || d < 1) throw InvalidInput("h requires alpha >= 1 and d >= 1");
  const BigInt base = pow(BigInt(10), d);
  const unsigned shift = ord_p(base - 1, p);
  return mult_order_prime_power(base, p, alpha + shift, budget);
}

}  // namespace vpal
