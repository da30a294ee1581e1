#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vpal/number_core.hpp"

using namespace vpal;

namespace {

Factorization fac(std::vector<std::pair<long, unsigned>> pe) {
  std::vector<PrimePower> out;
  for (auto [p, e] : pe) out.push_back({BigInt(p), e});
  return Factorization::from_factors(out);
}

BigInt big(const char* s) { return BigInt(s, 10); }

}  // namespace

TEST_CASE("reverse_digits") {
  CHECK(reverse_digits(56056) == 65065);
  CHECK(reverse_digits(7) == 7);
  CHECK(reverse_digits(560) == 65);
  CHECK(digit_count(reverse_digits(560)) == 2);
  CHECK_THROWS_AS(reverse_digits(0), InvalidInput);
}

TEST_CASE("reverse_digits agrees with arithmetic reversal") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const ref::u64 n = rng() % 1'000'000'000'000ULL + 1;
    CHECK(reverse_digits(BigInt(std::to_string(n))) == BigInt(std::to_string(ref::reverse(n))));
  }
}

TEST_CASE("reverse is an involution off multiples of 10") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 2000; ++i) {
    BigInt n(std::to_string(rng()) + std::to_string(rng()));
    if (divides(10, n)) n += 1;
    CHECK(reverse_digits(reverse_digits(n)) == n);
  }
}

TEST_CASE("factorize small values") {
  CHECK(factorize(56056) == fac({{2, 3}, {7, 2}, {11, 1}, {13, 1}}));
  CHECK(factorize(65065) == fac({{5, 1}, {7, 1}, {11, 1}, {13, 2}}));
  CHECK(factorize(1).empty());
  CHECK(factorize(2) == fac({{2, 1}}));
  CHECK_THROWS_AS(factorize(0), InvalidInput);
}

TEST_CASE("factorize matches trial division") {
  for (ref::u64 n = 1; n <= 20000; ++n) {
    const auto expected = ref::factor(n);
    const auto got = factorize(BigInt(std::to_string(n)));
    REQUIRE(got.size() == expected.size());
    auto it = expected.begin();
    for (const auto& [p, e] : got) {
      CHECK(p == BigInt(std::to_string(it->first)));
      CHECK(e == it->second);
      ++it;
    }
  }
}

TEST_CASE("factorize splits products of large primes") {
  // 1000000007 and 998244353 are prime; so are the two 19-digit factors below.
  const BigInt p1 = big("1000000007"), p2 = big("998244353");
  CHECK(factorize(p1 * p2) == Factorization::from_factors({{p2, 1}, {p1, 1}}));
  CHECK(factorize(p1 * p1 * p2) == Factorization::from_factors({{p2, 1}, {p1, 2}}));

  // Splitting two 19-digit primes needs far more rho steps than the default budget.
  const BigInt q1 = big("1000000000000000003"), q2 = big("1000000000000000009");
  CHECK(factorize(q1 * p1) == Factorization::from_factors({{p1, 1}, {q1, 1}}));
  CHECK(factorize(pow(q1, 3)) == Factorization::from_factors({{q1, 3}}));
  CHECK_THROWS_AS(factorize(q1 * q2), BudgetExceeded);
}

TEST_CASE("factorization soundness on random inputs") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    BigInt n(std::to_string(rng() % 1'000'000'000'000ULL + 1) + std::to_string(rng() % 100000));
    const auto f = factorize(n);
    CHECK(f.value() == n);
    BigInt last = 1;
    for (const auto& [p, e] : f) {
      CHECK(p > last);
      CHECK(e >= 1);
      CHECK(mpz_probab_prime_p(p.get_mpz_t(), 40) > 0);
      last = p;
    }
  }
}

TEST_CASE("factorize reports budget exhaustion instead of guessing") {
  const BigInt q1 = big("1000000000000000003"), q2 = big("1000000000000000009");
  CHECK_THROWS_AS(factorize(q1 * q2, FactorBudget{10}), BudgetExceeded);
}

TEST_CASE("is_prime") {
  for (ref::u64 n = 0; n < 5000; ++n) CHECK(is_prime(BigInt(std::to_string(n))) == ref::is_prime(n));
  CHECK(is_prime(big("3317044064679887385961981")) == false);  // strong pseudoprime to 12 bases
  CHECK(is_prime(big("170141183460469231731687303715884105727")));
  CHECK_FALSE(is_prime(big("170141183460469231731687303715884105727") * 3));
}

TEST_CASE("v") {
  CHECK(v(18) == 7);
  CHECK(v(81) == 7);
  CHECK(v(1) == 1);
  CHECK(v(56056) == 38);
  CHECK(v(65065) == 38);
  for (ref::u64 n = 1; n <= 5000; ++n) CHECK(v(BigInt(std::to_string(n))) == BigInt(std::to_string(ref::v(n))));
}

TEST_CASE("v is additive over coprime arguments greater than 1") {
  std::mt19937_64 rng(14);
  int checked = 0;
  while (checked < 500) {
    const BigInt m(std::to_string(rng() % 1'000'000 + 2));
    const BigInt n(std::to_string(rng() % 1'000'000 + 2));
    if (gcd(m, n) != 1) continue;
    CHECK(v(m * n) == v(m) + v(n));
    ++checked;
  }
}

TEST_CASE("is_v_palindrome") {
  CHECK(is_v_palindrome(18));
  CHECK_FALSE(is_v_palindrome(560));
  CHECK_FALSE(is_v_palindrome(121));
  CHECK(is_v_palindrome(56056));
  for (ref::u64 n = 1; n <= 20000; ++n) {
    CHECK(is_v_palindrome(BigInt(std::to_string(n))) == ref::is_v_palindrome(n));
  }
}

TEST_CASE("rho") {
  CHECK(rho(1, 3) == 1);
  CHECK(rho(3, 2) == 10101);
  CHECK(rho(2, 1) == 11);
  CHECK(digit_count(rho(7, 4)) == 4 * 6 + 1);
  CHECK_THROWS_AS(rho(0, 1), InvalidInput);
}

TEST_CASE("concat") {
  CHECK(concat(18, 3) == 181818);
  CHECK(concat(56056, 4) == big("56056560565605656056"));
  CHECK(concat(123, 1) == 123);
  for (unsigned k = 1; k <= 5; ++k) {
    CHECK(concat(13, k) == BigInt(std::to_string(ref::concat(13, k))));
  }
}

TEST_CASE("concatenation equals n * rho_k") {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 500; ++i) {
    const BigInt n(std::to_string(rng() % 1'000'000 + 1));
    const unsigned long k = rng() % 20 + 1;
    const unsigned long d = digit_count(n);
    BigInt expected = 0;
    for (unsigned long j = 0; j < k; ++j) expected = expected * pow(BigInt(10), d) + n;
    CHECK(concat(n, k) == expected);
    CHECK(concat_by_rho(n, k) == expected);
  }
}

TEST_CASE("ord_p") {
  CHECK(ord_p(999, 3) == 3);
  CHECK(ord_p(7, 5) == 0);
  CHECK(ord_p(56056, 2) == 3);
  CHECK(ord_p(pow(BigInt(7), 40) * 3, 7) == 40);
}

TEST_CASE("divisors") {
  CHECK(divisors(12) == std::vector<BigInt>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1) == std::vector<BigInt>{1});
  CHECK(divisors(3542).size() == 16);
}

TEST_CASE("mult_order") {
  CHECK(mult_order(6, 7) == 2);
  CHECK(mult_order(1, 1) == 1);
  CHECK(mult_order(1, 12345) == 1);
  CHECK(mult_order(10, 81) == 9);
  CHECK(mult_order(-1, 7) == 2);
  CHECK_THROWS_AS(mult_order(10, 12), NotCoprime);
}

TEST_CASE("mult_order agrees with stepping through powers") {
  std::mt19937_64 rng(16);
  int checked = 0;
  while (checked < 1000) {
    const ref::u64 m = rng() % 200000 + 1;
    const ref::u64 a = rng() % 1000000;
    if (std::gcd(a, m) != 1) continue;
    CHECK(mult_order(BigInt(std::to_string(a)), BigInt(std::to_string(m))) ==
          BigInt(std::to_string(ref::order(a, m))));
    ++checked;
  }
}

TEST_CASE("mult_order_prime_power") {
  CHECK(mult_order_prime_power(10, 3, 4) == 9);
  CHECK(mult_order_prime_power(10, 7, 2) == 42);
  CHECK(mult_order_prime_power(3, 2, 5) == 8);
}

TEST_CASE("h constants") {
  CHECK(h_constant(7, 2, 3) == 14);
  CHECK(h_constant(23, 2, 3) == 506);
  CHECK(h_constant(23, 1, 3) == 22);
  CHECK(h_constant(7, 1, 3) == 2);
  CHECK(h_constant(3, 2, 3) == 9);
  CHECK_THROWS_AS(h_constant(2, 1, 1), InvalidPrime);
  CHECK_THROWS_AS(h_constant(5, 1, 1), InvalidPrime);
}

TEST_CASE("h constants match the definition and h_p divides h_p^2") {
  for (ref::u64 p = 3; p <= 100; ++p) {
    if (!ref::is_prime(p) || p == 5) continue;
    for (unsigned d = 1; d <= 4; ++d) {
      const BigInt P(std::to_string(p));
      const BigInt h1 = h_constant(P, 1, d), h2 = h_constant(P, 2, d);
      CHECK(h1 == BigInt(std::to_string(ref::h(p, 1, d))));
      CHECK(h2 == BigInt(std::to_string(ref::h(p, 2, d))));
      CHECK(h1 > 1);
      CHECK(divides(h1, h2));

      // Order check: 10^(dh) = 1, and no h/q works.
      const BigInt base = pow(BigInt(10), d);
      const BigInt modulus = pow(P, 2 + ord_p(base - 1, P));
      CHECK(pow_mod(base, h2, modulus) == 1);
      for (const auto& [q, e] : factorize(h2)) CHECK(pow_mod(base, h2 / q, modulus) != 1);
    }
  }
}

TEST_CASE("DigitNumber") {
  const auto n = DigitNumber::parse("126");
  CHECK(n.value() == 126);
  CHECK(n.digit_count() == 3);
  CHECK(DigitNumber::parse("0").digits() == "0");
  CHECK_THROWS_AS(DigitNumber::parse("0126"), InvalidInput);
  CHECK_THROWS_AS(DigitNumber::parse("12a"), InvalidInput);
  CHECK_THROWS_AS(DigitNumber::parse(""), InvalidInput);
}
