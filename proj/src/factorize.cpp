#include "vpal/factorize.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <utility>

namespace vpal {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// 3317044064679887385961981: below this the first 13 prime bases are exact.
const BigInt& deterministic_mr_limit() {
  static const BigInt limit("3317044064679887385961981", 10);
  return limit;
}

constexpr std::array<unsigned, 13> kMillerRabinBases = {2,  3,  5,  7,  11, 13, 17,
                                                        19, 23, 29, 31, 37, 41};

bool miller_rabin(const BigInt& n) {
  const BigInt n_minus_1 = n - 1;
  BigInt d = n_minus_1;
  const auto s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  BigInt x;
  for (unsigned a : kMillerRabinBases) {
    if (n == a) return true;
    mpz_set_ui(x.get_mpz_t(), a);
    mpz_powm(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) continue;
    bool composite = true;
    for (mp_bitcnt_t r = 1; r < s; ++r) {
      mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

// Brent's cycle finding with batched gcds. Returns 0 when the budget runs out.
u64 brent_u64(u64 n, u64 c, u64& iterations_left) {
  constexpr u64 kBatch = 128;
  u64 y = 2, x = 2, ys = 2, q = 1, g = 1;
  auto f = [&](u64 v) { return static_cast<u64>((static_cast<u128>(v) * v + c) % n); };
  for (u64 r = 1; g == 1; r <<= 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    for (u64 k = 0; k < r && g == 1; k += kBatch) {
      ys = y;
      const u64 steps = std::min(kBatch, r - k);
      if (steps > iterations_left) return 0;
      iterations_left -= steps;
      for (u64 i = 0; i < steps; ++i) {
        y = f(y);
        q = mul_mod(q, x > y ? x - y : y - x, n);
      }
      g = gcd_u64(q, n);
    }
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd_u64(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

BigInt brent_big(const BigInt& n, unsigned long c, u64& iterations_left) {
  constexpr u64 kBatch = 128;
  BigInt y = 2, x = 2, ys = 2, q = 1, g = 1, diff;
  auto step = [&](BigInt& v) {
    v *= v;
    v += c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  for (u64 r = 1; g == 1; r <<= 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) step(y);
    for (u64 k = 0; k < r && g == 1; k += kBatch) {
      ys = y;
      const u64 steps = std::min(kBatch, r - k);
      if (steps > iterations_left) return 0;
      iterations_left -= steps;
      for (u64 i = 0; i < steps; ++i) {
        step(y);
        diff = x - y;
        q *= diff;
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      g = gcd(q, n);
    }
  }
  if (g == n) {
    do {
      step(ys);
      g = gcd(x - ys, n);
    } while (g == 1);
  }
  return g;
}

// Nontrivial factor of an odd composite n that is not a perfect power.
BigInt find_factor(const BigInt& n, u64& iterations_left) {
  for (unsigned long c = 1;; ++c) {
    if (fits_u64(n)) {
      const u64 g = brent_u64(to_u64(n), c, iterations_left);
      if (g == 0) break;
      if (g != to_u64(n)) return BigInt(static_cast<unsigned long>(g));
    } else {
      BigInt g = brent_big(n, c, iterations_left);
      if (g == 0) break;
      if (g != n) return g;
    }
  }
  throw BudgetExceeded("factorization budget exhausted on cofactor " + to_decimal(n));
}

// Returns (root, k) with root^k == n and k maximal among prime k tried, or (n, 1).
std::pair<BigInt, unsigned> perfect_power(const BigInt& n) {
  if (mpz_perfect_power_p(n.get_mpz_t()) == 0) return {n, 1};
  const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  BigInt root;
  for (unsigned k = 2; k <= bits; ++k) {
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) return {root, k};
  }
  return {n, 1};
}

}  // namespace

std::span<const std::uint32_t> small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialDivisionBound + 1, false);
    std::vector<std::uint32_t> out;
    out.reserve(80'000);
    for (std::uint32_t i = 2; i <= kTrialDivisionBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialDivisionBound; j += i) {
        composite[j] = true;
      }
    }
    return out;
  }();
  return primes;
}

Factorization Factorization::from_factors(std::vector<PrimePower> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  Factorization out;
  for (auto& f : factors) {
    if (f.exponent == 0) continue;
    if (!out.factors_.empty() && out.factors_.back().prime == f.prime) {
      out.factors_.back().exponent += f.exponent;
    } else {
      out.factors_.push_back(std::move(f));
    }
  }
  return out;
}

unsigned Factorization::exponent_of(const BigInt& p) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), p,
                             [](const PrimePower& f, const BigInt& q) { return f.prime < q; });
  return (it != factors_.end() && it->prime == p) ? it->exponent : 0;
}

BigInt Factorization::value() const {
  BigInt acc = 1;
  for (const auto& f : factors_) acc *= pow(f.prime, f.exponent);
  return acc;
}

Factorization& Factorization::merge(const Factorization& other) {
  std::vector<PrimePower> all = factors_;
  all.insert(all.end(), other.factors_.begin(), other.factors_.end());
  *this = from_factors(std::move(all));
  return *this;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (unsigned p : kMillerRabinBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) return false;
  }
  if (n < deterministic_mr_limit()) return miller_rabin(n);
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

Factorization factorize(const BigInt& n, const FactorBudget& budget) {
  if (n < 1) throw InvalidInput("factorize requires n >= 1, got " + to_decimal(n));
  std::vector<PrimePower> found;
  BigInt m = n;

  bool trial_complete = false;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
  for (std::uint32_t p : small_primes()) {
    if (mpz_cmp_ui(root.get_mpz_t(), p) < 0) {
      trial_complete = true;
      break;
    }
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    do {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    } while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0);
    found.push_back({BigInt(p), e});
    mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
  }
  if (m > 1 && trial_complete) {
    found.push_back({m, 1});
    m = 1;
  }

  u64 iterations_left = budget.max_rho_iterations;
  std::vector<std::pair<BigInt, unsigned>> pending;
  if (m > 1) pending.emplace_back(m, 1);
  while (!pending.empty()) {
    auto [value, multiplicity] = std::move(pending.back());
    pending.pop_back();
    if (is_prime(value)) {
      found.push_back({value, multiplicity});
      continue;
    }
    auto [root, k] = perfect_power(value);
    if (k > 1) {
      pending.emplace_back(root, multiplicity * k);
      continue;
    }
    BigInt a = find_factor(value, iterations_left);
    BigInt b = value / a;
    pending.emplace_back(std::move(a), multiplicity);
    pending.emplace_back(std::move(b), multiplicity);
  }
  return Factorization::from_factors(std::move(found));
}

}  // namespace vpal
