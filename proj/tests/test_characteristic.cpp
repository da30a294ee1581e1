#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vpal/characteristic.hpp"
#include "vpal/indicator.hpp"
#include "vpal/number_core.hpp"

using namespace vpal;

namespace {

// phi_{p,delta}(alpha) written out from its three defining cases.
long ref_phi(long p, long delta, long alpha) {
  if (delta >= 2) return alpha == 0 ? p + delta : alpha == 1 ? 1 + delta : delta;
  if (p != 2) return alpha == 0 ? p : alpha == 1 ? 2 : 1;
  return alpha <= 1 ? 2 : 1;
}

// Preimage of u, sampling alpha = 0..6 (phi is constant from 2 on).
std::set<long> ref_preimage(long p, long delta, long u) {
  std::set<long> out;
  for (long alpha = 0; alpha <= 6; ++alpha) {
    if (ref_phi(p, delta, alpha) == u) out.insert(alpha);
  }
  return out;
}

CaseLabel ref_case(long p, long delta, long u, long mu) {
  const auto pre = ref_preimage(p, delta, u);
  const std::set<long> zero = {0}, one = {1}, both = {0, 1}, high = {2, 3, 4, 5, 6};
  if ((pre == zero && mu == 0) || (pre == one && mu == 1) || (pre == both && mu == 1)) {
    return CaseLabel::kI;
  }
  if (pre == one && mu == 0) return CaseLabel::kII;
  if (pre == both && mu == 0) return CaseLabel::kIII;
  if (pre == high && mu == 1) return CaseLabel::kIV;
  if (pre == high && mu == 0) return CaseLabel::kV;
  if (pre == high && mu >= 2) return CaseLabel::kVI;
  return CaseLabel::kVII;
}

std::vector<ref::u64> to_u64s(const std::vector<BigInt>& v) {
  std::vector<ref::u64> out;
  for (const auto& x : v) out.push_back(to_u64(x));
  return out;
}

CrucialPrimeRecord rec(long p, unsigned a, unsigned b) { return CrucialPrimeRecord::make(p, a, b); }

}  // namespace

TEST_CASE("crucial primes of 126, 18 and 13") {
  const auto k126 = crucial_primes(BigInt(126));
  REQUIRE(k126.size() == 4);
  CHECK(k126[0] == rec(2, 1, 0));
  CHECK(k126[1] == rec(3, 2, 3));
  CHECK(k126[2] == rec(7, 1, 0));
  CHECK(k126[3] == rec(23, 0, 1));
  CHECK(k126[1].delta == -1);
  CHECK(k126[1].mu == 2);
  CHECK(k126[3].delta == -1);
  CHECK(k126[3].mu == 0);

  const auto k18 = crucial_primes(BigInt(18));
  REQUIRE(k18.size() == 2);
  CHECK(k18[0] == rec(2, 1, 0));
  CHECK(k18[1] == rec(3, 2, 4));
  CHECK(k18[1].delta == -2);

  const auto k13 = crucial_primes(BigInt(13));
  REQUIRE(k13.size() == 2);
  CHECK(k13[0] == rec(13, 1, 0));
  CHECK(k13[1] == rec(31, 0, 1));
}

TEST_CASE("crucial primes reject ineligible n") {
  CHECK_THROWS_AS(crucial_primes(BigInt(560)), InvalidInput);
  CHECK_THROWS_AS(crucial_primes(BigInt(121)), InvalidInput);
  CHECK_THROWS_AS(crucial_primes(BigInt(7)), InvalidInput);
  CHECK_THROWS_AS(crucial_primes(BigInt(0)), InvalidInput);
}

TEST_CASE("crucial primes are exactly the primes with differing exponents") {
  for (ref::u64 n = 1; n <= 3000; ++n) {
    if (n % 10 == 0 || ref::reverse(n) == n) continue;
    const auto fn = ref::factor(n), fr = ref::factor(ref::reverse(n));
    std::set<ref::u64> expected;
    for (auto [p, e] : fn) {
      if (!fr.count(p) || fr.at(p) != e) expected.insert(p);
    }
    for (auto [p, e] : fr) {
      if (!fn.count(p)) expected.insert(p);
    }
    const auto got = crucial_primes(BigInt(std::to_string(n)));
    REQUIRE(got.size() == expected.size());
    auto it = expected.begin();
    for (const auto& r : got) {
      CHECK(to_u64(r.p) == *it++);
      CHECK(r.delta == static_cast<int>(r.a) - static_cast<int>(r.b));
      CHECK(r.mu == std::min(r.a, r.b));
      CHECK(r.sign() * static_cast<int>(r.abs_delta()) == r.delta);
    }
  }
}

TEST_CASE("phi") {
  CHECK(phi(7, 1, 0) == 7);
  CHECK(phi(2, 1, 1) == 2);
  CHECK(phi(5, 3, 4) == 3);
  for (long p : {2, 3, 5, 7, 11}) {
    for (unsigned delta = 1; delta <= 4; ++delta) {
      for (unsigned long alpha = 0; alpha <= 6; ++alpha) {
        CHECK(phi(p, delta, alpha) == ref_phi(p, delta, alpha));
      }
    }
  }
}

TEST_CASE("phi ranges") {
  CHECK(phi_range(2, 1) == std::vector<BigInt>{1, 2});
  CHECK(phi_range(7, 1) == std::vector<BigInt>{1, 2, 7});
  CHECK(phi_range(3, 1) == std::vector<BigInt>{1, 2, 3});
  CHECK(phi_range(2, 2) == std::vector<BigInt>{2, 3, 4});
  for (long p : {2, 3, 5, 7, 13, 47}) {
    for (unsigned delta = 1; delta <= 4; ++delta) {
      CHECK(phi_range(p, delta).size() == ((p == 2 && delta == 1) ? 2u : 3u));
    }
  }
}

TEST_CASE("classify") {
  CHECK(classify(2, 1, 1, 0) == CaseLabel::kV);
  CHECK(classify(3, 1, 1, 2) == CaseLabel::kVI);
  CHECK(classify(2, 1, 2, 0) == CaseLabel::kIII);
  CHECK(to_string(CaseLabel::kVII) == "[vii]");
  CHECK_THROWS_AS(classify(7, 1, 5, 0), InvalidInput);
}

TEST_CASE("classifier is total and matches the case predicates") {
  std::map<CaseLabel, int> seen;
  for (long p = 2; p <= 50; ++p) {
    if (!ref::is_prime(p)) continue;
    for (unsigned delta = 1; delta <= 4; ++delta) {
      for (const auto& u : phi_range(p, delta)) {
        for (unsigned mu = 0; mu <= 4; ++mu) {
          const auto label = classify(p, delta, u, mu);
          CHECK(label == ref_case(p, delta, u.get_si(), mu));
          ++seen[label];
        }
      }
    }
  }
  CHECK(seen.size() == 7);
}

TEST_CASE("solve_characteristic") {
  const auto s126 = solve_characteristic(crucial_primes(BigInt(126)));
  const std::vector<CharSolution> expected = {{1, 1, 1, 1}, {1, 1, 2, 2}, {1, 2, 2, 1}, {2, 1, 1, 2},
                                              {2, 2, 1, 1}, {2, 2, 2, 2}, {2, 3, 2, 1}};
  CHECK(s126 == expected);
  // 12 has a single solution, and it is degenerate.
  CHECK(solve_characteristic(crucial_primes(BigInt(12))).size() == 1);
  const std::vector<CrucialPrimeRecord> single = {rec(7, 1, 0)};
  CHECK(solve_characteristic(single).empty());
}

TEST_CASE("pruned solver equals the Cartesian filter") {
  for (ref::u64 n = 1; n <= 10000; ++n) {
    if (n % 10 == 0 || ref::reverse(n) == n) continue;
    const auto records = crucial_primes(BigInt(std::to_string(n)));
    if (records.size() > 5) continue;
    CHECK(solve_characteristic(records) == solve_characteristic_naive(records));
  }
  std::mt19937 rng(21);
  const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<CrucialPrimeRecord> records;
    const int size = 1 + rng() % 5;
    for (int i = 0, start = rng() % 4; i < size; ++i) {
      unsigned a = rng() % 4, b = rng() % 4;
      if (a == b) ++a;
      records.push_back(rec(primes[start + 2 * i], a, b));
    }
    const auto fast = solve_characteristic(records);
    CHECK(fast == solve_characteristic_naive(records));
    for (const auto& u : fast) {
      BigInt sum = 0;
      for (std::size_t i = 0; i < u.size(); ++i) sum += records[i].sign() * u[i];
      CHECK(sum == 0);
    }
  }
}

TEST_CASE("constraint pairs") {
  const auto k126 = crucial_primes(BigInt(126));
  CHECK(constraint_pair(k126[2], 2, 3) == ConstraintPair{BigInt(2), BigInt(14)});
  CHECK(constraint_pair(k126[3], 2, 3) == ConstraintPair{BigInt(22), BigInt(506)});
  CHECK(constraint_pair(k126[1], 1, 3) == ConstraintPair{});
  CHECK(constraint_pair(k126[0], 1, 3) == ConstraintPair{std::nullopt, BigInt(1)});
  CHECK(constraint_pair(k126[0], 2, 3) == ConstraintPair{});
  CHECK(constraint_pair(k126[1], 2, 3) == ConstraintPair{std::nullopt, BigInt(1)});
  CHECK(constraint_pair(k126[2], 1, 3) == ConstraintPair{BigInt(14), std::nullopt});
}

TEST_CASE("assemble_constraints") {
  const auto k126 = crucial_primes(BigInt(126));
  const auto u4 = assemble_constraints({2, 1, 1, 2}, k126, 3);
  CHECK(u4.A == std::vector<BigInt>{14, 22});
  CHECK(u4.B == std::vector<BigInt>{506});
  CHECK_FALSE(u4.degenerate);

  const auto u1 = assemble_constraints({1, 1, 1, 1}, k126, 3);
  CHECK(u1.A == std::vector<BigInt>{14, 506});
  CHECK(u1.B == std::vector<BigInt>{1});
  CHECK(u1.degenerate);

  CHECK(is_degenerate({}, std::vector<BigInt>{1}));
  CHECK_FALSE(is_degenerate({}, {}));
  CHECK(is_degenerate(std::vector<BigInt>{4, 6}, std::vector<BigInt>{12}));
  CHECK_FALSE(is_degenerate(std::vector<BigInt>{4, 6}, std::vector<BigInt>{8}));
}

TEST_CASE("in_S") {
  const std::vector<BigInt> A = {14, 22}, B = {506};
  CHECK(in_S(A, B, 154));
  CHECK_FALSE(in_S(A, B, 3542));
  CHECK(in_S({}, {}, 17));
  CHECK(in_S({}, {}, 0));
}

TEST_CASE("degeneracy flag matches emptiness over one period") {
  int scanned = 0;
  for (ref::u64 n = 1; n <= 8000; ++n) {
    if (n % 10 == 0 || ref::reverse(n) == n) continue;
    const auto report = analyze(BigInt(std::to_string(n)));
    for (const auto& s : report.solutions) {
      std::vector<BigInt> all = s.A;
      all.insert(all.end(), s.B.begin(), s.B.end());
      const BigInt period = lcm_of(all);
      if (period > 200000) continue;
      const auto A = to_u64s(s.A), B = to_u64s(s.B);
      bool nonempty = false;
      for (ref::u64 x = 1; x <= to_u64(period) && !nonempty; ++x) nonempty = ref::in_S(A, B, x);
      CHECK(nonempty == !s.degenerate);
      ++scanned;
    }
  }
  CHECK(scanned > 1000);
}

TEST_CASE("sets S_u of distinct nondegenerate solutions are disjoint") {
  int literal = 0, structural = 0;
  for (ref::u64 n = 1; n <= 10000; ++n) {
    if (n % 10 == 0 || ref::reverse(n) == n) continue;
    const auto report = analyze(BigInt(std::to_string(n)));
    const auto nd = report.nondegenerate();
    for (std::size_t i = 0; i < nd.size(); ++i) {
      for (std::size_t j = i + 1; j < nd.size(); ++j) {
        const auto& u = report.solutions[nd[i]];
        const auto& w = report.solutions[nd[j]];
        std::vector<BigInt> A = u.A, B = u.B;
        A.insert(A.end(), w.A.begin(), w.A.end());
        B.insert(B.end(), w.B.begin(), w.B.end());
        std::vector<BigInt> all = A;
        all.insert(all.end(), B.begin(), B.end());
        const BigInt period = lcm_of(all);
        if (period <= 200000) {
          const auto uA = to_u64s(u.A), uB = to_u64s(u.B), wA = to_u64s(w.A), wB = to_u64s(w.B);
          for (ref::u64 x = 1; x <= to_u64(period); ++x) {
            CHECK_FALSE((ref::in_S(uA, uB, x) && ref::in_S(wA, wB, x)));
          }
          ++literal;
        } else {
          // S_u and S_w meet iff lcm(A_u, A_w) avoids every element of B_u and B_w.
          const BigInt l = lcm_of(A);
          bool meet = true;
          for (const auto& b : B) meet = meet && !divides(b, l);
          CHECK_FALSE(meet);
          ++structural;
        }
      }
    }
  }
  MESSAGE("pairs checked literally: " << literal << ", by lcm(A): " << structural);
}
