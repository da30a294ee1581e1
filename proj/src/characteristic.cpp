#include "vpal/characteristic.hpp"

#include <algorithm>

#include "vpal/number_core.hpp"

namespace vpal {
namespace {

bool is_two_or_five(const BigInt& p) { return p == 2 || p == 5; }

void sort_unique(std::vector<BigInt>& values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

struct SearchState {
  std::span<const CrucialPrimeRecord> records;
  std::vector<std::vector<BigInt>> ranges;
  std::vector<BigInt> suffix_min;  // min of sum_{j >= i} sign_j u_j
  std::vector<BigInt> suffix_max;
  CharSolution current;
  std::vector<CharSolution> out;

  void descend(std::size_t i, const BigInt& partial) {
    if (i == records.size()) {
      if (partial == 0) out.push_back(current);
      return;
    }
    if (partial + suffix_min[i] > 0 || partial + suffix_max[i] < 0) return;
    const int s = records[i].sign();
    for (const auto& u : ranges[i]) {
      current[i] = u;
      descend(i + 1, s > 0 ? BigInt(partial + u) : BigInt(partial - u));
    }
  }
};

}  // namespace

CrucialPrimeRecord CrucialPrimeRecord::make(BigInt p, unsigned a, unsigned b) {
  if (a == b) throw InvalidInput("not a crucial prime: equal exponents for " + to_decimal(p));
  CrucialPrimeRecord r;
  r.p = std::move(p);
  r.a = a;
  r.b = b;
  r.delta = static_cast<int>(a) - static_cast<int>(b);
  r.mu = std::min(a, b);
  return r;
}

std::string to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::kI: return "[i]";
    case CaseLabel::kII: return "[ii]";
    case CaseLabel::kIII: return "[iii]";
    case CaseLabel::kIV: return "[iv]";
    case CaseLabel::kV: return "[v]";
    case CaseLabel::kVI: return "[vi]";
    case CaseLabel::kVII: return "[vii]";
  }
  return "[?]";
}

void require_eligible(const BigInt& n) {
  if (n < 1) throw InvalidInput("n must be a positive integer");
  if (divides(10, n)) throw InvalidInput("n is a multiple of 10: " + to_decimal(n));
  if (is_palindrome(n)) throw InvalidInput("n is a palindrome: " + to_decimal(n));
}

std::vector<CrucialPrimeRecord> crucial_primes(const Factorization& n_factors,
                                               const Factorization& r_factors) {
  std::vector<BigInt> primes;
  for (const auto& f : n_factors) primes.push_back(f.prime);
  for (const auto& f : r_factors) primes.push_back(f.prime);
  sort_unique(primes);
  std::vector<CrucialPrimeRecord> out;
  for (auto& p : primes) {
    const unsigned a = n_factors.exponent_of(p);
    const unsigned b = r_factors.exponent_of(p);
    if (a != b) out.push_back(CrucialPrimeRecord::make(std::move(p), a, b));
  }
  return out;
}

std::vector<CrucialPrimeRecord> crucial_primes(const BigInt& n, const FactorBudget& budget) {
  require_eligible(n);
  return crucial_primes(factorize(n, budget), factorize(reverse_digits(n), budget));
}

BigInt phi(const BigInt& p, unsigned delta, unsigned long alpha) {
  if (delta < 1) throw InvalidInput("phi requires delta >= 1");
  if (delta >= 2) {
    if (alpha == 0) return p + delta;
    if (alpha == 1) return BigInt(1 + delta);
    return BigInt(delta);
  }
  if (p == 2) return alpha <= 1 ? BigInt(2) : BigInt(1);
  if (alpha == 0) return p;
  return alpha == 1 ? BigInt(2) : BigInt(1);
}

std::vector<BigInt> phi_range(const BigInt& p, unsigned delta) {
  std::vector<BigInt> out = {phi(p, delta, 0), phi(p, delta, 1), phi(p, delta, 2)};
  sort_unique(out);
  return out;
}

Preimage phi_preimage(const BigInt& p, unsigned delta, const BigInt& u) {
  // phi is constant on alpha >= 2, so alphas 0, 1, 2 decide the preimage.
  const bool at0 = phi(p, delta, 0) == u;
  const bool at1 = phi(p, delta, 1) == u;
  const bool at2 = phi(p, delta, 2) == u;
  if (at2) return Preimage::kAtLeastTwo;
  if (at0 && at1) return Preimage::kZeroOne;
  if (at0) return Preimage::kZero;
  if (at1) return Preimage::kOne;
  throw InvalidInput("u = " + to_decimal(u) + " is outside R_{" + to_decimal(p) + "," +
                     std::to_string(delta) + "}");
}

CaseLabel classify(const BigInt& p, unsigned delta, const BigInt& u, unsigned mu) {
  switch (phi_preimage(p, delta, u)) {
    case Preimage::kZero:
      return mu == 0 ? CaseLabel::kI : CaseLabel::kVII;
    case Preimage::kOne:
      if (mu == 1) return CaseLabel::kI;
      return mu == 0 ? CaseLabel::kII : CaseLabel::kVII;
    case Preimage::kZeroOne:
      if (mu == 1) return CaseLabel::kI;
      return mu == 0 ? CaseLabel::kIII : CaseLabel::kVII;
    case Preimage::kAtLeastTwo:
      if (mu == 0) return CaseLabel::kV;
      return mu == 1 ? CaseLabel::kIV : CaseLabel::kVI;
  }
  return CaseLabel::kVII;
}

std::vector<CharSolution> solve_characteristic(std::span<const CrucialPrimeRecord> records) {
  if (records.empty()) return {};
  SearchState st;
  st.records = records;
  const std::size_t m = records.size();
  st.ranges.reserve(m);
  for (const auto& r : records) st.ranges.push_back(phi_range(r.p, r.abs_delta()));
  st.suffix_min.assign(m + 1, 0);
  st.suffix_max.assign(m + 1, 0);
  for (std::size_t i = m; i-- > 0;) {
    const auto& range = st.ranges[i];
    const BigInt& lo = range.front();
    const BigInt& hi = range.back();
    if (records[i].sign() > 0) {
      st.suffix_min[i] = st.suffix_min[i + 1] + lo;
      st.suffix_max[i] = st.suffix_max[i + 1] + hi;
    } else {
      st.suffix_min[i] = st.suffix_min[i + 1] - hi;
      st.suffix_max[i] = st.suffix_max[i + 1] - lo;
    }
  }
  st.current.assign(m, 0);
  st.descend(0, 0);
  return std::move(st.out);
}

std::vector<CharSolution> solve_characteristic_naive(std::span<const CrucialPrimeRecord> records) {
  if (records.empty()) return {};
  std::vector<std::vector<BigInt>> ranges;
  for (const auto& r : records) ranges.push_back(phi_range(r.p, r.abs_delta()));
  std::vector<std::size_t> idx(records.size(), 0);
  std::vector<CharSolution> out;
  while (true) {
    BigInt sum = 0;
    CharSolution tuple;
    for (std::size_t i = 0; i < records.size(); ++i) {
      tuple.push_back(ranges[i][idx[i]]);
      sum += records[i].sign() * tuple.back();
    }
    if (sum == 0) out.push_back(std::move(tuple));
    std::size_t i = records.size();
    while (i > 0) {
      --i;
      if (++idx[i] < ranges[i].size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
  }
}

ConstraintPair constraint_pair(const CrucialPrimeRecord& record, const BigInt& u,
                               const std::optional<HPair>& h) {
  const CaseLabel label = classify(record.p, record.abs_delta(), u, record.mu);
  const BigInt one = 1;
  if (label == CaseLabel::kVI) return {};
  if (label == CaseLabel::kVII) return {std::nullopt, one};
  if (is_two_or_five(record.p)) {
    // rho_k is never divisible by 2 or 5.
    switch (label) {
      case CaseLabel::kI:
      case CaseLabel::kIII:
        return {};
      default:
        return {std::nullopt, one};
    }
  }
  if (!h) throw InvalidInput("h constants missing for p = " + to_decimal(record.p));
  switch (label) {
    case CaseLabel::kI: return {std::nullopt, h->h1};
    case CaseLabel::kII: return {h->h1, h->h2};
    case CaseLabel::kIII: return {std::nullopt, h->h2};
    case CaseLabel::kIV: return {h->h1, std::nullopt};
    case CaseLabel::kV: return {h->h2, std::nullopt};
    default: return {};
  }
}

ConstraintPair constraint_pair(const CrucialPrimeRecord& record, const BigInt& u, unsigned long d,
                               const FactorBudget& budget) {
  std::optional<HPair> h;
  if (!is_two_or_five(record.p)) {
    h = HPair{h_constant(record.p, 1, d, budget), h_constant(record.p, 2, d, budget)};
  }
  return constraint_pair(record, u, h);
}

std::vector<std::optional<HPair>> h_pairs(std::span<const CrucialPrimeRecord> records,
                                          unsigned long d, const FactorBudget& budget) {
  std::vector<std::optional<HPair>> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    if (is_two_or_five(r.p)) {
      out.emplace_back(std::nullopt);
    } else {
      out.emplace_back(HPair{h_constant(r.p, 1, d, budget), h_constant(r.p, 2, d, budget)});
    }
  }
  return out;
}

SolutionConstraints assemble_constraints(const CharSolution& solution,
                                         std::span<const CrucialPrimeRecord> records,
                                         std::span<const std::optional<HPair>> h) {
  if (solution.size() != records.size() || h.size() != records.size()) {
    throw InvalidInput("solution, records and h constants differ in length");
  }
  SolutionConstraints sc;
  sc.solution = solution;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    sc.labels.push_back(classify(r.p, r.abs_delta(), solution[i], r.mu));
    sc.pairs.push_back(constraint_pair(r, solution[i], h[i]));
    if (sc.pairs.back().a) sc.A.push_back(*sc.pairs.back().a);
    if (sc.pairs.back().b) sc.B.push_back(*sc.pairs.back().b);
  }
  sort_unique(sc.A);
  sort_unique(sc.B);
  sc.degenerate = is_degenerate(sc.A, sc.B);
  return sc;
}

SolutionConstraints assemble_constraints(const CharSolution& solution,
                                         std::span<const CrucialPrimeRecord> records,
                                         unsigned long d, const FactorBudget& budget) {
  const auto h = h_pairs(records, d, budget);
  return assemble_constraints(solution, records, h);
}

bool in_S(std::span<const BigInt> A, std::span<const BigInt> B, const BigInt& x) {
  return std::all_of(A.begin(), A.end(), [&](const BigInt& a) { return divides(a, x); }) &&
         std::none_of(B.begin(), B.end(), [&](const BigInt& b) { return divides(b, x); });
}

bool is_degenerate(std::span<const BigInt> A, std::span<const BigInt> B) {
  const BigInt l = lcm_of(A);
  return std::any_of(B.begin(), B.end(), [&](const BigInt& b) { return divides(b, l); });
}

}  // namespace vpal
