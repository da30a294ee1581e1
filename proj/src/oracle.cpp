#include "vpal/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "vpal/characteristic.hpp"
#include "vpal/number_core.hpp"

namespace vpal::oracle {
namespace {

int mobius(unsigned long m) {
  int result = 1;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return 0;
    result = -result;
  }
  if (m > 1) result = -result;
  return result;
}

std::vector<unsigned long> small_divisors(unsigned long m) {
  std::vector<unsigned long> out;
  for (unsigned long e = 1; e * e <= m; ++e) {
    if (m % e != 0) continue;
    out.push_back(e);
    if (e * e != m) out.push_back(m / e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string repeat(const std::string& block, unsigned long k) {
  std::string s;
  s.reserve(block.size() * k);
  for (unsigned long i = 0; i < k; ++i) s += block;
  return s;
}

std::optional<bool> direct_flag(const BigInt& n, unsigned long k, const FactorBudget& budget) {
  const std::string digits = repeat(to_decimal(n), k);
  std::string reversed(digits.rbegin(), digits.rend());
  const BigInt m(digits, 10);
  const BigInt r(reversed, 10);
  if (divides(10, m) || m == r) return false;
  try {
    return v(factorize(m, budget)) == v(factorize(r, budget));
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

std::optional<bool> accelerated_flag(const BigInt& n, unsigned long k, const FactorBudget& budget) {
  const BigInt r = reverse_digits(n);
  if (divides(10, n) || n == r) return false;
  try {
    const Factorization rho_factors = factorize_rho(k, digit_count(n), budget);
    Factorization fm = factorize(n, budget);
    Factorization fr = factorize(r, budget);
    fm.merge(rho_factors);
    fr.merge(rho_factors);
    return v(fm) == v(fr);
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

TypeTuple as_tuple(const AnalysisReport& report, const CharSolution& u) {
  TypeTuple out;
  for (std::size_t i = 0; i < u.size(); ++i) out.emplace_back(report.crucial[i].p, u[i]);
  return out;
}

}  // namespace

std::string to_string(BruteForceMode mode) {
  switch (mode) {
    case BruteForceMode::kDirect: return "direct";
    case BruteForceMode::kAccelerated: return "accelerated";
    case BruteForceMode::kAuto: return "auto";
  }
  return "?";
}

BigInt cyclotomic_at_ten(unsigned long m) {
  if (m < 1) throw InvalidInput("cyclotomic index must be positive");
  BigInt num = 1, den = 1;
  for (unsigned long e : small_divisors(m)) {
    const int mu = mobius(m / e);
    if (mu == 0) continue;
    const BigInt term = pow(BigInt(10), e) - 1;
    (mu > 0 ? num : den) *= term;
  }
  return num / den;
}

Factorization factorize_rho(unsigned long k, unsigned long d, const FactorBudget& budget) {
  Factorization out;
  for (unsigned long m : small_divisors(k * d)) {
    if (d % m == 0) continue;
    out.merge(factorize(cyclotomic_at_ten(m), budget));
  }
  if (out.value() != rho(k, d)) throw Error("cyclotomic split of rho_k does not multiply back");
  return out;
}

BruteForceResult brute_force(const BigInt& n, unsigned long k, const FactorBudget& budget,
                             BruteForceMode mode) {
  require_eligible(n);
  if (k < 1) throw InvalidInput("k must be >= 1");
  switch (mode) {
    case BruteForceMode::kDirect:
      return {direct_flag(n, k, budget), mode};
    case BruteForceMode::kAccelerated:
      return {accelerated_flag(n, k, budget), mode};
    case BruteForceMode::kAuto: {
      if (auto flag = direct_flag(n, k, budget)) return {flag, BruteForceMode::kDirect};
      return {accelerated_flag(n, k, budget), BruteForceMode::kAccelerated};
    }
  }
  return {};
}

std::optional<bool> brute_force_flag(const BigInt& n, unsigned long k, const FactorBudget& budget,
                                     BruteForceMode mode) {
  return brute_force(n, k, budget, mode).flag;
}

std::optional<bool> VerificationRow::agrees() const {
  if (!observed) return std::nullopt;
  return *observed == predicted;
}

VerificationReport verify(const BigInt& n, unsigned long k_max, const FactorBudget& budget,
                          BruteForceMode mode) {
  if (k_max < 1) throw InvalidInput("k_max must be >= 1");
  VerificationReport report;
  report.n = n;
  report.indicator = indicator_for(n, budget);
  const std::size_t d = digit_count(n);
  for (unsigned long k = 1; k <= k_max; ++k) {
    const BigInt value = evaluate(report.indicator, BigInt(k));
    if (value != 0 && value != 1) {
      throw Error("indicator takes value " + to_decimal(value) + " at k = " + std::to_string(k));
    }
    VerificationRow row;
    row.k = k;
    row.predicted = value == 1;
    row.digits = d * k;
    const auto result = brute_force(n, k, budget, mode);
    row.observed = result.flag;
    row.mode = result.used;
    if (!row.observed) {
      ++report.unverified;
    } else if (*row.agrees()) {
      ++report.agreements;
    } else {
      ++report.disagreements;
    }
    report.rows.push_back(row);
  }
  return report;
}

bool thm5_cross_check(const AnalysisReport& report, unsigned long k) {
  const BigInt rho_k = rho(k, report.digits);
  CharSolution target;
  BigInt sum = 0;
  for (const auto& r : report.crucial) {
    const unsigned long alpha = r.mu + ord_p(rho_k, r.p);
    target.push_back(phi(r.p, r.abs_delta(), alpha));
    sum += r.sign() * target.back();
  }
  bool matched = false;
  for (const auto& s : report.solutions) {
    const bool criterion = s.solution == target;
    matched = matched || criterion;
    if (criterion != in_S(s.A, s.B, BigInt(k))) return false;
  }
  // A target that solves the equation must be among the enumerated solutions.
  return matched || sum != 0;
}

bool thm5_cross_check(const BigInt& n, unsigned long k, const FactorBudget& budget) {
  return thm5_cross_check(analyze(n, budget), k);
}

std::string to_string(SearchProperty property) {
  switch (property) {
    case SearchProperty::kConj1Counterexample: return "conj1";
    case SearchProperty::kOmegaBCounterexample: return "omegab";
    case SearchProperty::kDivisibilityAnomaly: return "anomaly";
  }
  return "?";
}

SearchProperty parse_search_property(const std::string& name) {
  if (name == "conj1") return SearchProperty::kConj1Counterexample;
  if (name == "omegab") return SearchProperty::kOmegaBCounterexample;
  if (name == "anomaly") return SearchProperty::kDivisibilityAnomaly;
  throw InvalidInput("unknown search property '" + name + "' (expected conj1, omegab, anomaly)");
}

bool has_property(const AnalysisReport& report, SearchProperty property,
                  std::optional<std::pair<BigInt, BigInt>>* witness) {
  switch (property) {
    case SearchProperty::kConj1Counterexample:
      return report.omega0 != 1 && report.omega0 != report.omega_f;
    case SearchProperty::kOmegaBCounterexample:
      return report.omega0 != 1 && report.omega0 != report.omega_b;
    case SearchProperty::kDivisibilityAnomaly: {
      const auto terms = report.indicator.terms();
      if (terms.empty()) return false;
      const BigInt& last = terms.back().c;
      for (const auto& t : terms) {
        if (!divides(t.c, last)) {
          if (witness) *witness = std::make_pair(t.c, last);
          return true;
        }
      }
      return false;
    }
  }
  return false;
}

std::vector<SearchHit> search(const BigInt& range_end, SearchProperty property,
                              const SearchOptions& options) {
  if (range_end < 2) throw InvalidInput("search range end must be >= 2");
  if (options.workers < 1) throw InvalidInput("workers must be >= 1");
  constexpr std::uint64_t kChunk = 128;
  const std::uint64_t end = to_u64(range_end);
  const std::uint64_t chunks = (end + kChunk - 1) / kChunk;

  std::vector<std::vector<SearchHit>> chunk_hits(chunks);
  std::vector<char> done(chunks, 0);
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::uint64_t emit_next = 0;
  std::vector<SearchHit> result;
  std::exception_ptr failure;

  auto process = [&](std::uint64_t c) {
    std::vector<SearchHit> hits;
    const std::uint64_t lo = c * kChunk + 1;
    const std::uint64_t hi = std::min(end, lo + kChunk - 1);
    for (std::uint64_t n = lo; n <= hi && !stop.load(); ++n) {
      const BigInt value(static_cast<unsigned long>(n));
      if (n % 10 == 0 || is_palindrome(value)) continue;
      SearchHit hit;
      hit.evidence = analyze(value, options.budget);
      if (!has_property(hit.evidence, property, &hit.witness)) continue;
      hit.n = value;
      hit.property = property;
      hits.push_back(std::move(hit));
    }
    std::lock_guard lock(mu);
    chunk_hits[c] = std::move(hits);
    done[c] = 1;
    while (emit_next < chunks && done[emit_next] && !stop.load()) {
      for (auto& hit : chunk_hits[emit_next]) {
        if (options.on_hit) options.on_hit(hit);
        result.push_back(std::move(hit));
        if (options.stop_at_first) {
          stop = true;
          break;
        }
      }
      chunk_hits[emit_next].clear();
      ++emit_next;
    }
  };

  auto worker = [&] {
    while (!stop.load()) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) break;
      try {
        process(c);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        stop = true;
      }
    }
  };

  if (options.workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < options.workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return result;
}

TypeInvarianceEntry type_representations(const BigInt& m, const FactorBudget& budget) {
  if (m < 1) throw InvalidInput("m must be positive");
  TypeInvarianceEntry entry;
  entry.m = m;
  const std::string s = to_decimal(m);
  const unsigned long length = s.size();
  std::optional<std::optional<TypeTuple>> first;
  entry.consistent = true;
  for (unsigned long t : small_divisors(length)) {
    const std::string block = s.substr(0, t);
    if (repeat(block, length / t) != s) continue;
    Representation rep;
    rep.base = BigInt(block, 10);
    rep.k = length / t;
    rep.eligible = !divides(10, rep.base) && !is_palindrome(rep.base);
    if (rep.eligible) {
      const AnalysisReport report = analyze(rep.base, budget);
      if (auto u = type_of(report, BigInt(rep.k))) rep.type = as_tuple(report, *u);
      if (!first) {
        first = rep.type;
      } else if (*first != rep.type) {
        entry.consistent = false;
      }
    }
    entry.representations.push_back(std::move(rep));
  }
  return entry;
}

std::vector<TypeInvarianceEntry> type_invariance_scan(const BigInt& limit,
                                                      const FactorBudget& budget) {
  std::set<BigInt> candidates;
  const std::size_t max_digits = digit_count(limit);
  for (std::size_t t = 1; 2 * t <= max_digits; ++t) {
    const BigInt lo = pow(BigInt(10), t - 1);
    const BigInt hi = pow(BigInt(10), t);
    for (BigInt base = lo; base < hi; ++base) {
      const std::string block = to_decimal(base);
      if (BigInt(repeat(block, 2), 10) > limit) break;
      for (unsigned long k = 2;; ++k) {
        const BigInt m(repeat(block, k), 10);
        if (m > limit) break;
        candidates.insert(m);
      }
    }
  }
  std::vector<TypeInvarianceEntry> out;
  for (const auto& m : candidates) {
    if (!is_v_palindrome(m, budget)) continue;
    out.push_back(type_representations(m, budget));
  }
  return out;
}

}  // namespace vpal::oracle
