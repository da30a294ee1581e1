#include "vpal/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "vpal/number_core.hpp"

namespace vpal::spectrum {
namespace {

// e(num * x / den), reducing the exponent exactly before going to floating point.
Complex unit_root_power(std::int64_t num, std::int64_t den, std::int64_t x) {
  const __int128 prod = static_cast<__int128>(num) * x;
  std::int64_t r = static_cast<std::int64_t>(prod % den);
  if (r < 0) r += den;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  const std::int64_t g = std::gcd(a, b);
  __int128 l = static_cast<__int128>(a / g) * b;
  if (l > INT64_MAX) throw std::overflow_error("period exceeds 64 bits");
  return static_cast<std::int64_t>(l);
}

// Inverse DFT with the given sign convention:
// out[r] = (1/w) sum_x f(x) e(sign * x r / w).
std::vector<Complex> inverse_dft(const PeriodicSamples& s, int sign) {
  const std::int64_t w = s.period;
  std::vector<Complex> out(static_cast<std::size_t>(w));
  for (std::int64_t r = 0; r < w; ++r) {
    Complex acc = 0;
    for (std::int64_t x = 0; x < w; ++x) {
      acc += s.values[static_cast<std::size_t>(x)] * unit_root_power(sign * r, w, x);
    }
    out[static_cast<std::size_t>(r)] = acc / static_cast<double>(w);
  }
  return out;
}

void check_samples(const PeriodicSamples& s) {
  if (s.period < 1 || static_cast<std::int64_t>(s.values.size()) != s.period) {
    throw InvalidInput("sample vector length must equal its period");
  }
}

}  // namespace

RootIndex RootIndex::make(std::int64_t num, std::int64_t den) {
  if (den < 1) throw InvalidInput("root of unity denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

void SpectralMap::add(const RootIndex& r, Complex c) {
  auto& slot = entries_[r];
  slot += c;
  if (std::abs(slot) < kZeroTolerance) entries_.erase(r);
}

Complex SpectralMap::at(const RootIndex& r) const {
  auto it = entries_.find(r);
  return it == entries_.end() ? Complex{} : it->second;
}

PeriodicSamples PeriodicSamples::from(std::vector<Complex> values) {
  if (values.empty()) throw InvalidInput("samples must be nonempty");
  PeriodicSamples s;
  s.period = static_cast<std::int64_t>(values.size());
  s.values = std::move(values);
  return s;
}

Complex eval_spectrum(const SpectralMap& g, std::int64_t x) {
  Complex acc = 0;
  for (const auto& [r, c] : g.entries()) acc += c * unit_root_power(r.num, r.den, x);
  return acc;
}

std::int64_t support_period(const SpectralMap& g) {
  std::int64_t acc = 1;
  for (const auto& [r, c] : g.entries()) acc = lcm_checked(acc, r.den);
  return acc;
}

SpectralMap samples_to_spectrum(const PeriodicSamples& s) {
  check_samples(s);
  const auto h = inverse_dft(s, -1);
  SpectralMap g;
  for (std::int64_t r = 0; r < s.period; ++r) {
    g.add(RootIndex::make(r, s.period), h[static_cast<std::size_t>(r)]);
  }
  return g;
}

PeriodicSamples spectrum_to_samples(const SpectralMap& g, std::int64_t omega) {
  if (omega < 1 || omega % support_period(g) != 0) {
    throw PeriodMismatch("support period " + std::to_string(support_period(g)) +
                         " does not divide " + std::to_string(omega));
  }
  PeriodicSamples s;
  s.period = omega;
  s.values.reserve(static_cast<std::size_t>(omega));
  for (std::int64_t x = 0; x < omega; ++x) s.values.push_back(eval_spectrum(g, x));
  return s;
}

std::int64_t theorem9_period(const PeriodicSamples& s) {
  check_samples(s);
  const std::int64_t w = s.period;
  // f(x) = sum_{k=1}^{w} h_k zeta_w^{-xk}  =>  h_k = (1/w) sum_x f(x) zeta_w^{xk}.
  const auto h = inverse_dft(s, +1);
  std::int64_t g = w;
  for (std::int64_t k = 1; k <= w; ++k) {
    if (std::abs(h[static_cast<std::size_t>(k % w)]) >= kZeroTolerance) g = std::gcd(g, k);
  }
  return w / g;
}

std::int64_t naive_fundamental_period(const PeriodicSamples& s, double tolerance) {
  check_samples(s);
  const std::int64_t w = s.period;
  for (std::int64_t t = 1; t <= w; ++t) {
    if (w % t != 0) continue;
    bool fixed = true;
    for (std::int64_t x = 0; x < w && fixed; ++x) {
      fixed = std::abs(s.values[static_cast<std::size_t>((x + t) % w)] -
                       s.values[static_cast<std::size_t>(x)]) <= tolerance;
    }
    if (fixed) return t;
  }
  return w;
}

std::int64_t naive_fundamental_period(std::span<const std::int64_t> values) {
  const auto w = static_cast<std::int64_t>(values.size());
  if (w < 1) throw InvalidInput("samples must be nonempty");
  for (std::int64_t t = 1; t <= w; ++t) {
    if (w % t != 0) continue;
    bool fixed = true;
    for (std::int64_t x = 0; x < w && fixed; ++x) {
      fixed = values[static_cast<std::size_t>((x + t) % w)] == values[static_cast<std::size_t>(x)];
    }
    if (fixed) return t;
  }
  return w;
}

std::map<std::int64_t, SpectralMap> ramanujan_components(const SpectralMap& g) {
  std::map<std::int64_t, SpectralMap> out;
  for (const auto& [r, c] : g.entries()) out[r.den].add(r, c);
  return out;
}

SpectralMap indicator_spectrum(std::int64_t a) {
  if (a < 1) throw InvalidInput("indicator_spectrum requires a >= 1");
  SpectralMap g;
  const Complex coeff = 1.0 / static_cast<double>(a);
  for (std::int64_t r = 0; r < a; ++r) g.add(RootIndex::make(r, a), coeff);
  return g;
}

mpq_class DivisorSpectrum::coefficient(const BigInt& d) const {
  auto it = coeff_.find(d);
  return it == coeff_.end() ? mpq_class(0) : it->second;
}

void DivisorSpectrum::add(const BigInt& d, const mpq_class& c) {
  if (d < 1) throw InvalidInput("divisor class must be positive");
  auto& slot = coeff_[d];
  slot += c;
  slot.canonicalize();
  if (slot == 0) coeff_.erase(d);
}

DivisorSpectrum combination_divisor_spectrum(const IndicatorCombination& comb) {
  DivisorSpectrum out;
  for (const auto& [c, lambda] : comb.terms()) {
    mpq_class weight(BigInt(static_cast<long>(lambda)), c);
    weight.canonicalize();
    for (const auto& d : divisors(c)) out.add(d, weight);
  }
  return out;
}

BigInt support_period(const DivisorSpectrum& s) {
  BigInt acc = 1;
  for (const auto& [d, c] : s.coefficients()) acc = lcm(acc, d);
  return acc;
}

BigInt ramanujan_sum(const BigInt& d, const BigInt& x) {
  // Multiplicative in d: c_{p^a}(x) = p^a - p^(a-1) if p^a | x,
  // -p^(a-1) if exactly p^(a-1) divides x, and 0 otherwise.
  BigInt result = 1;
  for (const auto& [p, a] : factorize(d)) {
    const unsigned b = (x == 0) ? a : std::min(a, ord_p(abs(x), p));
    if (b >= a) {
      result *= pow(p, a) - pow(p, a - 1);
    } else if (b + 1 == a) {
      result *= -pow(p, a - 1);
    } else {
      return 0;
    }
  }
  return result;
}

mpq_class evaluate(const DivisorSpectrum& s, const BigInt& x) {
  mpq_class acc = 0;
  for (const auto& [d, c] : s.coefficients()) acc += c * mpq_class(ramanujan_sum(d, x));
  acc.canonicalize();
  return acc;
}

SpectralMap to_spectral_map(const DivisorSpectrum& s, std::size_t max_entries) {
  std::size_t total = 0;
  for (const auto& [d, c] : s.coefficients()) {
    BigInt phi = 1;
    for (const auto& [p, e] : factorize(d)) phi *= (p - 1) * pow(p, e - 1);
    if (phi > max_entries || (total += to_u64(phi)) > max_entries) {
      throw std::length_error("spectrum expansion exceeds " + std::to_string(max_entries) +
                              " entries");
    }
  }
  SpectralMap g;
  for (const auto& [d, c] : s.coefficients()) {
    const auto den = static_cast<std::int64_t>(to_u64(d));
    const Complex value = c.get_d();
    for (std::int64_t num = 0; num < den; ++num) {
      if (std::gcd(num, den) == 1) g.add({num, den}, value);
    }
  }
  return g;
}

SpectralMap combination_spectrum(const IndicatorCombination& comb, std::size_t max_entries) {
  return to_spectral_map(combination_divisor_spectrum(comb), max_entries);
}

}  // namespace vpal::spectrum
