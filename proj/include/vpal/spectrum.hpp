#pragma once

// Periodic arithmetical functions Z -> C written as finite sums
// f(x) = sum g(zeta) zeta^x over roots of unity zeta = e(num/den).

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "vpal/bigint.hpp"
#include "vpal/indicator.hpp"

namespace vpal::spectrum {

using Complex = std::complex<double>;

/// Coefficients below this magnitude count as zero on the floating-point path.
inline constexpr double kZeroTolerance = 1e-9;

/// zeta = e(num/den) with 0 <= num < den and gcd(num, den) = 1.
struct RootIndex {
  std::int64_t num = 0;
  std::int64_t den = 1;

  /// Reduces num/den and brings num into [0, den).
  static RootIndex make(std::int64_t num, std::int64_t den);

  friend auto operator<=>(const RootIndex&, const RootIndex&) = default;
};

/// Finite map RootIndex -> nonzero complex coefficient.
class SpectralMap {
 public:
  SpectralMap() = default;

  /// Adds c to the coefficient at r; coefficients that fall below the
  /// tolerance are removed.
  void add(const RootIndex& r, Complex c);

  const std::map<RootIndex, Complex>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  Complex at(const RootIndex& r) const;

 private:
  std::map<RootIndex, Complex> entries_;
};

/// f(0), ..., f(period - 1) of a function periodic modulo `period`.
struct PeriodicSamples {
  std::int64_t period = 1;
  std::vector<Complex> values;

  static PeriodicSamples from(std::vector<Complex> values);
};

Complex eval_spectrum(const SpectralMap& g, std::int64_t x);

/// lcm of den over the support; 1 when empty.
std::int64_t support_period(const SpectralMap& g);

/// Inverse finite Fourier transform: g(zeta_w^r) = h_r.
SpectralMap samples_to_spectrum(const PeriodicSamples& s);

/// Throws PeriodMismatch unless support_period(g) divides omega.
PeriodicSamples spectrum_to_samples(const SpectralMap& g, std::int64_t omega);

/// omega / gcd(k_1, ..., k_l, omega) for the nonzero h_k of
/// f(x) = sum_{k=1}^{omega} h_k zeta_omega^{-xk}.
std::int64_t theorem9_period(const PeriodicSamples& s);

/// Smallest divisor t of the period whose cyclic shift fixes the samples.
std::int64_t naive_fundamental_period(const PeriodicSamples& s, double tolerance = kZeroTolerance);
/// Exact variant for integer-valued samples.
std::int64_t naive_fundamental_period(std::span<const std::int64_t> values);

/// Groups the support by den: component d lies in the Ramanujan space S_d.
std::map<std::int64_t, SpectralMap> ramanujan_components(const SpectralMap& g);

/// I_a(x) = (1/a) sum over all a-th roots of unity.
SpectralMap indicator_spectrum(std::int64_t a);

/// Exact spectrum of an indicator combination. The coefficient is constant
/// across the primitive d-th roots, so it is stored once per d:
/// coeff(d) = sum over c_j divisible by d of lambda_j / c_j. Zeros are dropped.
class DivisorSpectrum {
 public:
  const std::map<BigInt, mpq_class>& coefficients() const { return coeff_; }
  mpq_class coefficient(const BigInt& d) const;
  void add(const BigInt& d, const mpq_class& c);
  bool empty() const { return coeff_.empty(); }

 private:
  std::map<BigInt, mpq_class> coeff_;
};

DivisorSpectrum combination_divisor_spectrum(const IndicatorCombination& comb);

/// lcm of the d with nonzero coefficient; 1 when empty.
BigInt support_period(const DivisorSpectrum& s);

/// Exact value at x, using Ramanujan sums c_d(x) = sum over e | gcd(d, x) of mu(d/e) e.
mpq_class evaluate(const DivisorSpectrum& s, const BigInt& x);

BigInt ramanujan_sum(const BigInt& d, const BigInt& x);

/// Expands to one entry per primitive d-th root. Throws std::length_error
/// when more than max_entries entries would be produced.
SpectralMap to_spectral_map(const DivisorSpectrum& s, std::size_t max_entries = 1u << 22);

/// sum lambda_j * indicator_spectrum(c_j), zero coefficients pruned exactly.
SpectralMap combination_spectrum(const IndicatorCombination& comb,
                                 std::size_t max_entries = 1u << 22);

}  // namespace vpal::spectrum
