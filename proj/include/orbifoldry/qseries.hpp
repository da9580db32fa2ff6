#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orbifoldry/rational.hpp"

namespace orbifoldry {

/// Truncated formal series sum_k c_k q^{k/D} with rational coefficients.
///
/// The grain D fixes the exponent lattice (1/D)Z. The cutoff index N says the
/// series is exact for every exponent k/D with k <= N and unknown beyond, so
/// reading past it is an error rather than an implicit zero. Only finitely
/// many negative exponents are allowed, and zero coefficients are never
/// stored. Values are immutable once built; all operations return new series.
class FracSeries {
 public:
  using Terms = std::map<std::int64_t, Rational>;

  FracSeries(std::int64_t grain, std::int64_t cutoff_index, Terms terms = {});

  static FracSeries zero(const Rational& cutoff, std::int64_t grain = 1);
  static FracSeries one(const Rational& cutoff);
  static FracSeries monomial(const Rational& coeff, const Rational& exponent, const Rational& cutoff);

  std::int64_t grain() const noexcept { return grain_; }
  std::int64_t cutoff_index() const noexcept { return cutoff_; }
  Rational cutoff() const;
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Lowest exponent carrying a nonzero coefficient.
  std::optional<Rational> valuation() const;

  Rational coefficient_at(const Rational& exponent) const;

  // Same series on the finer exponent lattice (1/new_grain)Z.
  FracSeries with_grain(std::int64_t new_grain) const;
  // Lowers the cutoff (never raises it).
  FracSeries truncated(const Rational& cutoff) const;
  // Multiplies by q^e; e must lie on the grain lattice after rescaling.
  FracSeries shifted(const Rational& e) const;
  // Drops the grain to the smallest D' dividing D that still carries all
  // terms and the cutoff.
  FracSeries normalized() const;

  bool has_nonnegative_integer_coefficients() const;

  friend FracSeries operator+(const FracSeries& a, const FracSeries& b);
  friend FracSeries operator-(const FracSeries& a, const FracSeries& b);
  friend FracSeries operator-(const FracSeries& a);
  friend FracSeries operator*(const Rational& s, const FracSeries& a);
  friend FracSeries operator*(const FracSeries& a, const FracSeries& b);

  // Equality of the represented truncated series: same cutoff and the same
  // coefficients, independent of grain.
  friend bool operator==(const FracSeries& a, const FracSeries& b);

 private:
  std::int64_t grain_;
  std::int64_t cutoff_;
  Terms terms_;
};

FracSeries series_mul(const FracSeries& a, const FracSeries& b);
FracSeries series_inv(const FracSeries& a);
FracSeries series_pow(const FracSeries& a, unsigned n);

struct ModeFactor {
  Rational exponent;
  std::int64_t multiplicity;
};

/// prod over factors (e, d) and k >= 0 of (1 - q^{e+k})^{-d}, exact up to the
/// cutoff: the generating function of monomials in commuting modes.
FracSeries grading_product(std::span<const ModeFactor> factors, const Rational& cutoff);

/// prod over factors (e, d) and k >= 0 of (1 + sign q^{e+k})^{d}.
FracSeries fermionic_product(std::span<const ModeFactor> factors, int sign, const Rational& cutoff);

/// prod_{n >= 1} 1 / P(q^n) for an integer polynomial P with P(0) = 1.
FracSeries inverse_polynomial_product(std::span<const BigInt> poly, const Rational& cutoff);

/// Terms whose exponent is congruent to r modulo 1, for 0 <= r < 1.
FracSeries extract_weight_class(const FracSeries& a, const Rational& r);

Rational coefficient_at(const FracSeries& a, const Rational& e);

// Default truncation exponent used by the CLI and the verification suite.
inline constexpr std::int64_t kDefaultCutoff = 6;

std::string to_json_string(const FracSeries& a);
FracSeries series_from_json_string(const std::string& text);
// Human-readable rendering, e.g. "1 + 24q + 324q^2 + O(q^3)".
std::string to_display_string(const FracSeries& a);

}  // namespace orbifoldry
