#include "orbifoldry/modular.hpp"

#include <string>
#include <vector>

namespace orbifoldry {

FracSeries eisenstein_e4(const Rational& cutoff) {
  const std::int64_t top = to_int64(floor(cutoff));
  FracSeries::Terms terms;
  if (top >= 0) terms[0] = 1;
  for (std::int64_t n = 1; n <= top; ++n) {
    BigInt sigma = 0;
    for (std::int64_t d = 1; d <= n; ++d)
      if (n % d == 0) sigma += BigInt(static_cast<long>(d)) * d * d;
    terms[n] = Rational(240 * sigma);
  }
  return FracSeries(1, top, std::move(terms));
}

FracSeries discriminant(const Rational& cutoff) {
  // prod (1 - q^n)^24 is the inverse of the 24-mode grading product
  const ModeFactor modes[] = {{Rational(1), 24}};
  FracSeries euler = series_inv(grading_product(modes, cutoff - 1));
  return euler.shifted(Rational(1));
}

FracSeries rank24_unimodular_theta(std::uint64_t roots, const Rational& cutoff) {
  FracSeries e4 = eisenstein_e4(cutoff);
  FracSeries cube = e4 * e4 * e4;
  Rational correction = Rational(BigInt(std::to_string(roots))) - 720;
  return (cube + correction * discriminant(cutoff)).truncated(cutoff);
}

}  // namespace orbifoldry
