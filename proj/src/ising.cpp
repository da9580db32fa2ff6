#include "orbifoldry/ising.hpp"

#include <optional>
#include <vector>

#include "orbifoldry/errors.hpp"

namespace orbifoldry {

const std::vector<Rational>& ising_weights() {
  static const std::vector<Rational> weights{Rational(0), make_rational(1, 16), make_rational(1, 2)};
  return weights;
}

MinimalModelChar c12_character(const Rational& h, const Rational& cutoff) {
  if (h == 0 || h == make_rational(1, 2)) {
    const ModeFactor half[] = {{make_rational(1, 2), 1}};
    const FracSeries plus = fermionic_product(half, +1, cutoff);
    const FracSeries minus = fermionic_product(half, -1, cutoff);
    const FracSeries series = make_rational(1, 2) * (h == 0 ? plus + minus : plus - minus);
    return {h, series};
  }
  if (h == make_rational(1, 16)) {
    const ModeFactor integral[] = {{Rational(1), 1}};
    if (cutoff < h) return {h, FracSeries::zero(cutoff)};
    return {h, fermionic_product(integral, +1, cutoff - h).shifted(h)};
  }
  throw Error(ErrorKind::UnknownHighestWeight, "no c = 1/2 module of weight " + to_string(h));
}

Rational extension_weight_one_check(const Rational& cutoff) {
  const FracSeries vac = c12_character(Rational(0), cutoff).series;
  const FracSeries half = c12_character(make_rational(1, 2), cutoff).series;
  return coefficient_at(vac * vac + half * half, Rational(1));
}

GridCheck sector_grid_consistency(const FracSeries& chV, const SectorGrid& mult) {
  const auto& weights = ising_weights();
  const Rational cutoff = chV.cutoff();
  std::optional<FracSeries> sum;
  for (const auto& h1 : weights) {
    for (const auto& h2 : weights) {
      auto it = mult.find({h1, h2});
      if (it == mult.end()) {
        throw Error(ErrorKind::InvalidArgument, "multiplicity grid lacks (" + to_string(h1) + ", " + to_string(h2) + ")");
      }
      if (it->second.is_zero() && it->second.cutoff() >= cutoff) continue;
      FracSeries term = c12_character(h1, cutoff).series * c12_character(h2, cutoff).series * it->second;
      sum = sum ? *sum + term : term;
    }
  }
  FracSeries residual = sum ? chV - *sum : chV;
  return {residual.is_zero(), residual};
}

}  // namespace orbifoldry
