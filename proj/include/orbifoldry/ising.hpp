#pragma once

#include <map>
#include <utility>
#include <vector>

#include "orbifoldry/qseries.hpp"

namespace orbifoldry {

/// Character of the c = 1/2 Virasoro module of lowest weight h in {0, 1/2, 1/16}.
struct MinimalModelChar {
  Rational h;
  FracSeries series;
};

/// From a free fermion: ch_0 +- ch_{1/2} = prod_{n>=0} (1 +- q^{n+1/2}) and
/// ch_{1/16} = q^{1/16} prod_{n>=1} (1 + q^n). UnknownHighestWeight otherwise.
MinimalModelChar c12_character(const Rational& h, const Rational& cutoff);

/// Weight-one coefficient of ch_0^2 + ch_{1/2}^2, the character of the only
/// nontrivial simple-current extension of two commuting c = 1/2 theories.
Rational extension_weight_one_check(const Rational& cutoff = Rational(2));

using SectorGrid = std::map<std::pair<Rational, Rational>, FracSeries>;

struct GridCheck {
  bool consistent = false;
  FracSeries residual;  // chV - sum ch(h1) ch(h2) mult(h1, h2)
};

/// Compares chV with sum over (h1, h2) of ch(h1) ch(h2) mult(h1, h2), up to
/// the smaller cutoff. mult must carry all nine keys (missing keys are an
/// InvalidArgument).
GridCheck sector_grid_consistency(const FracSeries& chV, const SectorGrid& mult);

/// The three admissible lowest weights, in increasing order.
const std::vector<Rational>& ising_weights();

}  // namespace orbifoldry
