#pragma once

#include "orbifoldry/qseries.hpp"

// The two modular forms needed to pin down the theta series of an even
// unimodular lattice of rank 24 from its root count.
namespace orbifoldry {

/// E_4 = 1 + 240 sum_n sigma_3(n) q^n, exact through the integer part of cutoff.
FracSeries eisenstein_e4(const Rational& cutoff);

/// Delta = q prod_{n >= 1} (1 - q^n)^24.
FracSeries discriminant(const Rational& cutoff);

/// Weight-12 forms are spanned by E_4^3 and Delta, so an even unimodular
/// rank-24 lattice with `roots` vectors of norm 2 has theta series
/// E_4^3 + (roots - 720) Delta.
FracSeries rank24_unimodular_theta(std::uint64_t roots, const Rational& cutoff);

}  // namespace orbifoldry
