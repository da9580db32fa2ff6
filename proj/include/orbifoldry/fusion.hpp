#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "orbifoldry/isometry.hpp"
#include "orbifoldry/qseries.hpp"
#include "orbifoldry/sectors.hpp"

namespace orbifoldry {

/// Label (i, j) of a simple module of a cyclic orbifold: i is the twist,
/// j the eigenvalue index. Stored reduced mod n.
struct FusionLabel {
  std::int64_t i = 0;
  std::int64_t j = 0;
  std::int64_t n = 1;

  static FusionLabel make(std::int64_t i, std::int64_t j, std::int64_t n);
  friend auto operator<=>(const FusionLabel&, const FusionLabel&) = default;
};

/// Z_n x Z_n with the quadratic form q(i, j) = ij/n mod 1.
struct QuadSpace {
  std::int64_t n = 1;

  Rational q(const FusionLabel& a) const;
  // b(a, c) = q(a + c) - q(a) - q(c) mod 1
  Rational bilinear(const FusionLabel& a, const FusionLabel& c) const;
};

Rational q_delta(const FusionLabel& a);

/// Componentwise sum; MismatchedModulus for labels of different n.
FusionLabel fusion_product(const FusionLabel& a, const FusionLabel& b);

struct IsotropicSubgroup {
  std::vector<FusionLabel> generators;
  std::vector<FusionLabel> elements;  // sorted
};

inline constexpr std::int64_t kMaxFusionModulus = 30;

/// All maximal subgroups of Z_n x Z_n on which q vanishes, ordered by their
/// sorted element lists. ModulusTooLarge for n > 30.
std::vector<IsotropicSubgroup> maximal_isotropic_subgroups(const QuadSpace& space);

/// { j : i j = 0 mod n }: the eigenvalue labels of integral weight in the
/// g^i-twisted sector.
std::set<std::int64_t> integral_weight_labels(const QuadSpace& space, std::int64_t i);

/// Character of the Z_n orbifold extension by the twists (i, 0): the
/// g-invariant part of the untwisted theory plus the integral-weight part of
/// every g^i-twisted sector. Requires g^n = 1 (OrderDoesNotDivide), rho of
/// the g-sector in (1/n)Z (WeightHypothesisFailed), and that each twisted
/// sector's integral class is a single module (NotSeparable).
FracSeries orbifold_character(const Isometry& g, std::int64_t n, const Rational& cutoff,
                              const ThetaOptions& options = {});

/// Weight-one dimension of the extension by the twists (i, 0) of an order-2p
/// element, assembled from the pieces that can be separated: the invariant
/// untwisted part and the integral classes of the odd sectors (i != p). The
/// remaining sectors are certified to have nothing at weight one because
/// their conformal weight exceeds one.
struct WeightOneCount {
  BigInt total;
  BigInt untwisted;
  std::map<std::int64_t, BigInt> per_sector;   // odd i != p
  std::map<std::int64_t, Rational> excluded;   // other i, with their conformal weight
};
WeightOneCount twisted_weight_one_dimension(const Isometry& g, std::int64_t p, const ThetaOptions& options = {});

}  // namespace orbifoldry
