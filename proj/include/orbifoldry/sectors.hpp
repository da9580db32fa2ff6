#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "orbifoldry/isometry.hpp"
#include "orbifoldry/lattice.hpp"
#include "orbifoldry/qseries.hpp"

namespace orbifoldry {

/// Lowest weight of the sector twisted by an element whose eigenspace
/// dimensions (for eigenvalues exp(-2 pi i j / m)) are eig_dims:
/// (1 / 4m^2) sum_j j (m - j) eig_dims[j]. FixedPointsPresent if eig_dims[0] != 0.
Rational conformal_weight(std::span<const std::int64_t> eig_dims, std::int64_t modulus);

/// sqrt |L / (1 - g^i) L|. SingularOneMinusG if g^i has fixed vectors,
/// NotPerfectSquare if the group order is not a square.
BigInt defect_dimension(const Isometry& g, std::int64_t i);

/// Invariants of the g^i-twisted sector, with eigenvalues indexed modulo m.
/// The character is computed on demand and memoized per cutoff; copies share
/// the memo.
class SectorInvariants {
 public:
  SectorInvariants(const Isometry& g, std::int64_t i, std::int64_t modulus);

  std::int64_t power() const noexcept { return power_; }
  std::int64_t modulus() const noexcept { return modulus_; }
  const Rational& rho() const noexcept { return rho_; }
  const BigInt& defect_dim() const noexcept { return defect_dim_; }
  const std::vector<std::int64_t>& eig_dims() const noexcept { return eig_dims_; }

  const FracSeries& character(const Rational& cutoff) const;

 private:
  struct Memo;
  std::int64_t power_;
  std::int64_t modulus_;
  Rational rho_;
  BigInt defect_dim_;
  std::vector<std::int64_t> eig_dims_;
  std::shared_ptr<Memo> memo_;
};

/// defect_dim q^rho prod_{j=1}^{m-1} prod_{k>=0} (1 - q^{j/m + k})^{-eig_dims[j]}.
FracSeries twisted_character(const SectorInvariants& s, const Rational& cutoff);

/// theta_L(q) prod_n (1 - q^n)^{-rank}: the graded dimension of the lattice theory.
FracSeries untwisted_character(const Lattice& lattice, const Rational& cutoff, const ThetaOptions& options = {});

/// Graded trace of g^j on the untwisted theory. For g^j = 1 this is the
/// untwisted character; for fixed-point-free g^j it is prod_n det(1 - g^j q^n)^{-1}.
/// UnsupportedFixedSublattice otherwise.
FracSeries twined_untwisted_character(const Isometry& g, std::int64_t j, const Rational& cutoff,
                                      const ThetaOptions& options = {});

/// Graded dimension of the subspace on which g acts by exp(2 pi i j / m):
/// (1/m) sum_{j'} exp(-2 pi i j j' / m) * twined trace of g^{j'}, evaluated
/// exactly by grouping j' by gcd(j', m) into Ramanujan sums.
FracSeries eigencomponent_character(const Isometry& g, std::int64_t modulus, std::int64_t j, const Rational& cutoff,
                                    const ThetaOptions& options = {});

/// c_q(n) = sum over primitive q-th roots of unity z of z^n.
std::int64_t ramanujan_sum(std::int64_t q, std::int64_t n);

}  // namespace orbifoldry
