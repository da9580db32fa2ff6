#include <doctest.h>

#include "oracles.hpp"
#include "orbifoldry/fusion.hpp"
#include "orbifoldry/ising.hpp"
#include "orbifoldry/report.hpp"

using namespace orbifoldry;

namespace {

Rational r(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

std::shared_ptr<const Lattice> leech() {
  static const auto l = std::make_shared<const Lattice>(load_lattice_file(default_data_dir() + "/leech.gram"));
  return l;
}

ThetaOptions modular() { return ThetaOptions{ThetaSource::ModularIdentity, {}}; }

SectorGrid empty_grid(const Rational& cutoff) {
  SectorGrid grid;
  for (const Rational& a : ising_weights())
    for (const Rational& b : ising_weights()) grid.emplace(std::make_pair(a, b), FracSeries::zero(cutoff));
  return grid;
}

}  // namespace

TEST_CASE("c = 1/2 characters against the fermionic Fock space") {
  const Rational cutoff = r(10);
  const auto vacuum = c12_character(r(0), cutoff);
  const auto half = c12_character(r(1, 2), cutoff);
  const auto twist = c12_character(r(1, 16), cutoff);
  CHECK(*vacuum.series.valuation() == 0);
  CHECK(*half.series.valuation() == r(1, 2));
  CHECK(*twist.series.valuation() == r(1, 16));
  for (const auto* ch : {&vacuum, &half, &twist}) {
    CHECK(ch->series.has_nonnegative_integer_coefficients());
    CHECK(ch->series.coefficient_at(ch->h) == 1);
  }

  const auto states = oracle::fermion_subsets(20);
  for (std::int64_t t = 0; t <= 20; ++t) {
    const std::int64_t even = states.even.count(t) ? states.even.at(t) : 0;
    const std::int64_t odd = states.odd.count(t) ? states.odd.at(t) : 0;
    CHECK(vacuum.series.coefficient_at(r(t, 2)) == even);
    CHECK(half.series.coefficient_at(r(t, 2)) == odd);
  }
  for (std::int64_t n = 0; n + 1 <= 10; ++n)
    CHECK(twist.series.coefficient_at(r(16 * n + 1, 16)) == oracle::distinct_partitions(n));

  CHECK(vacuum.series.coefficient_at(r(1)) == 0);
  CHECK(vacuum.series.coefficient_at(r(2)) == 1);
  CHECK(twist.series.coefficient_at(r(49, 16)) == 2);
  CHECK_THROWS_AS(c12_character(r(1, 3), cutoff), Error);
}

TEST_CASE("weight-one check of the simple-current extension") {
  CHECK(extension_weight_one_check() == 1);
  const auto vacuum = c12_character(r(0), r(2));
  const auto half = c12_character(r(1, 2), r(2));
  const FracSeries ext = vacuum.series * vacuum.series + half.series * half.series;
  CHECK(ext.coefficient_at(r(0)) == 1);
  CHECK(ext.coefficient_at(r(1, 2)) == 0);
  CHECK(ext.coefficient_at(r(1)) == 1);
}

TEST_CASE("sector grid consistency on small examples") {
  const Rational cutoff = r(4);
  const auto vacuum = c12_character(r(0), cutoff).series;
  SectorGrid grid = empty_grid(cutoff);
  grid.at({r(0), r(0)}) = FracSeries::one(cutoff);
  const GridCheck good = sector_grid_consistency(vacuum * vacuum, grid);
  CHECK(good.consistent);
  CHECK(good.residual.is_zero());

  const GridCheck bad = sector_grid_consistency(vacuum * vacuum + FracSeries::monomial(r(1), r(1), cutoff), grid);
  CHECK_FALSE(bad.consistent);
  CHECK(bad.residual == FracSeries::monomial(r(1), r(1), cutoff));

  grid.erase({r(1, 2), r(1, 16)});
  CHECK_THROWS_AS(sector_grid_consistency(vacuum * vacuum, grid), Error);
}

TEST_CASE("moonshine character against a candidate grid from the two-fold split") {
  // Candidate: everything of V_Lambda^+ and of the twisted part sits in the
  // (0, 0) slot with the multiplicity series chosen to absorb the Ising
  // factors. Consistency up to weight 2 checks the bookkeeping, not an
  // independent fact.
  const Rational cutoff = r(2);
  const Isometry theta = verify_isometry(leech(), std::int64_t{-1} * IntMatrix::identity(24));
  const FracSeries plus = eigencomponent_character(theta, 2, 0, cutoff, modular());
  const FracSeries twisted = extract_weight_class(SectorInvariants(theta, 1, 2).character(cutoff), r(0));
  const FracSeries moonshine = orbifold_character(theta, 2, cutoff, modular());
  CHECK(plus + twisted == moonshine);

  const auto vacuum = c12_character(r(0), cutoff).series;
  SectorGrid grid = empty_grid(cutoff);
  grid.at({r(0), r(0)}) = moonshine * series_inv(vacuum * vacuum);
  CHECK(sector_grid_consistency(moonshine, grid).consistent);
}
