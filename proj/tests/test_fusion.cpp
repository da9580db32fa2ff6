#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "orbifoldry/fusion.hpp"
#include "orbifoldry/report.hpp"

using namespace orbifoldry;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

Rational r(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

std::shared_ptr<const Lattice> leech() {
  static const auto l = std::make_shared<const Lattice>(load_lattice_file(default_data_dir() + "/leech.gram"));
  return l;
}

Isometry sigma(std::int64_t p) { return load_isometry(leech(), witness_path(default_data_dir(), p)); }

ThetaOptions modular() { return ThetaOptions{ThetaSource::ModularIdentity, {}}; }

std::vector<FusionLabel> sorted_labels(std::int64_t n, auto&& member) {
  std::vector<FusionLabel> out;
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j)
      if (member(i, j)) out.push_back(FusionLabel::make(i, j, n));
  std::sort(out.begin(), out.end());
  return out;
}

constexpr std::int64_t kPrimes[] = {3, 5, 7, 13};

}  // namespace

TEST_CASE("quadratic form values") {
  CHECK(q_delta(FusionLabel::make(2, 3, 6)) == 0);
  CHECK(q_delta(FusionLabel::make(1, 1, 6)) == r(1, 6));
  CHECK(q_delta(FusionLabel::make(1, 1, 2)) == r(1, 2));
  CHECK(q_delta(FusionLabel::make(-1, 7, 6)) == r(5, 6));
  const FusionLabel a = FusionLabel::make(-1, 7, 6);
  CHECK(a.i == 5);
  CHECK(a.j == 1);
}

TEST_CASE("fusion products") {
  CHECK(fusion_product(FusionLabel::make(1, 0, 6), FusionLabel::make(1, 0, 6)) == FusionLabel::make(2, 0, 6));
  CHECK(fusion_product(FusionLabel::make(3, 5, 6), FusionLabel::make(3, 1, 6)) == FusionLabel::make(0, 0, 6));
  CHECK(fusion_product(FusionLabel::make(4, 2, 6), FusionLabel::make(0, 0, 6)) == FusionLabel::make(4, 2, 6));
  CHECK(kind_of([] { fusion_product(FusionLabel::make(1, 0, 6), FusionLabel::make(1, 0, 4)); }) ==
        ErrorKind::MismatchedModulus);
}

TEST_CASE("the associated bilinear form is symmetric and bilinear") {
  std::mt19937_64 rng(29);
  for (std::int64_t n = 1; n <= kMaxFusionModulus; ++n) {
    const QuadSpace space{n};
    std::uniform_int_distribution<std::int64_t> coord(0, n - 1);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = FusionLabel::make(coord(rng), coord(rng), n);
      const auto b = FusionLabel::make(coord(rng), coord(rng), n);
      const auto c = FusionLabel::make(coord(rng), coord(rng), n);
      CHECK(space.bilinear(a, b) == space.bilinear(b, a));
      CHECK(space.bilinear(fusion_product(a, b), c) == frac(space.bilinear(a, c) + space.bilinear(b, c)));
      const std::int64_t k = coord(rng);
      CHECK(space.q(FusionLabel::make(k * a.i, k * a.j, n)) == frac(Rational(k * k) * space.q(a)));
    }
  }
}

TEST_CASE("maximal isotropic subgroups for n = 2") {
  const auto subgroups = maximal_isotropic_subgroups(QuadSpace{2});
  REQUIRE(subgroups.size() == 2);
  CHECK(subgroups[0].elements == sorted_labels(2, [](auto i, auto) { return i == 0; }));
  CHECK(subgroups[1].elements == sorted_labels(2, [](auto, auto j) { return j == 0; }));
}

TEST_CASE("maximal isotropic subgroups for n = 2p are the four expected ones") {
  for (const std::int64_t p : kPrimes) {
    const std::int64_t n = 2 * p;
    std::set<std::vector<FusionLabel>> expected{
        sorted_labels(n, [](auto i, auto) { return i == 0; }),
        sorted_labels(n, [](auto, auto j) { return j == 0; }),
        sorted_labels(n, [&](auto i, auto j) { return i % 2 == 0 && (j == 0 || j == p); }),
        sorted_labels(n, [&](auto i, auto j) { return j % 2 == 0 && (i == 0 || i == p); }),
    };
    std::set<std::vector<FusionLabel>> found;
    for (const auto& h : maximal_isotropic_subgroups(QuadSpace{n})) found.insert(h.elements);
    CHECK(found == expected);
  }
}

TEST_CASE("every returned subgroup is isotropic, closed, of order n and maximal") {
  for (std::int64_t n = 1; n <= kMaxFusionModulus; ++n) {
    CAPTURE(n);
    const QuadSpace space{n};
    const auto subgroups = maximal_isotropic_subgroups(space);
    CHECK_FALSE(subgroups.empty());
    for (const auto& h : subgroups) {
      CHECK(static_cast<std::int64_t>(h.elements.size()) == n);
      const std::set<FusionLabel> members(h.elements.begin(), h.elements.end());
      for (const auto& a : h.elements) {
        CHECK(space.q(a) == 0);
        for (const auto& b : h.elements) CHECK(members.count(fusion_product(a, b)) == 1);
      }
      for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = 0; j < n; ++j) {
          const auto a = FusionLabel::make(i, j, n);
          if (members.count(a)) continue;
          bool breaks = space.q(a) != 0;
          for (const auto& b : h.elements) breaks = breaks || space.bilinear(a, b) != 0;
          CHECK(breaks);
        }
      }
    }
  }
  CHECK(kind_of([] { maximal_isotropic_subgroups(QuadSpace{31}); }) == ErrorKind::ModulusTooLarge);
}

TEST_CASE("integral weight labels") {
  for (const std::int64_t p : kPrimes) {
    const QuadSpace space{2 * p};
    for (std::int64_t i = 1; i < 2 * p; ++i) {
      std::set<std::int64_t> expected;
      if (i == p) {
        for (std::int64_t j = 0; j < 2 * p; j += 2) expected.insert(j);
      } else if (i % 2 == 0) {
        expected = {0, p};
      } else {
        expected = {0};
      }
      CHECK(integral_weight_labels(space, i) == expected);
    }
  }
}

TEST_CASE("orbifold characters reproduce the moonshine expansion") {
  const Rational cutoff = r(5);
  const auto moonshine = oracle::moonshine_coefficients(5);
  const FracSeries z2 = orbifold_character(verify_isometry(leech(), std::int64_t{-1} * IntMatrix::identity(24)), 2, cutoff, modular());
  for (std::int64_t w = 0; w <= 5; ++w) CHECK(z2.coefficient_at(r(w)) == Rational(moonshine[static_cast<std::size_t>(w)]));
  CHECK(z2.coefficient_at(r(2)) == 196884);
  const FracSeries zp = orbifold_character(sigma(3).power(4), 3, cutoff, modular());
  CHECK(zp == z2);
}

TEST_CASE("orbifold preconditions") {
  const Isometry s = sigma(5);
  CHECK(kind_of([&] { orbifold_character(s, 10, r(2), modular()); }) == ErrorKind::NotSeparable);
  CHECK(kind_of([&] { orbifold_character(s, 5, r(2), modular()); }) == ErrorKind::OrderDoesNotDivide);

  // A2 with a rotation of order 3: conformal weight 1/9 is not in (1/3)Z.
  const auto a2 = std::make_shared<const Lattice>(load_lattice("2\n2 -1\n-1 2\n"));
  IntMatrix rot(2, 2);
  rot(0, 1) = -1;
  rot(1, 0) = 1;
  rot(1, 1) = -1;
  const Isometry g = verify_isometry(a2, rot);
  CHECK(g.order() == 3);
  CHECK(kind_of([&] { orbifold_character(g, 3, r(2)); }) == ErrorKind::WeightHypothesisFailed);
}

TEST_CASE("weight-one dimension from the odd sectors") {
  for (const std::int64_t p : kPrimes) {
    CAPTURE(p);
    const WeightOneCount count = twisted_weight_one_dimension(sigma(p), p, modular());
    CHECK(count.total == 24);
    CHECK(count.untwisted == 0);
    CHECK(count.per_sector.size() == static_cast<std::size_t>(p - 1));
    for (const auto& [i, dim] : count.per_sector) {
      CHECK(i % 2 == 1);
      CHECK(dim == 24 / (p - 1));
    }
    for (const auto& [i, rho] : count.excluded) CHECK(rho > 1);
  }
}
