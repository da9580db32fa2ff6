#include <doctest.h>

#include <random>

#include "orbifoldry/isometry.hpp"
#include "orbifoldry/report.hpp"
#include "orbifoldry/suite_data.hpp"

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

std::shared_ptr<const Lattice> leech() {
  static const auto l = std::make_shared<const Lattice>(load_lattice_file(default_data_dir() + "/leech.gram"));
  return l;
}

BigInt evaluate(const IntPoly& p, std::int64_t x) {
  BigInt acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  IntPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

constexpr std::int64_t kPrimes[] = {3, 5, 7, 13};

}  // namespace

TEST_CASE("characteristic polynomial agrees with det(tI - A) at integer points") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> entry(-4, 4), dim(1, 6);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(dim(rng));
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
    const IntPoly chi = characteristic_polynomial(a);
    REQUIRE(chi.size() == n + 1);
    CHECK(chi.back() == 1);
    for (std::int64_t t = -3; t <= 3; ++t) {
      IntMatrix shifted = std::int64_t{-1} * a;
      for (std::size_t i = 0; i < n; ++i) shifted(i, i) += t;
      CHECK(evaluate(chi, t) == determinant(shifted));
    }
    const IntPoly rev = reversed_characteristic_polynomial(a);
    CHECK(IntPoly(chi.rbegin(), chi.rend()) == rev);
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == IntPoly{-1, 1});
  CHECK(cyclotomic_polynomial(2) == IntPoly{1, 1});
  CHECK(cyclotomic_polynomial(6) == IntPoly{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == IntPoly{1, 0, -1, 0, 1});
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(26) == 12);
  for (std::int64_t n = 1; n <= 30; ++n) {
    IntPoly product{1};
    std::int64_t total = 0;
    for (std::int64_t d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      product = multiply(product, cyclotomic_polynomial(d));
      total += euler_phi(d);
    }
    IntPoly xn1(static_cast<std::size_t>(n + 1), 0);
    xn1[0] = -1;
    xn1[static_cast<std::size_t>(n)] = 1;
    CHECK(product == xn1);
    CHECK(total == n);
  }
}

TEST_CASE("cyclotomic factorization and profiles") {
  const IntPoly poly = multiply(multiply(cyclotomic_polynomial(2), cyclotomic_polynomial(2)), cyclotomic_polynomial(6));
  const CycloProfile profile = cyclotomic_factorization(poly);
  CHECK(profile.to_string() == "Phi2^2 Phi6^1");
  CHECK(profile.degree() == 4);
  CHECK(profile.order() == 6);
  CHECK(CycloProfile::parse(profile.to_string()) == profile);
  CHECK(profile.power(2) == CycloProfile(CycloProfile::Factors{{1, 2}, {3, 1}}));
  CHECK(profile.power(3) == CycloProfile(CycloProfile::Factors{{2, 4}}));
  CHECK(profile.power(6).has_eigenvalue_one());
  CHECK(kind_of([] { cyclotomic_factorization(IntPoly{-3, 0, 1}); }) == ErrorKind::NonCyclotomicFactor);
  CHECK(kind_of([] { CycloProfile::parse("Phi^2"); }) == ErrorKind::ParseError);
  CHECK(order_2p_target(3).to_string() == "Phi6^12");
  CHECK(order_2p_target(13).to_string() == "Phi26^2");
}

TEST_CASE("isometry validation") {
  const auto l = leech();
  CHECK(kind_of([&] { verify_isometry(l, std::int64_t{2} * IntMatrix::identity(24)); }) == ErrorKind::NotGramPreserving);
  CHECK(kind_of([&] { verify_isometry(l, IntMatrix::identity(3)); }) == ErrorKind::DimensionMismatch);

  const Lattice z = load_lattice("1\n2\n");
  CHECK(kind_of([&] { verify_isometry(z, std::int64_t{3} * IntMatrix::identity(1)); }) == ErrorKind::NotGramPreserving);

  const Isometry neg = verify_isometry(l, std::int64_t{-1} * IntMatrix::identity(24));
  CHECK(neg.profile().to_string() == "Phi2^24");
  CHECK(neg.order() == 2);
  CHECK(neg.fixed_point_free());
  CHECK(neg.power(2).profile().to_string() == "Phi1^24");
  CHECK(neg.power(-1).matrix() == neg.matrix());
  CHECK(eigenspace_dims(neg, 2) == std::vector<std::int64_t>{0, 24});
  CHECK(eigenspace_dims(neg, 4) == std::vector<std::int64_t>{0, 0, 24, 0});
  CHECK(kind_of([&] { eigenspace_dims(neg, 3); }) == ErrorKind::OrderDoesNotDivide);
}

TEST_CASE("shipped generators are isometries") {
  const auto gens = load_generators(leech(), default_data_dir());
  REQUIRE(gens.size() == generator_names().size());
  for (const Isometry& g : gens) {
    CHECK(g.profile().degree() == 24);
    CHECK(multiplicative_order(g) == g.order());
    CHECK(g.power(g.order()).matrix() == IntMatrix::identity(24));
  }
}

TEST_CASE("search finds simple targets deterministically") {
  const auto l = leech();
  const Isometry neg = verify_isometry(l, std::int64_t{-1} * IntMatrix::identity(24));
  const Isometry id = verify_isometry(l, IntMatrix::identity(24));
  const CycloProfile target = CycloProfile::parse("Phi2^24");
  const SearchResult found = search_isometry({id, neg}, target);
  CHECK(found.isometry.profile() == target);
  CHECK(replay_word({id, neg}, found.word, found.exponent).matrix() == found.isometry.matrix());
  const SearchResult again = search_isometry({id, neg}, target);
  CHECK(again.word == found.word);
  CHECK(again.attempt == found.attempt);
  SearchOptions small;
  small.budget = 50;
  CHECK(kind_of([&] { search_isometry({id}, target, small); }) == ErrorKind::NotFound);
}

TEST_CASE("shipped order-2p witnesses") {
  const auto l = leech();
  const auto gens = load_generators(l, default_data_dir());
  for (const std::int64_t p : kPrimes) {
    CAPTURE(p);
    const std::string path = witness_path(default_data_dir(), p);
    const Isometry sigma = load_isometry(l, path);
    CHECK(sigma.profile() == order_2p_target(p));
    CHECK(sigma.order() == 2 * p);
    for (std::int64_t k = 1; k < 2 * p; ++k) {
      const Isometry power = sigma.power(k);
      CHECK(power.fixed_point_free());
      CHECK(power.profile() == sigma.profile().power(k));
      CHECK(cyclotomic_profile(power) == cyclotomic_factorization(characteristic_polynomial(power.matrix())));
    }
    const auto dims = eigenspace_dims(sigma, 2 * p);
    std::int64_t total = 0;
    for (std::int64_t j = 0; j < 2 * p; ++j) {
      total += dims[static_cast<std::size_t>(j)];
      CHECK(dims[static_cast<std::size_t>(j)] == dims[static_cast<std::size_t>((2 * p - j) % (2 * p))]);
    }
    CHECK(total == 24);
    const WitnessCertificate cert = read_certificate(path);
    CHECK(replay_word(gens, cert.word, cert.exponent).matrix() == sigma.matrix());
  }
}

TEST_CASE("witness files are tied to their lattice") {
  const auto other = std::make_shared<const Lattice>(load_lattice("# label: other\n1\n2\n"));
  CHECK(kind_of([&] { load_isometry(other, witness_path(default_data_dir(), 3)); }) == ErrorKind::InvalidArgument);
}
