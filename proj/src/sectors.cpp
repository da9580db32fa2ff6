#include "orbifoldry/sectors.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <string>

namespace orbifoldry {

namespace {

std::int64_t mobius(std::int64_t n) {
  std::int64_t result = 1;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    n /= q;
    if (n % q == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::int64_t reduce(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace

std::int64_t ramanujan_sum(std::int64_t q, std::int64_t n) {
  if (q < 1) throw Error(ErrorKind::InvalidArgument, "Ramanujan sum needs q >= 1");
  const std::int64_t g = std::gcd(q, reduce(n, q));
  std::int64_t total = 0;
  for (std::int64_t d = 1; d <= g; ++d)
    if (g % d == 0) total += mobius(q / d) * d;
  return total;
}

Rational conformal_weight(std::span<const std::int64_t> eig_dims, std::int64_t modulus) {
  if (modulus < 1 || eig_dims.size() != static_cast<std::size_t>(modulus)) {
    throw Error(ErrorKind::DimensionMismatch, "expected one eigenspace dimension per residue mod " + std::to_string(modulus));
  }
  if (eig_dims[0] != 0) {
    throw Error(ErrorKind::FixedPointsPresent, "eigenvalue 1 has multiplicity " + std::to_string(eig_dims[0]));
  }
  BigInt total = 0;
  for (std::int64_t j = 1; j < modulus; ++j) {
    total += BigInt(static_cast<long>(j * (modulus - j))) * eig_dims[static_cast<std::size_t>(j)];
  }
  return make_rational(total, BigInt(static_cast<long>(4 * modulus * modulus)));
}

BigInt defect_dimension(const Isometry& g, std::int64_t i) {
  const Isometry h = g.power(i);
  if (!h.fixed_point_free()) {
    throw Error(ErrorKind::SingularOneMinusG, "g^" + std::to_string(i) + " fixes a nonzero vector");
  }
  const std::size_t n = h.lattice().rank();
  IntMatrix one_minus = IntMatrix::identity(n) - h.matrix();
  BigInt size = 1;
  for (const auto& d : quotient_invariants(h.lattice(), one_minus)) size *= d;
  if (!mpz_perfect_square_p(size.get_mpz_t())) {
    throw Error(ErrorKind::NotPerfectSquare, "|L/(1-g^i)L| = " + to_string(size) + " is not a square");
  }
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), size.get_mpz_t());
  return root;
}

struct SectorInvariants::Memo {
  std::mutex mutex;
  std::map<Rational, std::unique_ptr<FracSeries>> by_cutoff;
};

SectorInvariants::SectorInvariants(const Isometry& g, std::int64_t i, std::int64_t modulus)
    : power_(reduce(i, modulus)), modulus_(modulus), memo_(std::make_shared<Memo>()) {
  const Isometry h = g.power(power_);
  eig_dims_ = eigenspace_dims(h, modulus_);
  rho_ = conformal_weight(eig_dims_, modulus_);
  defect_dim_ = defect_dimension(h, 1);
}

const FracSeries& SectorInvariants::character(const Rational& cutoff) const {
  std::lock_guard lock(memo_->mutex);
  auto& slot = memo_->by_cutoff[cutoff];
  if (!slot) slot = std::make_unique<FracSeries>(twisted_character(*this, cutoff));
  return *slot;
}

FracSeries twisted_character(const SectorInvariants& s, const Rational& cutoff) {
  std::vector<ModeFactor> modes;
  for (std::int64_t j = 1; j < s.modulus(); ++j) {
    const std::int64_t d = s.eig_dims()[static_cast<std::size_t>(j)];
    if (d > 0) modes.push_back({make_rational(j, s.modulus()), d});
  }
  if (cutoff < s.rho()) return FracSeries::zero(cutoff, to_int64(Rational(s.rho()).get_den()));
  FracSeries fock = grading_product(modes, cutoff - s.rho());
  return (Rational(s.defect_dim()) * fock).shifted(s.rho());
}

FracSeries untwisted_character(const Lattice& lattice, const Rational& cutoff, const ThetaOptions& options) {
  const ModeFactor modes[] = {{Rational(1), static_cast<std::int64_t>(lattice.rank())}};
  return lattice_theta(lattice, cutoff, options) * grading_product(modes, cutoff);
}

FracSeries twined_untwisted_character(const Isometry& g, std::int64_t j, const Rational& cutoff,
                                      const ThetaOptions& options) {
  const Isometry h = g.power(j);
  if (h.matrix() == IntMatrix::identity(h.lattice().rank())) return untwisted_character(h.lattice(), cutoff, options);
  if (!h.fixed_point_free()) {
    throw Error(ErrorKind::UnsupportedFixedSublattice,
                "g^" + std::to_string(j) + " is nontrivial but fixes a sublattice; its twined trace depends on lift phases");
  }
  // Only alpha = 0 contributes; each oscillator level n gives det(1 - h q^n)^{-1}.
  return inverse_polynomial_product(reversed_characteristic_polynomial(h.matrix()), cutoff);
}

FracSeries eigencomponent_character(const Isometry& g, std::int64_t modulus, std::int64_t j, const Rational& cutoff,
                                    const ThetaOptions& options) {
  if (modulus < 1) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
  if (modulus % g.order() != 0) {
    throw Error(ErrorKind::OrderDoesNotDivide,
                "order " + std::to_string(g.order()) + " does not divide " + std::to_string(modulus));
  }
  // All j' with gcd(j', m) = e give the same twined trace (their powers are
  // Galois conjugate), and sum_{gcd(j',m)=e} exp(-2 pi i j j'/m) = c_{m/e}(j).
  std::optional<FracSeries> total;
  for (std::int64_t e = 1; e <= modulus; ++e) {
    if (modulus % e != 0) continue;
    const std::int64_t weight = ramanujan_sum(modulus / e, j);
    if (weight == 0) continue;
    FracSeries term = Rational(weight) * twined_untwisted_character(g, e, cutoff, options);
    total = total ? *total + term : term;
  }
  if (!total) return FracSeries::zero(cutoff);
  return make_rational(1, modulus) * *total;
}

}  // namespace orbifoldry
