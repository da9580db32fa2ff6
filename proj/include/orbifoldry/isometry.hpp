#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "orbifoldry/lattice.hpp"
#include "orbifoldry/matrix.hpp"
#include "orbifoldry/rational.hpp"

namespace orbifoldry {

/// Integer polynomial, coefficients from the constant term upwards.
using IntPoly = std::vector<BigInt>;

/// det(x I - A), monic, by Berkowitz's division-free recurrence.
IntPoly characteristic_polynomial(const IntMatrix& a);
/// det(I - x A): the characteristic polynomial with its coefficients reversed.
IntPoly reversed_characteristic_polynomial(const IntMatrix& a);

IntPoly cyclotomic_polynomial(std::int64_t d);
std::int64_t euler_phi(std::int64_t d);

/// Characteristic polynomial written as prod_d Phi_d^{e_d}.
class CycloProfile {
 public:
  using Factors = std::map<std::int64_t, std::int64_t>;

  CycloProfile() = default;
  explicit CycloProfile(Factors factors);

  const Factors& factors() const noexcept { return factors_; }
  std::int64_t multiplicity(std::int64_t d) const;
  // sum_d e_d phi(d)
  std::int64_t degree() const;
  // lcm of the d's: the order of any matrix with this profile
  std::int64_t order() const;
  // Profile of the k-th power: a primitive d-th root raised to k is a
  // primitive d/gcd(d,k)-th root.
  CycloProfile power(std::int64_t k) const;
  bool has_eigenvalue_one() const { return multiplicity(1) > 0; }

  // e.g. "Phi2^12 Phi6^6"
  std::string to_string() const;
  // Inverse of to_string; ParseError on malformed text.
  static CycloProfile parse(const std::string& text);

  friend bool operator==(const CycloProfile&, const CycloProfile&) = default;

 private:
  Factors factors_;
};

/// Factor a monic integer polynomial into cyclotomic polynomials;
/// NonCyclotomicFactor if something is left over.
CycloProfile cyclotomic_factorization(const IntPoly& poly);

/// A Gram-preserving automorphism of a lattice, acting on coordinate columns:
/// v -> M v, with M^T G M = G.
class Isometry {
 public:
  const Lattice& lattice() const noexcept { return *lattice_; }
  const std::shared_ptr<const Lattice>& lattice_ptr() const noexcept { return lattice_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  // k may be negative.
  Isometry power(std::int64_t k) const;
  // (this * other)(v) = this(other(v))
  Isometry compose(const Isometry& other) const;

  const CycloProfile& profile() const { return *profile_; }
  std::int64_t order() const { return profile_->order(); }
  bool fixed_point_free() const { return !profile_->has_eigenvalue_one(); }

 private:
  friend Isometry verify_isometry(std::shared_ptr<const Lattice> lattice, IntMatrix m);
  Isometry(std::shared_ptr<const Lattice> lattice, IntMatrix m);

  std::shared_ptr<const Lattice> lattice_;
  IntMatrix matrix_;
  std::shared_ptr<const CycloProfile> profile_;
};

/// Checks M^T G M = G (NotGramPreserving) and det M = +-1 (NotUnimodular).
Isometry verify_isometry(std::shared_ptr<const Lattice> lattice, IntMatrix m);
inline Isometry verify_isometry(const Lattice& lattice, IntMatrix m) {
  return verify_isometry(std::make_shared<const Lattice>(lattice), std::move(m));
}

CycloProfile cyclotomic_profile(const Isometry& g);
std::int64_t multiplicative_order(const Isometry& g);

/// dims[j] = dimension of the eigenspace of g for the eigenvalue exp(-2 pi i j / m),
/// j = 0..m-1. OrderDoesNotDivide unless g^m = 1.
std::vector<std::int64_t> eigenspace_dims(const Isometry& g, std::int64_t modulus);

/// Reads an isometry file; if it names a lattice ("# lattice: <label>") the
/// label must match.
Isometry load_isometry(std::shared_ptr<const Lattice> lattice, const std::string& path);

struct SearchOptions {
  std::uint64_t budget = 20000;  // number of random words tried
  std::uint64_t seed = 1;
  std::size_t max_word_length = 40;
};

/// Witness found by search_isometry: the product of the word's generators
/// (leftmost letter applied last), raised to `exponent`.
struct SearchResult {
  Isometry isometry;
  std::vector<std::size_t> word;
  std::int64_t exponent = 1;
  std::uint64_t attempt = 0;  // index of the successful word
};

/// Random words over the generators, each word's powers screened through
/// the cyclotomic profile. Deterministic for a given seed. NotFound when the
/// budget runs out.
SearchResult search_isometry(const std::vector<Isometry>& generators, const CycloProfile& target,
                             const SearchOptions& options = {});

/// Recompute a certificate's isometry from its word and exponent.
Isometry replay_word(const std::vector<Isometry>& generators, const std::vector<std::size_t>& word,
                     std::int64_t exponent);

/// Profile of a fixed-point-free element of order 2p whose every nontrivial
/// power is fixed-point-free: Phi_{2p}^{24/(p-1)} on a rank-24 lattice.
CycloProfile order_2p_target(std::int64_t p, std::int64_t rank = 24);

}  // namespace orbifoldry
