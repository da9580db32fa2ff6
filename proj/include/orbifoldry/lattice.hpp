#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "orbifoldry/matrix.hpp"
#include "orbifoldry/qseries.hpp"
#include "orbifoldry/rational.hpp"

namespace orbifoldry {

struct ThetaCache;

/// Positive definite even integral lattice given by its Gram matrix.
/// Construction validates symmetry, evenness and positive definiteness.
class Lattice {
 public:
  static Lattice from_gram(IntMatrix gram, std::string label = {});

  std::size_t rank() const noexcept { return gram_.rows(); }
  const IntMatrix& gram() const noexcept { return gram_; }
  const std::string& label() const noexcept { return label_; }
  const BigInt& determinant() const noexcept { return det_; }

  std::int64_t inner(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const;

  // Shared memo for theta coefficients; copies of a Lattice share it.
  ThetaCache& theta_cache() const { return *theta_cache_; }

 private:
  Lattice(IntMatrix gram, std::string label, BigInt det);

  IntMatrix gram_;
  std::string label_;
  BigInt det_;
  std::shared_ptr<ThetaCache> theta_cache_;
};

Lattice load_lattice(std::string_view text, std::string label = {});
Lattice load_lattice_file(const std::string& path);

/// left * A * right = diag(invariants), left and right unimodular.
struct SmithForm {
  std::vector<BigInt> invariants;
  BigMatrix left;
  BigMatrix right;
};

SmithForm smith_normal_form(const BigMatrix& a);
inline SmithForm smith_normal_form(const IntMatrix& a) { return smith_normal_form(to_big(a)); }

/// Elementary divisors > 1 of L / M L, with M written in the lattice basis.
std::vector<BigInt> quotient_invariants(const Lattice& lattice, const IntMatrix& m);

using NormCounts = std::map<std::int64_t, std::uint64_t>;

struct EnumerationOptions {
  // Interior enumeration-tree nodes (coordinate choices above the last level).
  std::uint64_t node_budget = 1'000'000'000;
  bool parallel = true;
};

/// Exact number of lattice vectors of each even norm <= max_norm, the zero
/// vector included. Throws BudgetExceeded rather than returning partial counts.
NormCounts enumerate_vectors_by_norm(const Lattice& lattice, std::int64_t max_norm,
                                     const EnumerationOptions& options = {});

/// Smallest nonzero norm, found by enumerating successively larger shells.
std::int64_t minimal_norm(const Lattice& lattice, const EnumerationOptions& options = {});

/// sum_v q^{<v,v>/2} through the given exponent, backed by the shared cache.
FracSeries theta_series(const Lattice& lattice, const Rational& cutoff, const EnumerationOptions& options = {});

/// Where the theta coefficients come from. Enumeration works for any
/// lattice; the modular identity applies to even unimodular lattices of
/// rank 24 and only enumerates the norm-2 shell.
enum class ThetaSource { Enumeration, ModularIdentity };

struct ThetaOptions {
  ThetaSource source = ThetaSource::Enumeration;
  EnumerationOptions enumeration;
};

FracSeries lattice_theta(const Lattice& lattice, const Rational& cutoff, const ThetaOptions& options = {});

std::string to_string(ThetaSource source);
ThetaSource parse_theta_source(std::string_view text);

}  // namespace orbifoldry
