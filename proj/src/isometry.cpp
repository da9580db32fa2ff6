#include "orbifoldry/isometry.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace orbifoldry {

namespace {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic polynomial; returns false on a nonzero remainder.
bool divide_exact(IntPoly& p, const IntPoly& monic) {
  if (p.size() < monic.size()) return false;
  const std::size_t dq = p.size() - monic.size();
  IntPoly quotient(dq + 1);
  IntPoly rem = p;
  for (std::size_t k = dq + 1; k-- > 0;) {
    const BigInt c = rem[k + monic.size() - 1];
    quotient[k] = c;
    if (c == 0) continue;
    for (std::size_t t = 0; t < monic.size(); ++t) rem[k + t] -= c * monic[t];
  }
  for (const auto& r : rem)
    if (r != 0) return false;
  p = std::move(quotient);
  return true;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

}  // namespace

IntPoly characteristic_polynomial(const IntMatrix& a) {
  if (!a.square()) throw Error(ErrorKind::DimensionMismatch, "characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  // desc[k] = coefficient of x^{r-k} for the leading r x r block
  std::vector<BigInt> desc{BigInt(1)};
  for (std::size_t r = 0; r < n; ++r) {
    // Block [[M, C], [R, a_rr]] with M the leading r x r part.
    std::vector<BigInt> t(r + 2);
    t[0] = 1;
    t[1] = -BigInt(static_cast<long>(a(r, r)));
    std::vector<BigInt> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = static_cast<long>(a(i, r));
    for (std::size_t k = 0; k < r; ++k) {
      BigInt rv = 0;
      for (std::size_t i = 0; i < r; ++i) rv += BigInt(static_cast<long>(a(r, i))) * v[i];
      t[k + 2] = -rv;
      if (k + 1 < r) {
        std::vector<BigInt> w(r);
        for (std::size_t i = 0; i < r; ++i) {
          BigInt s = 0;
          for (std::size_t j = 0; j < r; ++j)
            if (a(i, j) != 0) s += BigInt(static_cast<long>(a(i, j))) * v[j];
          w[i] = s;
        }
        v = std::move(w);
      }
    }
    std::vector<BigInt> next(r + 2);
    for (std::size_t k = 0; k < r + 2; ++k)
      for (std::size_t i = 0; i <= k && i < t.size(); ++i)
        if (k - i < desc.size()) next[k] += t[i] * desc[k - i];
    desc = std::move(next);
  }
  return IntPoly(desc.rbegin(), desc.rend());
}

IntPoly reversed_characteristic_polynomial(const IntMatrix& a) {
  IntPoly p = characteristic_polynomial(a);
  std::reverse(p.begin(), p.end());
  return p;
}

std::int64_t euler_phi(std::int64_t d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "Euler phi of a non-positive integer");
  std::int64_t result = d;
  for (std::int64_t q = 2; q * q <= d; ++q) {
    if (d % q != 0) continue;
    while (d % q == 0) d /= q;
    result -= result / q;
  }
  if (d > 1) result -= result / d;
  return result;
}

IntPoly cyclotomic_polynomial(std::int64_t d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "cyclotomic index must be positive");
  IntPoly p(static_cast<std::size_t>(d + 1));
  p[0] = -1;
  p[static_cast<std::size_t>(d)] = 1;
  for (std::int64_t e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    divide_exact(p, cyclotomic_polynomial(e));
  }
  return p;
}

CycloProfile::CycloProfile(Factors factors) {
  for (const auto& [d, e] : factors) {
    if (d < 1 || e < 0) throw Error(ErrorKind::InvalidArgument, "malformed cyclotomic profile");
    if (e > 0) factors_[d] = e;
  }
}

std::int64_t CycloProfile::multiplicity(std::int64_t d) const {
  auto it = factors_.find(d);
  return it == factors_.end() ? 0 : it->second;
}

std::int64_t CycloProfile::degree() const {
  std::int64_t total = 0;
  for (const auto& [d, e] : factors_) total += e * euler_phi(d);
  return total;
}

std::int64_t CycloProfile::order() const {
  std::int64_t result = 1;
  for (const auto& [d, e] : factors_) result = lcm64(result, d);
  return result;
}

CycloProfile CycloProfile::power(std::int64_t k) const {
  Factors out;
  for (const auto& [d, e] : factors_) {
    // The phi(d) primitive d-th roots land on primitive d'-th roots,
    // phi(d)/phi(d') of them on each.
    const std::int64_t dd = d / std::gcd(d, ((k % d) + d) % d);
    out[dd] += e * euler_phi(d) / euler_phi(dd);
  }
  return CycloProfile(std::move(out));
}

std::string CycloProfile::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [d, e] : factors_) {
    if (!s.empty()) s += ' ';
    s += "Phi" + std::to_string(d) + "^" + std::to_string(e);
  }
  return s;
}

CycloProfile CycloProfile::parse(const std::string& text) {
  Factors factors;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token == "1") continue;
    auto caret = token.find('^');
    if (token.rfind("Phi", 0) != 0 || caret == std::string::npos) {
      throw Error(ErrorKind::ParseError, "expected Phi<d>^<e>, got '" + token + "'");
    }
    try {
      std::size_t used = 0;
      std::int64_t d = std::stoll(token.substr(3, caret - 3), &used);
      if (used != caret - 3) throw std::invalid_argument("d");
      std::int64_t e = std::stoll(token.substr(caret + 1), &used);
      if (used != token.size() - caret - 1 || d < 1 || e < 1) throw std::invalid_argument("e");
      factors[d] += e;
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "malformed profile factor '" + token + "'");
    }
  }
  return CycloProfile(std::move(factors));
}

CycloProfile cyclotomic_factorization(const IntPoly& poly_in) {
  IntPoly poly = poly_in;
  trim(poly);
  if (poly.empty() || poly.back() != 1) throw Error(ErrorKind::InvalidArgument, "polynomial must be monic");
  CycloProfile::Factors factors;
  // phi(d) >= sqrt(d/2), so no cyclotomic factor of degree <= n has d > 2 n^2.
  const auto n = static_cast<std::int64_t>(poly.size() - 1);
  for (std::int64_t d = 1; poly.size() > 1 && d <= 2 * n * n + 2; ++d) {
    if (euler_phi(d) > static_cast<std::int64_t>(poly.size() - 1)) continue;
    const IntPoly phi = cyclotomic_polynomial(d);
    while (poly.size() >= phi.size() && divide_exact(poly, phi)) ++factors[d];
  }
  if (poly.size() != 1) {
    throw Error(ErrorKind::NonCyclotomicFactor,
                "a factor of degree " + std::to_string(poly.size() - 1) + " is not cyclotomic");
  }
  return CycloProfile(std::move(factors));
}

Isometry::Isometry(std::shared_ptr<const Lattice> lattice, IntMatrix m)
    : lattice_(std::move(lattice)),
      matrix_(std::move(m)),
      profile_(std::make_shared<const CycloProfile>(cyclotomic_factorization(characteristic_polynomial(matrix_)))) {}

Isometry verify_isometry(std::shared_ptr<const Lattice> lattice, IntMatrix m) {
  if (!lattice) throw Error(ErrorKind::InvalidArgument, "isometry needs a lattice");
  const std::size_t n = lattice->rank();
  if (m.rows() != n || m.cols() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", lattice rank is " + std::to_string(n));
  }
  if (!(checked_multiply(checked_multiply(m.transposed(), lattice->gram()), m) == lattice->gram())) {
    throw Error(ErrorKind::NotGramPreserving, "M^T G M differs from G");
  }
  const BigInt det = determinant(m);
  if (det != 1 && det != -1) throw Error(ErrorKind::NotUnimodular, "determinant is " + to_string(det));
  return Isometry(std::move(lattice), std::move(m));
}

Isometry Isometry::power(std::int64_t k) const {
  const std::int64_t ord = order();
  std::int64_t e = ((k % ord) + ord) % ord;
  return Isometry(lattice_, matrix_power(matrix_, e));
}

Isometry Isometry::compose(const Isometry& other) const {
  if (!(lattice_->gram() == other.lattice_->gram())) {
    throw Error(ErrorKind::DimensionMismatch, "isometries of different lattices");
  }
  return Isometry(lattice_, checked_multiply(matrix_, other.matrix_));
}

CycloProfile cyclotomic_profile(const Isometry& g) { return g.profile(); }

std::int64_t multiplicative_order(const Isometry& g) { return g.order(); }

std::vector<std::int64_t> eigenspace_dims(const Isometry& g, std::int64_t modulus) {
  if (modulus < 1) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
  if (modulus % g.order() != 0) {
    throw Error(ErrorKind::OrderDoesNotDivide,
                "order " + std::to_string(g.order()) + " does not divide " + std::to_string(modulus));
  }
  std::vector<std::int64_t> dims(static_cast<std::size_t>(modulus));
  for (std::int64_t j = 0; j < modulus; ++j) {
    // exp(-2 pi i j/m) is a primitive (m / gcd(j, m))-th root of unity
    const std::int64_t d = modulus / std::gcd(j, modulus);
    dims[static_cast<std::size_t>(j)] = g.profile().multiplicity(d);
  }
  return dims;
}

Isometry load_isometry(std::shared_ptr<const Lattice> lattice, const std::string& path) {
  MatrixFile file = read_matrix_file(path);
  auto it = file.metadata.find("lattice");
  if (it != file.metadata.end() && !lattice->label().empty() && it->second != lattice->label()) {
    throw Error(ErrorKind::InvalidArgument,
                path + " is written for lattice '" + it->second + "', not '" + lattice->label() + "'");
  }
  return verify_isometry(std::move(lattice), std::move(file.matrix));
}

Isometry replay_word(const std::vector<Isometry>& generators, const std::vector<std::size_t>& word,
                     std::int64_t exponent) {
  if (generators.empty()) throw Error(ErrorKind::InvalidArgument, "no generators");
  IntMatrix product = IntMatrix::identity(generators.front().lattice().rank());
  for (std::size_t letter : word) {
    if (letter >= generators.size()) throw Error(ErrorKind::InvalidArgument, "word letter out of range");
    product = checked_multiply(product, generators[letter].matrix());
  }
  return verify_isometry(generators.front().lattice_ptr(), std::move(product)).power(exponent);
}

SearchResult search_isometry(const std::vector<Isometry>& generators, const CycloProfile& target,
                             const SearchOptions& options) {
  if (generators.empty()) throw Error(ErrorKind::InvalidArgument, "no generators");
  for (const auto& g : generators)
    if (!(g.lattice().gram() == generators.front().lattice().gram())) {
      throw Error(ErrorKind::DimensionMismatch, "generators act on different lattices");
    }
  const std::size_t max_len = std::max<std::size_t>(1, options.max_word_length);
  const std::int64_t target_order = target.order();
  for (std::uint64_t attempt = 0; attempt < options.budget; ++attempt) {
    // Each attempt has its own stream, so a result never depends on how
    // many attempts ran before it.
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(attempt), static_cast<std::uint32_t>(attempt >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::size_t> length(1, max_len);
    std::uniform_int_distribution<std::size_t> letter(0, generators.size() - 1);
    std::vector<std::size_t> word(length(rng));
    for (auto& w : word) w = letter(rng);

    IntMatrix product = IntMatrix::identity(generators.front().lattice().rank());
    for (std::size_t l : word) product = checked_multiply(product, generators[l].matrix());
    const CycloProfile profile = cyclotomic_factorization(characteristic_polynomial(product));
    const std::int64_t order = profile.order();
    if (order % target_order != 0) continue;
    for (std::int64_t k = 1; k <= order; ++k) {
      if (order % k != 0 || !(profile.power(k) == target)) continue;
      Isometry found = verify_isometry(generators.front().lattice_ptr(), matrix_power(product, k));
      if (!(found.profile() == target)) {
        throw Error(ErrorKind::InvalidArgument, "derived power profile disagrees with direct computation");
      }
      return SearchResult{std::move(found), std::move(word), k, attempt};
    }
  }
  throw Error(ErrorKind::NotFound, "no word with profile " + target.to_string() + " among " + std::to_string(options.budget) +
                                       " attempts");
}

CycloProfile order_2p_target(std::int64_t p, std::int64_t rank) {
  if (p < 3 || euler_phi(p) != p - 1) throw Error(ErrorKind::InvalidArgument, "p must be an odd prime");
  if (rank % (p - 1) != 0) throw Error(ErrorKind::InvalidArgument, "p - 1 must divide the rank");
  return CycloProfile(CycloProfile::Factors{{2 * p, rank / (p - 1)}});
}

}  // namespace orbifoldry
