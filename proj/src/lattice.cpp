#include "orbifoldry/lattice.hpp"

#include <algorithm>
#include <mutex>
#include <utility>

#include "orbifoldry/enumerate.hpp"
#include "orbifoldry/modular.hpp"

namespace orbifoldry {

struct ThetaCache {
  std::mutex mutex;
  std::int64_t max_norm = -1;  // counts are complete through this norm
  NormCounts counts;
};

Lattice::Lattice(IntMatrix gram, std::string label, BigInt det)
    : gram_(std::move(gram)), label_(std::move(label)), det_(std::move(det)), theta_cache_(std::make_shared<ThetaCache>()) {}

Lattice Lattice::from_gram(IntMatrix gram, std::string label) {
  if (!gram.square()) throw Error(ErrorKind::DimensionMismatch, "Gram matrix must be square");
  const std::size_t n = gram.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram(i, j) != gram(j, i)) {
        throw Error(ErrorKind::NotSymmetric,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") differs from its transpose");
      }
  for (std::size_t i = 0; i < n; ++i)
    if (gram(i, i) % 2 != 0) throw Error(ErrorKind::NotEven, "diagonal entry " + std::to_string(i) + " is odd");
  const auto minors = leading_minors(to_big(gram));
  for (std::size_t k = 0; k < minors.size(); ++k)
    if (minors[k] <= 0) throw Error(ErrorKind::NotPositiveDefinite, "leading minor of size " + std::to_string(k + 1) + " is not positive");
  BigInt det = n == 0 ? BigInt(1) : minors.back();
  return Lattice(std::move(gram), std::move(label), std::move(det));
}

std::int64_t Lattice::inner(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const {
  if (a.size() != rank() || b.size() != rank()) throw Error(ErrorKind::DimensionMismatch, "vector length differs from lattice rank");
  __int128 total = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    __int128 row = 0;
    for (std::size_t j = 0; j < rank(); ++j) row += static_cast<__int128>(gram_(i, j)) * b[j];
    total += row * a[i];
  }
  if (total > INT64_MAX || total < INT64_MIN) throw Error(ErrorKind::InvalidArgument, "inner product overflows 64 bits");
  return static_cast<std::int64_t>(total);
}

Lattice load_lattice(std::string_view text, std::string label) {
  MatrixFile file = parse_matrix_text(text);
  if (label.empty()) {
    auto it = file.metadata.find("label");
    if (it != file.metadata.end()) label = it->second;
  }
  return Lattice::from_gram(std::move(file.matrix), std::move(label));
}

Lattice load_lattice_file(const std::string& path) {
  MatrixFile file = read_matrix_file(path);
  std::string label;
  auto it = file.metadata.find("label");
  if (it != file.metadata.end()) label = it->second;
  return Lattice::from_gram(std::move(file.matrix), std::move(label));
}

namespace {

void swap_rows(BigMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(BigMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_target += factor * row_source
void add_row(BigMatrix& m, std::size_t target, std::size_t source, const BigInt& factor) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += factor * m(source, j);
}

void add_col(BigMatrix& m, std::size_t target, std::size_t source, const BigInt& factor) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) += factor * m(i, source);
}

BigInt floor_quotient(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const BigMatrix& input) {
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  BigMatrix a = input;
  BigMatrix left = BigMatrix::identity(rows);
  BigMatrix right = BigMatrix::identity(cols);
  const std::size_t diag = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < diag; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pi == rows || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      swap_rows(a, t, pi);
      swap_rows(left, t, pi);
      swap_cols(a, t, pj);
      swap_cols(right, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        BigInt q = -floor_quotient(a(i, t), a(t, t));
        add_row(a, i, t, q);
        add_row(left, i, t, q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        BigInt q = -floor_quotient(a(t, j), a(t, t));
        add_col(a, j, t, q);
        add_col(right, j, t, q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce the divisibility chain: fold an offending row into row t.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      add_row(a, t, bad, BigInt(1));
      add_row(left, t, bad, BigInt(1));
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < rows; ++j) left(t, j) = -left(t, j);
    }
  }
  SmithForm out;
  for (std::size_t i = 0; i < diag; ++i) out.invariants.push_back(a(i, i));
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

std::vector<BigInt> quotient_invariants(const Lattice& lattice, const IntMatrix& m) {
  if (m.rows() != lattice.rank() || m.cols() != lattice.rank()) {
    throw Error(ErrorKind::DimensionMismatch, "matrix size differs from lattice rank");
  }
  if (determinant(m) == 0) throw Error(ErrorKind::SingularMatrix, "quotient by a singular map is infinite");
  std::vector<BigInt> out;
  for (auto& d : smith_normal_form(m).invariants)
    if (d > 1) out.push_back(d);
  return out;
}

namespace {

NormCounts run_enumeration(const Lattice& lattice, std::int64_t max_norm, const EnumerationOptions& options) {
  const auto plan = kernels::make_plan(lattice.gram(), max_norm);
  const auto result = kernels::enumerate_fast(plan, options.node_budget, options.parallel);
  if (result.budget_exceeded) {
    throw Error(ErrorKind::BudgetExceeded,
                "enumeration to norm " + std::to_string(max_norm) + " needs more than " + std::to_string(options.node_budget) +
                    " nodes");
  }
  NormCounts counts;
  for (std::size_t k = 0; k < result.counts.size(); ++k) counts[static_cast<std::int64_t>(2 * k)] = result.counts[k];
  return counts;
}

}  // namespace

NormCounts enumerate_vectors_by_norm(const Lattice& lattice, std::int64_t max_norm, const EnumerationOptions& options) {
  if (max_norm < 0) throw Error(ErrorKind::InvalidArgument, "max_norm must be nonnegative");
  const std::int64_t even_max = max_norm - max_norm % 2;
  ThetaCache& cache = lattice.theta_cache();
  std::lock_guard lock(cache.mutex);
  if (cache.max_norm < even_max) {
    cache.counts = run_enumeration(lattice, even_max, options);
    cache.max_norm = even_max;
  }
  NormCounts out;
  for (const auto& [norm, count] : cache.counts)
    if (norm <= even_max) out[norm] = count;
  return out;
}

std::int64_t minimal_norm(const Lattice& lattice, const EnumerationOptions& options) {
  if (lattice.rank() == 0) throw Error(ErrorKind::InvalidArgument, "the zero lattice has no nonzero vectors");
  std::int64_t bound = lattice.gram()(0, 0);
  for (std::size_t i = 1; i < lattice.rank(); ++i) bound = std::min(bound, lattice.gram()(i, i));
  // Every basis vector is a candidate, so the minimum is at most `bound`.
  for (std::int64_t norm = 2; norm <= bound; norm += 2) {
    auto counts = enumerate_vectors_by_norm(lattice, norm, options);
    if (counts[norm] > 0) return norm;
  }
  return bound;
}

FracSeries theta_series(const Lattice& lattice, const Rational& cutoff, const EnumerationOptions& options) {
  if (cutoff < 0) throw Error(ErrorKind::InvalidArgument, "theta cutoff must be nonnegative");
  const std::int64_t top_weight = to_int64(floor(cutoff));
  auto counts = enumerate_vectors_by_norm(lattice, 2 * top_weight, options);
  std::map<std::int64_t, Rational> terms;
  // Keep the caller's cutoff exactly: grain = its denominator.
  const std::int64_t grain = to_int64(cutoff.get_den());
  for (const auto& [norm, count] : counts) terms[norm / 2 * grain] = Rational(BigInt(std::to_string(count)));
  return FracSeries(grain, to_int64(cutoff.get_num()), std::move(terms));
}

FracSeries lattice_theta(const Lattice& lattice, const Rational& cutoff, const ThetaOptions& options) {
  if (options.source == ThetaSource::Enumeration) return theta_series(lattice, cutoff, options.enumeration);
  if (lattice.rank() != 24 || lattice.determinant() != 1) {
    throw Error(ErrorKind::InvalidArgument, "the modular identity needs an even unimodular lattice of rank 24");
  }
  if (cutoff < 0) throw Error(ErrorKind::InvalidArgument, "theta cutoff must be nonnegative");
  const std::uint64_t roots = enumerate_vectors_by_norm(lattice, 2, options.enumeration).at(2);
  return rank24_unimodular_theta(roots, cutoff);
}

std::string to_string(ThetaSource source) {
  return source == ThetaSource::Enumeration ? "enumeration" : "modular";
}

ThetaSource parse_theta_source(std::string_view text) {
  if (text == "enumeration") return ThetaSource::Enumeration;
  if (text == "modular") return ThetaSource::ModularIdentity;
  throw Error(ErrorKind::ParseError, "theta source must be 'enumeration' or 'modular', got '" + std::string(text) + "'");
}

}  // namespace orbifoldry
