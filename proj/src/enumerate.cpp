#include "orbifoldry/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#ifdef ORBIFOLDRY_HAVE_OPENMP
#include <omp.h>
#endif

#include "orbifoldry/errors.hpp"
#include "orbifoldry/rational.hpp"

namespace orbifoldry::kernels {

namespace {

constexpr std::int64_t kMagnitudeLimit = std::int64_t{1} << 61;

std::int64_t isqrt(std::int64_t v) {
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (s > 0 && s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

struct Range {
  std::int64_t lo;
  std::int64_t hi;
  std::int64_t b;
  std::int64_t c;
};

// Admissible x_i given b_i and E_{i+1}; empty when lo > hi.
inline Range level_range(const EnumerationPlan& plan, std::size_t i, std::int64_t b, std::int64_t e_above) {
  const std::int64_t a = plan.minors[i + 1];
  const std::int64_t c = (b * b + plan.minors[i] * e_above) / a;
  const std::int64_t bound = plan.minors[i] * plan.max_norm;
  // (a x + b)^2 <= b^2 - a (c - bound)
  const std::int64_t disc = b * b - a * (c - bound);
  if (disc < 0) return {1, 0, b, c};
  const std::int64_t s = isqrt(disc);
  return {ceil_div(-s - b, a), floor_div(s - b, a), b, c};
}

inline std::int64_t level_value(const EnumerationPlan& plan, std::size_t i, const Range& r, std::int64_t x) {
  return plan.minors[i + 1] * x * x + 2 * r.b * x + r.c;
}

class ReferenceSearch {
 public:
  ReferenceSearch(const EnumerationPlan& plan, std::uint64_t budget)
      : plan_(plan), budget_(budget), x_(plan.rank, 0) {
    result_.counts.assign(static_cast<std::size_t>(plan.max_norm / 2 + 1), 0);
  }

  EnumerationResult run() {
    if (plan_.rank == 0) {
      result_.counts[0] = 1;
      return result_;
    }
    descend(plan_.rank - 1, 0);
    return result_;
  }

 private:
  void descend(std::size_t i, std::int64_t e_above) {
    if (result_.budget_exceeded) return;
    std::int64_t b = 0;
    for (std::size_t j = i + 1; j < plan_.rank; ++j) b += plan_.row[i][j] * x_[j];
    Range r = level_range(plan_, i, b, e_above);
    for (std::int64_t x = r.lo; x <= r.hi; ++x) {
      x_[i] = x;
      const std::int64_t e = level_value(plan_, i, r, x);
      if (i == 0) {
        ++result_.counts[static_cast<std::size_t>(e / 2)];
        continue;
      }
      if (++result_.nodes > budget_) {
        result_.budget_exceeded = true;
        return;
      }
      descend(i - 1, e);
    }
    x_[i] = 0;
  }

  const EnumerationPlan& plan_;
  std::uint64_t budget_;
  std::vector<std::int64_t> x_;
  EnumerationResult result_;
};

// Depth-first search below a fixed prefix. Partial centers are cached per
// row: sums_[i][j] = sum_{k >= j} row[i][k] x_k, refreshed from stale_[i]
// downwards whenever level i is entered.
class FastSearch {
 public:
  FastSearch(const EnumerationPlan& plan, std::uint64_t budget, std::vector<std::uint64_t>& counts)
      : plan_(plan),
        n_(plan.rank),
        budget_(budget),
        counts_(counts),
        x_(n_, 0),
        e_(n_ + 1, 0),
        stale_(n_, 0),
        top_zero_(n_ + 1, true),
        sums_(n_, std::vector<std::int64_t>(n_ + 1, 0)) {}

  // Enumerate every vector extending x_{n-1..depth} = prefix (prefix[0] is the
  // outermost coordinate). Returns the number of interior nodes visited.
  std::uint64_t run_below(const std::vector<std::int64_t>& prefix) {
    nodes_ = 0;
    exceeded_ = false;
    std::size_t depth = n_ - prefix.size();
    std::fill(x_.begin(), x_.end(), 0);
    for (std::size_t i = 0; i < n_; ++i) stale_[i] = n_ - 1;
    e_[n_] = 0;
    top_zero_[n_] = true;
    for (std::size_t t = 0; t < prefix.size(); ++t) {
      const std::size_t i = n_ - 1 - t;
      const std::int64_t b = center(i);
      Range r = level_range(plan_, i, b, e_[i + 1]);
      x_[i] = prefix[t];
      if (i > 0) stale_[i - 1] = std::max(stale_[i - 1], i);
      e_[i] = level_value(plan_, i, r, x_[i]);
      top_zero_[i] = top_zero_[i + 1] && x_[i] == 0;
    }
    if (depth == 0) {
      // a complete vector: the prefix itself
      if (!top_zero_[0]) counts_[static_cast<std::size_t>(e_[0] / 2)] += 2;
      return 0;
    }
    descend(depth - 1);
    return nodes_;
  }

  bool exceeded() const noexcept { return exceeded_; }

  // Collect all admissible prefixes of the top `levels` coordinates.
  void collect_prefixes(std::size_t levels, std::vector<std::vector<std::int64_t>>& out) {
    std::fill(x_.begin(), x_.end(), 0);
    for (std::size_t i = 0; i < n_; ++i) stale_[i] = n_ - 1;
    e_[n_] = 0;
    top_zero_[n_] = true;
    std::vector<std::int64_t> prefix;
    collect(n_ - 1, levels, prefix, out);
  }

 private:
  std::int64_t center(std::size_t i) {
    auto& s = sums_[i];
    for (std::size_t j = stale_[i]; j > i; --j) s[j] = s[j + 1] + plan_.row[i][j] * x_[j];
    if (i > 0) stale_[i - 1] = std::max(stale_[i - 1], stale_[i]);
    stale_[i] = i;
    return s[i + 1];
  }

  Range admissible(std::size_t i) {
    Range r = level_range(plan_, i, center(i), e_[i + 1]);
    if (top_zero_[i + 1]) r.lo = std::max<std::int64_t>(r.lo, i == 0 ? 1 : 0);
    return r;
  }

  void collect(std::size_t i, std::size_t levels, std::vector<std::int64_t>& prefix,
               std::vector<std::vector<std::int64_t>>& out) {
    Range r = admissible(i);
    for (std::int64_t x = r.lo; x <= r.hi; ++x) {
      x_[i] = x;
      if (i > 0) stale_[i - 1] = std::max(stale_[i - 1], i);
      e_[i] = level_value(plan_, i, r, x);
      top_zero_[i] = top_zero_[i + 1] && x == 0;
      prefix.push_back(x);
      if (levels == 1 || i == 0) {
        out.push_back(prefix);
      } else {
        collect(i - 1, levels - 1, prefix, out);
      }
      prefix.pop_back();
    }
    x_[i] = 0;
    if (i > 0) stale_[i - 1] = std::max(stale_[i - 1], i);
  }

  void descend(std::size_t i) {
    Range r = admissible(i);
    if (i == 0) {
      const std::int64_t a = plan_.minors[1];
      for (std::int64_t x = r.lo; x <= r.hi; ++x) {
        const std::int64_t norm = a * x * x + 2 * r.b * x + r.c;
        counts_[static_cast<std::size_t>(norm / 2)] += 2;
      }
      return;
    }
    for (std::int64_t x = r.lo; x <= r.hi; ++x) {
      x_[i] = x;
      stale_[i - 1] = std::max(stale_[i - 1], i);
      e_[i] = level_value(plan_, i, r, x);
      top_zero_[i] = top_zero_[i + 1] && x == 0;
      if (++nodes_ > budget_) {
        exceeded_ = true;
        break;
      }
      descend(i - 1);
      if (exceeded_) break;
    }
    x_[i] = 0;
    stale_[i - 1] = std::max(stale_[i - 1], i);
  }

  const EnumerationPlan& plan_;
  std::size_t n_;
  std::uint64_t budget_;
  std::vector<std::uint64_t>& counts_;
  std::vector<std::int64_t> x_;
  std::vector<std::int64_t> e_;
  std::vector<std::size_t> stale_;
  std::vector<bool> top_zero_;
  std::vector<std::vector<std::int64_t>> sums_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
};

}  // namespace

EnumerationPlan make_plan(const IntMatrix& gram, std::int64_t max_norm) {
  if (!gram.square()) throw Error(ErrorKind::DimensionMismatch, "Gram matrix must be square");
  if (max_norm < 0) throw Error(ErrorKind::InvalidArgument, "max_norm must be nonnegative");
  const std::size_t n = gram.rows();
  EnumerationPlan plan;
  plan.rank = n;
  plan.max_norm = max_norm;
  plan.minors.assign(n + 1, 1);
  plan.row.assign(n, std::vector<std::int64_t>(n + 1, 0));

  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(BigInt(static_cast<long>(gram(i, j))));

  std::vector<BigInt> minors(n + 1, 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] <= 0) throw Error(ErrorKind::NotPositiveDefinite, "leading minor " + std::to_string(i + 1) + " is not positive");
    Rational next = a[i][i] * Rational(minors[i]);
    if (!is_integer(next)) throw Error(ErrorKind::InvalidArgument, "non-integral leading minor");
    minors[i + 1] = next.get_num();
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational scaled = a[i][j] * Rational(minors[i]);
      if (!is_integer(scaled)) throw Error(ErrorKind::InvalidArgument, "non-integral scaled Schur complement");
      plan.row[i][j] = to_int64(scaled.get_num());
    }
    for (std::size_t r = i + 1; r < n; ++r) {
      if (a[r][i] == 0) continue;
      Rational f = a[r][i] / a[i][i];
      for (std::size_t c = i + 1; c < n; ++c) a[r][c] -= f * a[i][c];
    }
  }
  for (std::size_t i = 0; i <= n; ++i) plan.minors[i] = to_int64(minors[i]);

  // Coefficient bound |x_j| <= sqrt(N (G^-1)_jj), then check every quantity
  // the kernels form stays far from 64-bit overflow.
  BigMatrix big = to_big(gram);
  std::vector<long double> coeff_bound(n, 0);
  if (n > 0) {
    // (G^-1)_jj = det(G with row/col j removed) / det(G)
    const BigInt det = minors[n];
    for (std::size_t j = 0; j < n; ++j) {
      BigMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = big(r, c);
        }
        ++rr;
      }
      long double inv_jj = determinant(minor).get_d() / det.get_d();
      coeff_bound[j] = std::floor(std::sqrt(static_cast<long double>(max_norm) * inv_jj)) + 1;
    }
  }
  const auto limit = static_cast<long double>(kMagnitudeLimit);
  for (std::size_t i = 0; i < n; ++i) {
    long double bmax = 0;
    for (std::size_t j = i + 1; j < n; ++j) bmax += std::fabs(static_cast<long double>(plan.row[i][j])) * coeff_bound[j];
    long double d0 = plan.minors[i], d1 = plan.minors[i + 1];
    long double worst = bmax * bmax + d0 * d1 * static_cast<long double>(max_norm) * 4 +
                        d1 * coeff_bound[i] * coeff_bound[i] + 2 * bmax * coeff_bound[i];
    if (worst >= limit) {
      throw Error(ErrorKind::InvalidArgument, "enumeration magnitudes exceed 64-bit range at level " + std::to_string(i));
    }
  }
  return plan;
}

EnumerationResult enumerate_reference(const EnumerationPlan& plan, std::uint64_t node_budget) {
  return ReferenceSearch(plan, node_budget).run();
}

EnumerationResult enumerate_fast(const EnumerationPlan& plan, std::uint64_t node_budget, bool parallel) {
  EnumerationResult result;
  result.counts.assign(static_cast<std::size_t>(plan.max_norm / 2 + 1), 0);
  result.counts[0] = 1;
  if (plan.rank == 0) return result;

  // Split the top of the tree until there are enough independent prefixes.
  std::vector<std::vector<std::int64_t>> prefixes;
  {
    std::vector<std::uint64_t> scratch(result.counts.size(), 0);
    FastSearch splitter(plan, node_budget, scratch);
    std::size_t levels = 1;
    for (;;) {
      prefixes.clear();
      splitter.collect_prefixes(levels, prefixes);
      if (prefixes.size() >= 256 || levels >= std::min<std::size_t>(plan.rank, 6)) break;
      ++levels;
    }
  }

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exceeded{false};
  const auto count = static_cast<std::int64_t>(prefixes.size());

#ifdef ORBIFOLDRY_HAVE_OPENMP
#pragma omp parallel if (parallel)
#endif
  {
    std::vector<std::uint64_t> local(result.counts.size(), 0);
    FastSearch search(plan, node_budget, local);
#ifdef ORBIFOLDRY_HAVE_OPENMP
#pragma omp for schedule(dynamic, 1)
#endif
    for (std::int64_t k = 0; k < count; ++k) {
      if (exceeded.load(std::memory_order_relaxed)) continue;
      std::uint64_t used = search.run_below(prefixes[static_cast<std::size_t>(k)]);
      std::uint64_t total = nodes.fetch_add(used, std::memory_order_relaxed) + used;
      if (search.exceeded() || total > node_budget) exceeded.store(true, std::memory_order_relaxed);
    }
#ifdef ORBIFOLDRY_HAVE_OPENMP
#pragma omp critical
#endif
    for (std::size_t i = 0; i < local.size(); ++i) result.counts[i] += local[i];
  }
  (void)parallel;
  result.nodes = nodes.load();
  result.budget_exceeded = exceeded.load();
  return result;
}

}  // namespace orbifoldry::kernels
