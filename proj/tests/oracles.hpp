#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library's enumeration, series or factorization code.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Gram = std::vector<std::vector<std::int64_t>>;

inline std::int64_t norm(const Gram& g, const std::vector<std::int64_t>& x) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) total += x[i] * g[i][j] * x[j];
  return total;
}

// Vectors of each norm <= max_norm, found by scanning the box
// |x_j| <= sqrt(max_norm * (G^-1)_jj) (floating bound, widened by one).
inline std::map<std::int64_t, std::uint64_t> box_counts(const Gram& g, std::int64_t max_norm) {
  const std::size_t n = g.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(2 * n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<double>(g[i][j]);
    a[i][n + i] = 1.0;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    const double d = a[c][c];
    for (auto& v : a[c]) v /= d;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<std::int64_t> bound(n);
  for (std::size_t j = 0; j < n; ++j) bound[j] = static_cast<std::int64_t>(std::sqrt(max_norm * a[j][n + j])) + 1;
  std::map<std::int64_t, std::uint64_t> counts;
  std::vector<std::int64_t> x(n);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) {
      const std::int64_t v = norm(g, x);
      if (v <= max_norm) ++counts[v];
      return;
    }
    for (std::int64_t t = -bound[k]; t <= bound[k]; ++t) {
      x[k] = t;
      rec(k + 1);
    }
  };
  rec(0);
  return counts;
}

// Cofactor-expansion determinant.
inline mpz_class small_det(const std::vector<std::vector<mpz_class>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpz_class total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<mpz_class>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<mpz_class> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      sub.push_back(row);
    }
    mpz_class term = m[0][c] * small_det(sub);
    total += (c % 2 == 0) ? term : mpz_class(-term);
  }
  return total;
}

// Random even positive definite Gram matrix B^T E B, with E a sum of A2
// blocks [[2,-1],[-1,2]] (and a final [2] for odd rank) and B a random
// nonsingular integer matrix. v^T E v is even, so the result is even.
inline Gram random_even_gram(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> entry(-1, 1);
  Gram e(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) e[i][i] = 2;
  for (std::size_t i = 0; i + 1 < n; i += 2) e[i][i + 1] = e[i + 1][i] = -1;
  for (;;) {
    Gram b(n, std::vector<std::int64_t>(n));
    for (auto& row : b)
      for (auto& v : row) v = entry(rng);
    for (std::size_t i = 0; i < n; ++i) b[i][i] += 2;
    std::vector<std::vector<mpz_class>> bm(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) bm[i][j] = static_cast<long>(b[i][j]);
    if (small_det(bm) == 0) continue;
    Gram g(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) g[i][j] += b[k][i] * e[k][l] * b[l][j];
    return g;
  }
}

// Determinantal-divisor oracle for Smith invariants: d_k = D_k / D_{k-1},
// D_k = gcd of all k x k minors. Exponential, for small matrices only.
inline std::vector<mpz_class> determinantal_invariants(const std::vector<std::vector<std::int64_t>>& a) {
  const std::size_t n = a.size();
  std::vector<mpz_class> big_d{mpz_class(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    mpz_class g = 0;
    std::vector<std::size_t> rows(k), cols(k);
    std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&, std::function<void()>)> choose =
        [&](std::size_t start, std::size_t depth, std::vector<std::size_t>& pick, std::function<void()> done) {
          if (depth == k) {
            done();
            return;
          }
          for (std::size_t s = start; s < n; ++s) {
            pick[depth] = s;
            choose(s + 1, depth + 1, pick, done);
          }
        };
    choose(0, 0, rows, [&] {
      choose(0, 0, cols, [&] {
        std::vector<std::vector<mpz_class>> sub(k, std::vector<mpz_class>(k));
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < k; ++c) sub[r][c] = static_cast<long>(a[rows[r]][cols[c]]);
        mpz_class d = abs(small_det(sub));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    big_d.push_back(g);
  }
  std::vector<mpz_class> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back(big_d[k - 1] == 0 ? mpz_class(0) : mpz_class(big_d[k] / big_d[k - 1]));
  return out;
}

// Number of multisets of modes by total weight, in units of a common
// denominator: each (w, mult) stands for `mult` distinct modes of weight w,
// each usable any number of times. Dense up to `top`.
inline std::vector<mpz_class> bosonic_counts(const std::vector<std::pair<std::int64_t, std::int64_t>>& modes_in, std::int64_t top) {
  std::vector<mpz_class> ways(static_cast<std::size_t>(top + 1), 0);
  ways[0] = 1;
  for (const auto& [w, mult] : modes_in) {
    for (std::int64_t copy = 0; copy < mult; ++copy) {
      for (std::int64_t t = top; t >= 0; --t) {
        mpz_class acc = 0;
        for (std::int64_t used = 1; used * w <= t; ++used) acc += ways[static_cast<std::size_t>(t - used * w)];
        ways[static_cast<std::size_t>(t)] += acc;
      }
    }
  }
  return ways;
}

// Fermionic Fock space brute force: subsets of the distinct modes n + 1/2
// (n >= 0), counted by total weight (in units of 1/2) and parity of size.
struct FermionCounts {
  std::map<std::int64_t, std::int64_t> even, odd;  // key = 2 * weight
};
inline FermionCounts fermion_subsets(std::int64_t max_twice_weight) {
  FermionCounts out;
  std::vector<std::int64_t> modes;  // 2 * (n + 1/2) = 2n + 1
  for (std::int64_t m = 1; m <= max_twice_weight; m += 2) modes.push_back(m);
  std::function<void(std::size_t, std::int64_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t weight, std::int64_t size) {
    if (k == modes.size()) {
      (size % 2 == 0 ? out.even : out.odd)[weight] += 1;
      return;
    }
    rec(k + 1, weight, size);
    if (weight + modes[k] <= max_twice_weight) rec(k + 1, weight + modes[k], size + 1);
  };
  rec(0, 0, 0);
  return out;
}

// Partitions of n into distinct positive parts.
inline std::int64_t distinct_partitions(std::int64_t n, std::int64_t smallest = 1) {
  if (n == 0) return 1;
  std::int64_t total = 0;
  for (std::int64_t part = smallest; part <= n; ++part) total += distinct_partitions(n - part, part + 1);
  return total;
}

// Weight-graded Moonshine character coefficients c_0..c_top: coefficient of
// q^{w-1} in j - 744, with j = 1728 E4^3 / (E4^3 - E6^2).
inline std::vector<mpz_class> moonshine_coefficients(std::int64_t top) {
  const std::int64_t len = top + 3;
  auto sigma = [](std::int64_t n, unsigned k) {
    mpz_class s = 0;
    for (std::int64_t d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), k);
      s += p;
    }
    return s;
  };
  std::vector<mpz_class> e4(len), e6(len);
  e4[0] = 1;
  e6[0] = 1;
  for (std::int64_t n = 1; n < len; ++n) {
    e4[n] = 240 * sigma(n, 3);
    e6[n] = -504 * sigma(n, 5);
  }
  auto mul = [&](const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::vector<mpz_class> c(len, 0);
    for (std::int64_t i = 0; i < len; ++i)
      for (std::int64_t j = 0; i + j < len; ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  const auto e4c = mul(mul(e4, e4), e4);
  const auto e6s = mul(e6, e6);
  // 1728 Delta = E4^3 - E6^2 = 1728 q (1 + ...); d[k] = coefficient of q^{k+1} / 1728
  std::vector<mpz_class> d(len, 0);
  for (std::int64_t k = 0; k + 1 < len; ++k) d[k] = mpz_class(e4c[k + 1] - e6s[k + 1]) / 1728;
  // j * q = E4^3 / d; series division, d[0] = 1
  std::vector<mpz_class> jq(len, 0);
  for (std::int64_t k = 0; k < len; ++k) {
    mpz_class acc = e4c[k];
    for (std::int64_t t = 1; t <= k; ++t) acc -= d[t] * jq[k - t];
    jq[k] = acc / d[0];
  }
  // weight w coefficient = coefficient of q^{w-1} in j - 744 = jq[w] (minus 744 at w = 1)
  std::vector<mpz_class> out(static_cast<std::size_t>(top + 1));
  for (std::int64_t w = 0; w <= top; ++w) out[w] = jq[w] - (w == 1 ? 744 : 0);
  return out;
}

}  // namespace oracle
