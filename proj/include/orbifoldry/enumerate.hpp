#pragma once

#include <cstdint>
#include <vector>

#include "orbifoldry/matrix.hpp"

// Fincke-Pohst enumeration kept entirely in 64-bit integers.
//
// With Delta_i the leading principal minors of the Gram matrix and S_i the
// Schur complement of its leading i x i block, Delta_i * S_i is an integer
// matrix. Writing E_i = Delta_i * (minimum of the norm over the free
// coordinates x_0..x_{i-1}), one level of the tree reads
//
//   E_i = Delta_{i+1} x_i^2 + 2 b_i x_i + c_i,
//   c_i = (b_i^2 + Delta_i E_{i+1}) / Delta_{i+1}     (exact division),
//
// with b_i = sum_{j>i} (Delta_i S_i)_{ij} x_j, and the pruning test
// E_i <= Delta_i * max_norm is exact. E_0 is the norm itself.
namespace orbifoldry::kernels {

struct EnumerationPlan {
  std::size_t rank = 0;
  std::int64_t max_norm = 0;
  std::vector<std::int64_t> minors;            // Delta_0 .. Delta_n, Delta_0 = 1
  std::vector<std::vector<std::int64_t>> row;  // row[i][j] = (Delta_i S_i)_{ij}, j > i
};

struct EnumerationResult {
  std::vector<std::uint64_t> counts;  // counts[k] = vectors of norm 2k
  std::uint64_t nodes = 0;
  bool budget_exceeded = false;
};

// Throws InvalidArgument if the magnitudes could overflow 64-bit arithmetic.
EnumerationPlan make_plan(const IntMatrix& gram, std::int64_t max_norm);

// Plain depth-first search over the whole space, one vector at a time.
EnumerationResult enumerate_reference(const EnumerationPlan& plan, std::uint64_t node_budget);

// Half-space search (v and -v counted together) with cached partial centers;
// the top of the tree is split into independent prefixes run under OpenMP.
EnumerationResult enumerate_fast(const EnumerationPlan& plan, std::uint64_t node_budget, bool parallel);

}  // namespace orbifoldry::kernels
