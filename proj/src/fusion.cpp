#include "orbifoldry/fusion.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

namespace orbifoldry {

namespace {

std::int64_t reduce(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

using Members = std::vector<bool>;  // indexed by i * n + j

Members cyclic(std::int64_t n, std::int64_t i, std::int64_t j) {
  Members out(static_cast<std::size_t>(n * n), false);
  std::int64_t a = 0, b = 0;
  do {
    out[static_cast<std::size_t>(a * n + b)] = true;
    a = (a + i) % n;
    b = (b + j) % n;
  } while (a != 0 || b != 0);
  return out;
}

Members join(std::int64_t n, const Members& x, const Members& y) {
  Members out(x.size(), false);
  for (std::size_t u = 0; u < x.size(); ++u) {
    if (!x[u]) continue;
    const auto ui = static_cast<std::int64_t>(u) / n, uj = static_cast<std::int64_t>(u) % n;
    for (std::size_t v = 0; v < y.size(); ++v) {
      if (!y[v]) continue;
      const auto vi = static_cast<std::int64_t>(v) / n, vj = static_cast<std::int64_t>(v) % n;
      out[static_cast<std::size_t>(((ui + vi) % n) * n + (uj + vj) % n)] = true;
    }
  }
  return out;
}

bool contains(const Members& big, const Members& small) {
  for (std::size_t u = 0; u < small.size(); ++u)
    if (small[u] && !big[u]) return false;
  return true;
}

}  // namespace

FusionLabel FusionLabel::make(std::int64_t i, std::int64_t j, std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "fusion modulus must be positive");
  return FusionLabel{reduce(i, n), reduce(j, n), n};
}

Rational QuadSpace::q(const FusionLabel& a) const {
  if (a.n != n) throw Error(ErrorKind::MismatchedModulus, "label modulus differs from the space");
  return make_rational(reduce(a.i * a.j, n), n);
}

Rational QuadSpace::bilinear(const FusionLabel& a, const FusionLabel& c) const {
  Rational value = q(fusion_product(a, c)) - q(a) - q(c);
  return frac(value);
}

Rational q_delta(const FusionLabel& a) { return QuadSpace{a.n}.q(a); }

FusionLabel fusion_product(const FusionLabel& a, const FusionLabel& b) {
  if (a.n != b.n) {
    throw Error(ErrorKind::MismatchedModulus, "labels mod " + std::to_string(a.n) + " and mod " + std::to_string(b.n));
  }
  return FusionLabel::make(a.i + b.i, a.j + b.j, a.n);
}

std::vector<IsotropicSubgroup> maximal_isotropic_subgroups(const QuadSpace& space) {
  const std::int64_t n = space.n;
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
  if (n > kMaxFusionModulus) {
    throw Error(ErrorKind::ModulusTooLarge, "n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxFusionModulus));
  }
  // Every subgroup of Z_n^2 is generated by at most two elements, so the
  // subgroups are the cyclic ones and the joins of two cyclic ones.
  struct Candidate {
    Members members;
    std::vector<FusionLabel> generators;
  };
  std::map<Members, std::vector<FusionLabel>> cyclics;
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j) cyclics.try_emplace(cyclic(n, i, j), std::vector<FusionLabel>{FusionLabel{i, j, n}});

  auto isotropic = [&](const Members& m) {
    for (std::size_t u = 0; u < m.size(); ++u)
      if (m[u] && (static_cast<std::int64_t>(u) / n) * (static_cast<std::int64_t>(u) % n) % n != 0) return false;
    return true;
  };

  std::vector<std::pair<Members, std::vector<FusionLabel>>> iso_cyclic;
  for (const auto& [members, gens] : cyclics)
    if (isotropic(members)) iso_cyclic.emplace_back(members, gens);

  // A subgroup is isotropic only if its cyclic subgroups are.
  std::map<Members, std::vector<FusionLabel>> subgroups(iso_cyclic.begin(), iso_cyclic.end());
  for (std::size_t a = 0; a < iso_cyclic.size(); ++a) {
    for (std::size_t b = a + 1; b < iso_cyclic.size(); ++b) {
      Members joined = join(n, iso_cyclic[a].first, iso_cyclic[b].first);
      if (subgroups.count(joined) || !isotropic(joined)) continue;
      subgroups.emplace(std::move(joined), std::vector<FusionLabel>{iso_cyclic[a].second[0], iso_cyclic[b].second[0]});
    }
  }

  std::vector<IsotropicSubgroup> out;
  for (const auto& [members, gens] : subgroups) {
    bool maximal = true;
    for (const auto& [other, unused] : subgroups) {
      if (other != members && contains(other, members)) {
        maximal = false;
        break;
      }
    }
    if (!maximal) continue;
    IsotropicSubgroup h;
    h.generators = gens;
    for (std::size_t u = 0; u < members.size(); ++u)
      if (members[u]) h.elements.push_back(FusionLabel{static_cast<std::int64_t>(u) / n, static_cast<std::int64_t>(u) % n, n});
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const IsotropicSubgroup& x, const IsotropicSubgroup& y) { return x.elements < y.elements; });
  return out;
}

std::set<std::int64_t> integral_weight_labels(const QuadSpace& space, std::int64_t i) {
  std::set<std::int64_t> out;
  for (std::int64_t j = 0; j < space.n; ++j)
    if (reduce(i, space.n) * j % space.n == 0) out.insert(j);
  return out;
}

FracSeries orbifold_character(const Isometry& g, std::int64_t n, const Rational& cutoff, const ThetaOptions& options) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "orbifold order must be positive");
  if (n % g.order() != 0) {
    throw Error(ErrorKind::OrderDoesNotDivide,
                "order " + std::to_string(g.order()) + " does not divide " + std::to_string(n));
  }
  const QuadSpace space{n};
  for (std::int64_t i = 1; i < n; ++i) {
    const auto labels = integral_weight_labels(space, i);
    if (labels.size() != 1) {
      throw Error(ErrorKind::NotSeparable, "the g^" + std::to_string(i) + "-twisted sector has " + std::to_string(labels.size()) +
                                               " modules of integral weight");
    }
  }
  if (n > 1) {
    const Rational rho = conformal_weight(eigenspace_dims(g, n), n);
    if (!is_integer(rho * n)) {
      throw Error(ErrorKind::WeightHypothesisFailed,
                  "conformal weight " + to_string(rho) + " of the g-twisted sector is not in (1/" + std::to_string(n) + ")Z");
    }
  }
  std::vector<SectorInvariants> sectors;
  for (std::int64_t i = 1; i < n; ++i) sectors.emplace_back(g, i, n);
  FracSeries total = eigencomponent_character(g, n, 0, cutoff, options);
  for (const auto& s : sectors) total = total + extract_weight_class(s.character(cutoff), Rational(0));
  return total;
}

WeightOneCount twisted_weight_one_dimension(const Isometry& g, std::int64_t p, const ThetaOptions& options) {
  const std::int64_t n = 2 * p;
  if (g.order() != n) {
    throw Error(ErrorKind::InvalidArgument, "expected an element of order " + std::to_string(n) + ", got order " + std::to_string(g.order()));
  }
  const QuadSpace space{n};
  const Rational one(1);
  WeightOneCount out;
  out.untwisted = eigencomponent_character(g, n, 0, one, options).coefficient_at(one).get_num();
  out.total = out.untwisted;
  for (std::int64_t i = 1; i < n; ++i) {
    SectorInvariants s(g, i, n);
    if (integral_weight_labels(space, i).size() == 1) {
      const Rational c = extract_weight_class(s.character(one), Rational(0)).coefficient_at(one);
      if (!is_integer(c)) throw Error(ErrorKind::InvalidArgument, "non-integral graded dimension");
      out.per_sector[i] = c.get_num();
      out.total += c.get_num();
    } else {
      if (s.rho() <= 1) {
        throw Error(ErrorKind::NotSeparable, "sector " + std::to_string(i) + " mixes modules and reaches weight one");
      }
      out.excluded[i] = s.rho();
    }
  }
  return out;
}

}  // namespace orbifoldry
