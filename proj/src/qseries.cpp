#include "orbifoldry/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "orbifoldry/errors.hpp"

namespace orbifoldry {

namespace {

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  std::int64_t g = std::gcd(a, b);
  std::int64_t out;
  if (__builtin_mul_overflow(a / g, b, &out)) throw Error(ErrorKind::InvalidArgument, "grain overflow");
  return out;
}

std::int64_t grain_for(const Rational& r) { return to_int64(r.get_den()); }

// floor(c * grain) as the cutoff index for a rational cutoff.
std::int64_t cutoff_index_for(const Rational& cutoff, std::int64_t grain) {
  return to_int64(floor(cutoff * Rational(BigInt(static_cast<long>(grain)))));
}

std::int64_t lower_index(const FracSeries& a) {
  return a.terms().empty() ? a.cutoff_index() + 1 : a.terms().begin()->first;
}

// Dense BigInt buffer for exponents 0..N used by the product generators.
FracSeries from_dense(std::int64_t grain, const std::vector<BigInt>& coeffs) {
  FracSeries::Terms terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) terms.emplace(static_cast<std::int64_t>(k), Rational(coeffs[k]));
  }
  return FracSeries(grain, static_cast<std::int64_t>(coeffs.size()) - 1, std::move(terms));
}

}  // namespace

FracSeries::FracSeries(std::int64_t grain, std::int64_t cutoff_index, Terms terms)
    : grain_(grain), cutoff_(cutoff_index), terms_(std::move(terms)) {
  if (grain_ <= 0) throw Error(ErrorKind::InvalidArgument, "grain must be positive");
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0 || it->first > cutoff_) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

FracSeries FracSeries::zero(const Rational& cutoff, std::int64_t grain) {
  return FracSeries(grain, cutoff_index_for(cutoff, grain));
}

FracSeries FracSeries::one(const Rational& cutoff) { return monomial(Rational(1), Rational(0), cutoff); }

FracSeries FracSeries::monomial(const Rational& coeff, const Rational& exponent, const Rational& cutoff) {
  std::int64_t grain = checked_lcm(grain_for(exponent), grain_for(cutoff));
  Terms terms;
  terms.emplace(to_int64(exponent.get_num()) * (grain / grain_for(exponent)), coeff);
  return FracSeries(grain, cutoff_index_for(cutoff, grain), std::move(terms));
}

Rational FracSeries::cutoff() const { return make_rational(cutoff_, grain_); }

std::optional<Rational> FracSeries::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return make_rational(terms_.begin()->first, grain_);
}

Rational FracSeries::coefficient_at(const Rational& exponent) const {
  if (exponent > cutoff()) {
    throw Error(ErrorKind::BeyondCutoff, "exponent " + to_string(exponent) + " exceeds cutoff " + to_string(cutoff()));
  }
  Rational scaled = exponent * Rational(BigInt(static_cast<long>(grain_)));
  if (!is_integer(scaled)) return Rational(0);
  auto it = terms_.find(to_int64(scaled.get_num()));
  return it == terms_.end() ? Rational(0) : it->second;
}

FracSeries FracSeries::with_grain(std::int64_t new_grain) const {
  if (new_grain <= 0 || new_grain % grain_ != 0) {
    throw Error(ErrorKind::InvalidArgument, "new grain must be a multiple of the current grain");
  }
  const std::int64_t factor = new_grain / grain_;
  Terms terms;
  for (const auto& [k, c] : terms_) terms.emplace(k * factor, c);
  return FracSeries(new_grain, cutoff_ * factor, std::move(terms));
}

FracSeries FracSeries::truncated(const Rational& cutoff) const {
  std::int64_t grain = checked_lcm(grain_, grain_for(cutoff));
  FracSeries fine = with_grain(grain);
  std::int64_t n = std::min(fine.cutoff_, cutoff_index_for(cutoff, grain));
  return FracSeries(grain, n, fine.terms_).normalized();
}

FracSeries FracSeries::shifted(const Rational& e) const {
  std::int64_t grain = checked_lcm(grain_, grain_for(e));
  FracSeries fine = with_grain(grain);
  const std::int64_t offset = to_int64(Rational(e * Rational(BigInt(static_cast<long>(grain)))).get_num());
  Terms terms;
  for (const auto& [k, c] : fine.terms_) terms.emplace(k + offset, c);
  return FracSeries(grain, fine.cutoff_ + offset, std::move(terms));
}

FracSeries FracSeries::normalized() const {
  // The cutoff takes part in the gcd so it survives exactly.
  std::int64_t g = std::gcd(grain_, cutoff_);
  for (const auto& [k, c] : terms_) g = std::gcd(g, k);
  if (g <= 1) return *this;
  Terms terms;
  for (const auto& [k, c] : terms_) terms.emplace(k / g, c);
  return FracSeries(grain_ / g, cutoff_ / g, std::move(terms));
}

bool FracSeries::has_nonnegative_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return is_integer(kv.second) && kv.second > 0; });
}

FracSeries operator+(const FracSeries& a, const FracSeries& b) {
  std::int64_t grain = checked_lcm(a.grain_, b.grain_);
  FracSeries fa = a.with_grain(grain);
  FracSeries fb = b.with_grain(grain);
  FracSeries::Terms terms = fa.terms_;
  for (const auto& [k, c] : fb.terms_) terms[k] += c;
  return FracSeries(grain, std::min(fa.cutoff_, fb.cutoff_), std::move(terms)).normalized();
}

FracSeries operator-(const FracSeries& a) { return Rational(-1) * a; }

FracSeries operator-(const FracSeries& a, const FracSeries& b) { return a + (-b); }

FracSeries operator*(const Rational& s, const FracSeries& a) {
  FracSeries::Terms terms;
  if (s != 0) {
    for (const auto& [k, c] : a.terms_) terms.emplace(k, s * c);
  }
  return FracSeries(a.grain_, a.cutoff_, std::move(terms));
}

FracSeries operator*(const FracSeries& a, const FracSeries& b) { return series_mul(a, b); }

bool operator==(const FracSeries& a, const FracSeries& b) {
  if (a.cutoff() != b.cutoff()) return false;
  std::int64_t grain = checked_lcm(a.grain_, b.grain_);
  return a.with_grain(grain).terms_ == b.with_grain(grain).terms_;
}

FracSeries series_mul(const FracSeries& a, const FracSeries& b) {
  std::int64_t grain = checked_lcm(a.grain(), b.grain());
  FracSeries fa = a.with_grain(grain);
  FracSeries fb = b.with_grain(grain);
  // a = A + O(q^{Na+}), b = B + O(q^{Nb+}): the product is exact through
  // min(Na + low(b), Nb + low(a)).
  const std::int64_t cutoff =
      std::min(fa.cutoff_index() + lower_index(fb), fb.cutoff_index() + lower_index(fa));
  FracSeries::Terms terms;
  for (const auto& [ka, ca] : fa.terms()) {
    for (const auto& [kb, cb] : fb.terms()) {
      if (ka + kb > cutoff) break;
      terms[ka + kb] += ca * cb;
    }
  }
  return FracSeries(grain, cutoff, std::move(terms)).normalized();
}

FracSeries series_inv(const FracSeries& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroLeadingTerm, "series has no terms up to its cutoff");
  const auto& terms = a.terms();
  const std::int64_t k0 = terms.begin()->first;
  const Rational inv_lead = 1 / terms.begin()->second;
  // a = c q^{k0} (1 + u) exact through N gives a^{-1} exact through N - 2 k0.
  const std::int64_t length = a.cutoff_index() - k0;  // number of known relative terms after the leading one
  std::vector<Rational> rel(static_cast<std::size_t>(length + 1));
  for (const auto& [k, c] : terms) rel[static_cast<std::size_t>(k - k0)] = c;
  std::vector<Rational> out(static_cast<std::size_t>(length + 1));
  out[0] = inv_lead;
  for (std::int64_t t = 1; t <= length; ++t) {
    Rational acc = 0;
    for (std::int64_t s = 1; s <= t; ++s) {
      const Rational& r = rel[static_cast<std::size_t>(s)];
      if (r != 0) acc += r * out[static_cast<std::size_t>(t - s)];
    }
    out[static_cast<std::size_t>(t)] = -inv_lead * acc;
  }
  FracSeries::Terms result;
  for (std::int64_t t = 0; t <= length; ++t) {
    if (out[static_cast<std::size_t>(t)] != 0) result.emplace(t - k0, out[static_cast<std::size_t>(t)]);
  }
  return FracSeries(a.grain(), a.cutoff_index() - 2 * k0, std::move(result));
}

FracSeries series_pow(const FracSeries& a, unsigned n) {
  if (n == 0) return FracSeries::one(a.cutoff());
  FracSeries base = a;
  std::optional<FracSeries> result;
  while (n > 0) {
    if (n & 1U) result = result ? series_mul(*result, base) : base;
    n >>= 1U;
    if (n > 0) base = series_mul(base, base);
  }
  return *result;
}

FracSeries grading_product(std::span<const ModeFactor> factors, const Rational& cutoff) {
  std::int64_t grain = 1;
  for (const auto& f : factors) {
    if (f.exponent <= 0) {
      throw Error(ErrorKind::NonPositiveExponent, "mode exponent " + to_string(f.exponent) + " is not positive");
    }
    if (f.multiplicity < 0) throw Error(ErrorKind::InvalidArgument, "negative mode multiplicity");
    grain = checked_lcm(grain, grain_for(f.exponent));
  }
  // a fractional cutoff refines the grain so it is kept exactly
  grain = checked_lcm(grain, grain_for(cutoff));
  const std::int64_t n = cutoff_index_for(cutoff, grain);
  if (n < 0) return FracSeries(grain, n);
  std::vector<BigInt> c(static_cast<std::size_t>(n + 1));
  c[0] = 1;
  for (const auto& f : factors) {
    const std::int64_t step = to_int64(Rational(f.exponent * Rational(BigInt(static_cast<long>(grain)))).get_num());
    for (std::int64_t t = step; t <= n; t += grain) {
      for (std::int64_t rep = 0; rep < f.multiplicity; ++rep) {
        for (std::int64_t k = t; k <= n; ++k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - t)];
      }
    }
  }
  return from_dense(grain, c);
}

FracSeries fermionic_product(std::span<const ModeFactor> factors, int sign, const Rational& cutoff) {
  if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidArgument, "sign must be +1 or -1");
  std::int64_t grain = 1;
  for (const auto& f : factors) {
    if (f.exponent <= 0) {
      throw Error(ErrorKind::NonPositiveExponent, "mode exponent " + to_string(f.exponent) + " is not positive");
    }
    if (f.multiplicity < 0) throw Error(ErrorKind::InvalidArgument, "negative mode multiplicity");
    grain = checked_lcm(grain, grain_for(f.exponent));
  }
  // a fractional cutoff refines the grain so it is kept exactly
  grain = checked_lcm(grain, grain_for(cutoff));
  const std::int64_t n = cutoff_index_for(cutoff, grain);
  if (n < 0) return FracSeries(grain, n);
  std::vector<BigInt> c(static_cast<std::size_t>(n + 1));
  c[0] = 1;
  for (const auto& f : factors) {
    const std::int64_t step = to_int64(Rational(f.exponent * Rational(BigInt(static_cast<long>(grain)))).get_num());
    for (std::int64_t t = step; t <= n; t += grain) {
      for (std::int64_t rep = 0; rep < f.multiplicity; ++rep) {
        for (std::int64_t k = n; k >= t; --k) {
          if (sign > 0) {
            c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - t)];
          } else {
            c[static_cast<std::size_t>(k)] -= c[static_cast<std::size_t>(k - t)];
          }
        }
      }
    }
  }
  return from_dense(grain, c);
}

FracSeries inverse_polynomial_product(std::span<const BigInt> poly, const Rational& cutoff) {
  if (poly.empty() || poly[0] != 1) throw Error(ErrorKind::InvalidArgument, "polynomial must have constant term 1");
  const std::int64_t grain = grain_for(cutoff);
  const std::int64_t n = cutoff_index_for(cutoff, grain);
  if (n < 0) return FracSeries(grain, n);
  std::vector<BigInt> c(static_cast<std::size_t>(n + 1));
  c[0] = 1;
  for (std::int64_t step = grain; step <= n; step += grain) {
    // divide in place by P(q^step); ascending k sees already-divided values
    for (std::int64_t k = step; k <= n; ++k) {
      BigInt acc = 0;
      for (std::size_t t = 1; t < poly.size() && static_cast<std::int64_t>(t) * step <= k; ++t) {
        if (poly[t] != 0) acc += poly[t] * c[static_cast<std::size_t>(k - static_cast<std::int64_t>(t) * step)];
      }
      c[static_cast<std::size_t>(k)] -= acc;
    }
  }
  return from_dense(grain, c);
}

FracSeries extract_weight_class(const FracSeries& a, const Rational& r) {
  if (r < 0 || r >= 1) throw Error(ErrorKind::InvalidArgument, "weight class must lie in [0, 1)");
  std::int64_t grain = checked_lcm(a.grain(), grain_for(r));
  FracSeries fine = a.with_grain(grain);
  const std::int64_t residue = to_int64(Rational(r * Rational(BigInt(static_cast<long>(grain)))).get_num());
  FracSeries::Terms terms;
  for (const auto& [k, c] : fine.terms()) {
    std::int64_t m = ((k % grain) + grain) % grain;
    if (m == residue) terms.emplace(k, c);
  }
  return FracSeries(grain, fine.cutoff_index(), std::move(terms)).normalized();
}

Rational coefficient_at(const FracSeries& a, const Rational& e) { return a.coefficient_at(e); }

std::string to_json_string(const FracSeries& a) {
  nlohmann::ordered_json j;
  j["grain"] = a.grain();
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [k, c] : a.terms()) terms.push_back(nlohmann::ordered_json::array({k, to_string(c)}));
  j["terms"] = std::move(terms);
  j["cutoff"] = a.cutoff_index();
  return j.dump();
}

FracSeries series_from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    FracSeries::Terms terms;
    for (const auto& t : j.at("terms")) {
      terms.emplace(t.at(0).get<std::int64_t>(), parse_rational(t.at(1).get<std::string>()));
    }
    return FracSeries(j.at("grain").get<std::int64_t>(), j.at("cutoff").get<std::int64_t>(), std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("series JSON: ") + e.what());
  }
}

std::string to_display_string(const FracSeries& a) {
  std::ostringstream out;
  bool first = true;
  auto exponent_text = [](const Rational& e) {
    if (e == 1) return std::string("q");
    if (is_integer(e)) return "q^" + e.get_num().get_str();
    return "q^{" + e.get_num().get_str() + "/" + e.get_den().get_str() + "}";
  };
  for (const auto& [k, c] : a.terms()) {
    Rational e = make_rational(k, a.grain());
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string coeff = is_integer(mag) ? mag.get_num().get_str() : mag.get_str();
    if (e == 0) {
      out << coeff;
    } else {
      if (mag != 1) out << coeff;
      out << exponent_text(e);
    }
  }
  if (first) out << "0";
  Rational next = a.cutoff() + make_rational(1, a.grain());
  out << " + O(" << exponent_text(next) << ")";
  return out.str();
}

}  // namespace orbifoldry
