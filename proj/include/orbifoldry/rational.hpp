#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace orbifoldry {

using BigInt = mpz_class;
// mpq_class keeps values canonical (reduced, positive denominator) as long as
// they are built through make_rational / parse_rational or arithmetic.
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);
Rational make_rational(const BigInt& num, const BigInt& den);

// "num/den" always carries the slash; parse_rational also accepts "n".
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);
Rational parse_rational(std::string_view text);

BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);
// r - floor(r), in [0, 1).
Rational frac(const Rational& r);
bool is_integer(const Rational& r);

std::int64_t to_int64(const BigInt& z);

}  // namespace orbifoldry
