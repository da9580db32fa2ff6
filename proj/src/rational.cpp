#include "orbifoldry/rational.hpp"

#include <limits>

#include "orbifoldry/errors.hpp"

namespace orbifoldry {

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(BigInt(std::to_string(num)), BigInt(std::to_string(den)));
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw Error(ErrorKind::ParseError, "empty integer in '" + std::string(text) + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw Error(ErrorKind::ParseError, "bad integer '" + std::string(s) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw Error(ErrorKind::ParseError, "bad integer '" + std::string(s) + "'");
      }
    }
    std::string owned(s[0] == '+' ? s.substr(1) : s);
    return BigInt(owned);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

BigInt floor(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

BigInt ceil(const Rational& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rational frac(const Rational& r) { return r - Rational(floor(r)); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::int64_t to_int64(const BigInt& z) {
  if (!z.fits_slong_p()) throw Error(ErrorKind::InvalidArgument, "integer out of 64-bit range: " + z.get_str());
  return z.get_si();
}

}  // namespace orbifoldry
