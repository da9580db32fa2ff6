#include "orbifoldry/matrix.hpp"

#include <fstream>
#include <sstream>

namespace orbifoldry {

IntMatrix checked_multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        std::int64_t t;
        if (__builtin_mul_overflow(a(i, k), b(k, j), &t) || __builtin_add_overflow(acc, t, &acc)) {
          throw Error(ErrorKind::InvalidArgument, "integer overflow in matrix product");
        }
      }
      c(i, j) = acc;
    }
  }
  return c;
}

IntMatrix matrix_power(const IntMatrix& m, std::int64_t k) {
  if (!m.square()) throw Error(ErrorKind::DimensionMismatch, "power of non-square matrix");
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative matrix power");
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (k > 0) {
    if (k & 1) result = checked_multiply(result, base);
    k >>= 1;
    if (k > 0) base = checked_multiply(base, base);
  }
  return result;
}

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix b(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) b(i, j) = BigInt(static_cast<long>(m(i, j)));
  return b;
}

BigInt determinant(const BigMatrix& input) {
  if (!input.square()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  BigMatrix a = input;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<BigInt> leading_minors(const BigMatrix& input) {
  if (!input.square()) throw Error(ErrorKind::DimensionMismatch, "minors of non-square matrix");
  const std::size_t n = input.rows();
  std::vector<BigInt> minors;
  BigMatrix a = input;
  BigInt prev = 1;
  // Without pivoting, the k-th Bareiss pivot is exactly the k-th leading minor.
  for (std::size_t k = 0; k < n; ++k) {
    minors.push_back(a(k, k));
    if (a(k, k) <= 0) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return minors;
}

MatrixFile parse_matrix_text(std::string_view text) {
  MatrixFile out;
  std::vector<std::string> tokens;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::string body = line.substr(first + 1);
      auto colon = body.find(':');
      if (colon != std::string::npos) {
        auto trim = [](std::string s) {
          auto b = s.find_first_not_of(" \t\r");
          auto e = s.find_last_not_of(" \t\r");
          return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(body.substr(0, colon));
        if (!key.empty() && key.find(' ') == std::string::npos) out.metadata[key] = trim(body.substr(colon + 1));
      }
      continue;
    }
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  auto to_int = [](const std::string& tok) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "not an integer: '" + tok + "'");
    }
    if (pos != tok.size()) throw Error(ErrorKind::ParseError, "not an integer: '" + tok + "'");
    return static_cast<std::int64_t>(v);
  };
  if (tokens.empty()) throw Error(ErrorKind::ParseError, "missing dimension");
  std::int64_t r = to_int(tokens[0]);
  if (r < 0) throw Error(ErrorKind::ParseError, "negative dimension");
  const auto n = static_cast<std::size_t>(r);
  if (tokens.size() != 1 + n * n) {
    throw Error(ErrorKind::ParseError, "expected " + std::to_string(n * n) + " entries, found " +
                                           std::to_string(tokens.size() - 1));
  }
  out.matrix = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.matrix(i, j) = to_int(tokens[1 + i * n + j]);
  return out;
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::DataMissing, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_matrix_text(buf.str());
}

std::string format_matrix_text(const IntMatrix& m, const std::map<std::string, std::string>& metadata) {
  std::ostringstream out;
  for (const auto& [k, v] : metadata) out << "# " << k << ": " << v << "\n";
  out << m.rows() << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m(i, j);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace orbifoldry
