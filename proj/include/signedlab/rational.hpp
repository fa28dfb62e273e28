#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace signedlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct RationalMatrix {
  int rows = 0, cols = 0;
  std::vector<Rational> a;  // row-major

  RationalMatrix() = default;
  RationalMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}

  Rational& at(int i, int j) { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; }
  const Rational& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)];
  }
};

inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt p(s.substr(0, slash)), q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rational(p, q);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational \"" + s + "\"");
  }
}

inline std::string rational_to_string(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Exact rank by fraction-free (Bareiss) elimination: denominators are cleared
// per row, then each elimination step divides exactly by the previous pivot.
inline int exact_rank(const RationalMatrix& m) {
  const int rows = m.rows, cols = m.cols;
  std::vector<BigInt> w(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
  auto at = [&](int i, int j) -> BigInt& {
    return w[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)];
  };
  for (int i = 0; i < rows; ++i) {
    BigInt lcm = 1;
    for (int j = 0; j < cols; ++j) {
      BigInt den = boost::multiprecision::denominator(m.at(i, j));
      lcm = boost::multiprecision::lcm(lcm, den);
    }
    for (int j = 0; j < cols; ++j) {
      const Rational& r = m.at(i, j);
      at(i, j) = boost::multiprecision::numerator(r) * (lcm / boost::multiprecision::denominator(r));
    }
  }

  int rank = 0;
  BigInt prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pr = -1;
    for (int r = rank; r < rows; ++r)
      if (at(r, col) != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != rank)
      for (int j = 0; j < cols; ++j) std::swap(at(pr, j), at(rank, j));
    const BigInt piv = at(rank, col);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        BigInt num = at(i, j) * piv - at(i, col) * at(rank, j);
        BigInt q, rem;
        boost::multiprecision::divide_qr(num, prev, q, rem);
        if (rem != 0) throw std::logic_error("Bareiss exact division failed");
        at(i, j) = q;
      }
      at(i, col) = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

inline int exact_nullity(const RationalMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("exact_nullity expects a square matrix");
  return m.cols - exact_rank(m);
}

}  // namespace signedlab
