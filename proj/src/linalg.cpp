#include "pisys/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <utility>

namespace pisys::linalg {

using Rational = boost::multiprecision::cpp_rational;

Int determinant(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool positive_definite(const Matrix& symmetric) {
  Matrix m = symmetric;
  const std::size_t n = m.size();
  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return true;
}

namespace {

// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t r = row;
    while (r < a.size() && a[r][c] == 0) ++r;
    if (r == a.size()) continue;
    std::swap(a[row], a[r]);
    Rational inv = 1 / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Rational>> to_rational(const Matrix& m) {
  std::vector<std::vector<Rational>> a;
  a.reserve(m.size());
  for (const auto& row : m) a.emplace_back(row.begin(), row.end());
  return a;
}

}  // namespace

std::size_t rank(Matrix m) {
  if (m.empty()) return 0;
  auto a = to_rational(m);
  return rref(a, m.front().size()).size();
}

Coeffs primitive(Coeffs v) {
  Int g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  if (g == 0) return v;
  if (g < 0) g = -g;
  bool flip = false;
  for (const auto& x : v) {
    if (x != 0) {
      flip = x < 0;
      break;
    }
  }
  for (auto& x : v) {
    x /= g;
    if (flip) x = -x;
  }
  return v;
}

std::vector<Coeffs> integer_kernel(const Matrix& m) {
  if (m.empty()) return {};
  const std::size_t cols = m.front().size();
  auto a = to_rational(m);
  auto pivots = rref(a, cols);

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<Coeffs> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a[r][free];
    Int l = 1;
    for (const auto& q : x) {
      Int d = boost::multiprecision::denominator(q);
      l = l / boost::multiprecision::gcd(l, d) * d;
    }
    Coeffs v;
    v.reserve(cols);
    for (const auto& q : x) v.push_back(boost::multiprecision::numerator(q) * (l / boost::multiprecision::denominator(q)));
    basis.push_back(primitive(std::move(v)));
  }
  return basis;
}

}  // namespace pisys::linalg
