#include "icx/linalg.hpp"

#include "icx/error.hpp"

namespace icx {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational factor = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RMatrix m) {
  if (m.empty()) return 0;
  return rref(m, m.front().size()).size();
}

std::vector<RVector> null_space(RMatrix m, std::size_t cols) {
  for (const auto& r : m) {
    if (r.size() != cols) fail(ErrorKind::DimensionMismatch, "ragged matrix in null_space");
  }
  auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RVector> solve_square(RMatrix m, RVector b) {
  const std::size_t n = m.size();
  if (b.size() != n) fail(ErrorKind::DimensionMismatch, "solve_square rhs size");
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) fail(ErrorKind::DimensionMismatch, "solve_square needs a square matrix");
    m[i].push_back(b[i]);
  }
  auto pivots = rref(m, n);
  if (pivots.size() < n) return std::nullopt;
  RVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
  return x;
}

RVector primitive_direction(const RVector& v) {
  BigInt lcm_den = 1;
  for (const auto& q : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<BigInt> ints;
  BigInt g = 0;
  for (const auto& q : v) {
    BigInt z = q.get_num() * (lcm_den / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    ints.push_back(std::move(z));
  }
  if (g == 0) fail(ErrorKind::Precondition, "primitive_direction of the zero vector");
  RVector out;
  out.reserve(v.size());
  for (auto& z : ints) out.emplace_back(BigInt(z / g));
  return out;
}

Rational dot(const RVector& a, const RVector& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "dot product sizes");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace icx
