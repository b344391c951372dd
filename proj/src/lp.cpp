#include "icx/lp.hpp"

#include <limits>

#include "icx/error.hpp"

namespace icx {

namespace {

std::size_t binomial_capped(std::size_t n, std::size_t k) {
  constexpr std::size_t cap = std::numeric_limits<std::size_t>::max() / 64;
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap;
  }
  return r;
}

class Tableau {
 public:
  Tableau(const RMatrix& a, const RVector& b, std::size_t cols) : cols_(cols) {
    const std::size_t m = a.size();
    rows_.resize(m);
    basis_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      // Columns: originals, then one artificial per row, then rhs.
      RVector& row = rows_[i];
      row.assign(cols_ + m + 1, Rational(0));
      const bool flip = b[i] < 0;
      for (std::size_t j = 0; j < cols_; ++j) row[j] = flip ? Rational(-a[i][j]) : a[i][j];
      row[cols_ + i] = 1;
      row.back() = flip ? Rational(-b[i]) : b[i];
      basis_[i] = cols_ + i;
    }
    artificial_end_ = cols_ + m;
  }

  bool is_artificial(std::size_t j) const { return j >= cols_ && j < artificial_end_; }

  /// Runs simplex with Bland's rule for the given full-length cost vector.
  /// `allow_artificial` controls whether artificial columns may enter.
  std::size_t optimize(const RVector& cost, bool allow_artificial, std::size_t cap) {
    std::size_t pivots = 0;
    while (true) {
      std::size_t entering = artificial_end_;
      for (std::size_t j = 0; j < artificial_end_; ++j) {
        if (!allow_artificial && is_artificial(j)) continue;
        if (reduced_cost(cost, j) < 0) {
          entering = j;
          break;
        }
      }
      if (entering == artificial_end_) return pivots;

      std::size_t leave = rows_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& coef = rows_[i][entering];
        if (coef <= 0) continue;
        Rational ratio = rows_[i].back() / coef;
        if (leave == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows_.size()) fail(ErrorKind::Internal, "lp_min: objective unbounded below");
      pivot(leave, entering);
      if (++pivots > cap) fail(ErrorKind::Internal, "lp_min: pivot cap exceeded (cycling?)");
    }
  }

  Rational objective(const RVector& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) v += cost[basis_[i]] * rows_[i].back();
    return v;
  }

  /// Moves zero-valued artificials out of the basis; drops redundant rows.
  void expel_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (!is_artificial(basis_[i])) {
        ++i;
        continue;
      }
      std::size_t j = 0;
      while (j < cols_ && rows_[i][j] == 0) ++j;
      if (j < cols_) {
        pivot(i, j);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  RVector solution() const {
    RVector x(cols_, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < cols_) x[basis_[i]] = rows_[i].back();
    }
    return x;
  }

  std::size_t width() const { return artificial_end_; }

 private:
  Rational reduced_cost(const RVector& cost, std::size_t j) const {
    Rational r = cost[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i][j] != 0) r -= cost[basis_[i]] * rows_[i][j];
    }
    return r;
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / rows_[r][c];
    for (auto& v : rows_[r]) v *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      Rational factor = rows_[i][c];
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        if (rows_[r][j] != 0) rows_[i][j] -= factor * rows_[r][j];
      }
    }
    basis_[r] = c;
  }

  std::size_t cols_;
  std::size_t artificial_end_ = 0;
  RMatrix rows_;
  std::vector<std::size_t> basis_;
};

}  // namespace

std::optional<LpSolution> lp_min(const RVector& costs, const RMatrix& a, const RVector& b) {
  const std::size_t cols = costs.size();
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "lp_min: rows of A and b differ");
  for (const auto& row : a) {
    if (row.size() != cols) fail(ErrorKind::DimensionMismatch, "lp_min: row length differs from cost length");
  }
  const std::size_t m = a.size();
  Tableau t(a, b, cols);
  const std::size_t cap = binomial_capped(cols + m, m) + 1;

  RVector phase1(t.width(), Rational(0));
  for (std::size_t j = cols; j < t.width(); ++j) phase1[j] = 1;
  std::size_t pivots = t.optimize(phase1, true, cap);
  if (t.objective(phase1) > 0) return std::nullopt;
  t.expel_artificials();

  RVector phase2(t.width(), Rational(0));
  for (std::size_t j = 0; j < cols; ++j) phase2[j] = costs[j];
  pivots += t.optimize(phase2, false, cap);

  LpSolution sol;
  sol.x = t.solution();
  sol.value = 0;
  for (std::size_t j = 0; j < cols; ++j) sol.value += costs[j] * sol.x[j];
  sol.pivots = pivots;
  return sol;
}

}  // namespace icx
