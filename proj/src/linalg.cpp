#include "ht/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ht {

bool EchelonBasis::add_row(std::vector<Rat> row) {
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  // reduce against existing pivot rows
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rat& c = row[pivot_cols_[r]];
    if (c == 0) continue;
    Rat f = c;  // pivot rows are normalized
    const auto& pr = rows_[r];
    for (std::size_t j = pivot_cols_[r]; j < cols_; ++j)
      if (pr[j] != 0) row[j] -= f * pr[j];
  }
  std::size_t lead = cols_;
  for (std::size_t j = 0; j < cols_; ++j)
    if (row[j] != 0) { lead = j; break; }
  if (lead == cols_) return false;
  Rat inv = 1 / row[lead];
  for (std::size_t j = lead; j < cols_; ++j)
    if (row[j] != 0) row[j] *= inv;
  auto pos = std::upper_bound(pivot_cols_.begin(), pivot_cols_.end(), lead) - pivot_cols_.begin();
  pivot_cols_.insert(pivot_cols_.begin() + pos, lead);
  rows_.insert(rows_.begin() + pos, std::move(row));
  return true;
}

void EchelonBasis::reduce_fully() {
  for (std::size_t r = rows_.size(); r-- > 0;) {
    for (std::size_t above = 0; above < r; ++above) {
      Rat c = rows_[above][pivot_cols_[r]];
      if (c == 0) continue;
      auto& ra = rows_[above];
      const auto& rr = rows_[r];
      for (std::size_t j = pivot_cols_[r]; j < cols_; ++j)
        if (rr[j] != 0) ra[j] -= c * rr[j];
    }
  }
}

std::vector<std::vector<Rat>> EchelonBasis::kernel() {
  reduce_fully();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivot_cols_) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(cols_);
    v[f] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) v[pivot_cols_[r]] = -rows_[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

RrefResult rref(const Mat& m) {
  EchelonBasis e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.add_row(m.row_vec(i));
  e.reduce_fully();
  Mat out(m.rows(), m.cols());
  for (std::size_t r = 0; r < e.rank(); ++r)
    for (std::size_t j = 0; j < m.cols(); ++j) out(r, j) = e.rows()[r][j];
  return {std::move(out), e.pivot_cols()};
}

std::size_t rank(const Mat& m) {
  EchelonBasis e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.add_row(m.row_vec(i));
  return e.rank();
}

std::vector<Mat> kernel_basis(const Mat& m) {
  EchelonBasis e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.add_row(m.row_vec(i));
  auto vecs = e.kernel();
  std::vector<Mat> out;
  out.reserve(vecs.size());
  for (auto& v : vecs) {
    Mat c(m.cols(), 1);
    for (std::size_t i = 0; i < m.cols(); ++i) c(i, 0) = v[i];
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<std::vector<Rat>> solve(const Mat& m, const std::vector<Rat>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  EchelonBasis e(m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = m.row_vec(i);
    row.push_back(b[i]);
    e.add_row(std::move(row));
  }
  e.reduce_fully();
  for (auto p : e.pivot_cols())
    if (p == m.cols()) return std::nullopt;  // row (0 ... 0 | 1): inconsistent
  std::vector<Rat> x(m.cols());
  for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivot_cols()[r]] = e.rows()[r][m.cols()];
  return x;
}

Rat determinant(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rat(1);

  // clear denominators row by row, keep track of the scaling
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  Rat scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    Int lcm(1);
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    scale /= Rat(lcm);
    for (std::size_t j = 0; j < n; ++j) {
      Rat v = m(i, j) * Rat(lcm);
      a[i][j] = v.get_num();
    }
  }

  // Bareiss fraction-free elimination
  Int prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (a[i][k] != 0) { piv = i; break; }
      if (piv == n) return Rat(0);
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rat det = Rat(a[n - 1][n - 1]) * scale;
  if (sign < 0) det = -det;
  return det;
}

std::pair<int, int> inertia(const Mat& sym) {
  if (!sym.is_symmetric()) throw std::invalid_argument("inertia of non-symmetric matrix");
  Mat a = sym;
  const std::size_t n = a.rows();
  int pos = 0, neg = 0;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    // pick a nonzero diagonal pivot among the remaining coordinates
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && a(i, i) != 0) { p = i; break; }
    if (p == n) {
      // all remaining diagonal entries vanish; a(i,j) != 0 would give a
      // hyperbolic pair -- realize it by a congruence row/column addition
      std::size_t bi = n, bj = n;
      for (std::size_t i = 0; i < n && bi == n; ++i)
        if (!done[i])
          for (std::size_t j = i + 1; j < n; ++j)
            if (!done[j] && a(i, j) != 0) { bi = i; bj = j; break; }
      if (bi == n) break;  // remaining block is zero (degenerate form)
      for (std::size_t j = 0; j < n; ++j) a(bi, j) += a(bj, j);
      for (std::size_t i = 0; i < n; ++i) a(i, bi) += a(i, bj);
      p = bi;
    }
    Rat d = a(p, p);
    (sgn(d) > 0 ? pos : neg) += 1;
    done[p] = true;
    // Schur complement on the remaining coordinates keeps the block symmetric
    std::vector<Rat> cp(n);
    for (std::size_t i = 0; i < n; ++i) cp[i] = a(i, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || cp[i] == 0) continue;
      Rat f = cp[i] / d;
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j] && cp[j] != 0) a(i, j) -= f * cp[j];
    }
  }
  return {pos, neg};
}

}  // namespace ht
