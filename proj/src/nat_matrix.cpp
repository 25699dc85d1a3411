#include "tensorinv/nat_matrix.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "json.hpp"
#include "tensorinv/errors.hpp"

namespace tensorinv {

NatMatrix NatMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) return NatMatrix();
  NatMatrix a(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < a.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != a.cols()) throw DomainError("ragged matrix rows");
    for (int j = 0; j < a.cols(); ++j) {
      if (rows[i][j] < 0) throw DomainError("matrix entries must be nonnegative");
      a(i, j) = rows[i][j];
    }
  }
  return a;
}

NatMatrix NatMatrix::identity(int n) {
  NatMatrix a(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 1;
  return a;
}

std::vector<int> NatMatrix::row_sums() const {
  std::vector<int> s(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) s[i] += (*this)(i, j);
  return s;
}

std::vector<int> NatMatrix::col_sums() const {
  std::vector<int> s(cols_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) s[j] += (*this)(i, j);
  return s;
}

int NatMatrix::trace() const {
  int t = 0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

int NatMatrix::total() const { return std::accumulate(data_.begin(), data_.end(), 0); }

bool NatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool NatMatrix::has_even_diagonal() const {
  for (int i = 0; i < std::min(rows_, cols_); ++i)
    if ((*this)(i, i) % 2 != 0) return false;
  return true;
}

bool NatMatrix::has_zero_diagonal() const { return trace() == 0; }

bool NatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](int x) { return x == 0; });
}

NatMatrix NatMatrix::transpose() const {
  NatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

NatMatrix NatMatrix::row_reversed() const {
  NatMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(rows_ - 1 - i, j) = (*this)(i, j);
  return r;
}

std::vector<std::vector<int>> NatMatrix::to_rows() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

std::string NatMatrix::to_json() const { return nlohmann::json(to_rows()).dump(); }

NatMatrix NatMatrix::from_json(const std::string& text) {
  return from_rows(nlohmann::json::parse(text).get<std::vector<std::vector<int>>>());
}

std::strong_ordering operator<=>(const NatMatrix& a, const NatMatrix& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  return a.data_ <=> b.data_;
}

std::vector<NatMatrix> matrices_with_margins(const std::vector<int>& row_sums, const std::vector<int>& col_sums) {
  std::vector<NatMatrix> out;
  int p = static_cast<int>(row_sums.size());
  int q = static_cast<int>(col_sums.size());
  if (std::accumulate(row_sums.begin(), row_sums.end(), 0) != std::accumulate(col_sums.begin(), col_sums.end(), 0))
    return out;
  NatMatrix a(p, q);
  std::vector<int> row_left = row_sums;
  std::vector<int> col_left = col_sums;
  // Filled in row-major order with ascending values, so output is already sorted.
  std::function<void(int, int)> rec = [&](int i, int j) {
    if (i == p) {
      out.push_back(a);
      return;
    }
    if (j == q) {
      if (row_left[i] == 0) rec(i + 1, 0);
      return;
    }
    int hi = std::min(row_left[i], col_left[j]);
    int lo = 0;
    if (i == p - 1) lo = col_left[j];  // last row must close out the column
    if (j == q - 1) lo = std::max(lo, row_left[i]);
    for (int v = lo; v <= hi; ++v) {
      a(i, j) = v;
      row_left[i] -= v;
      col_left[j] -= v;
      rec(i, j + 1);
      row_left[i] += v;
      col_left[j] += v;
    }
    a(i, j) = 0;
  };
  if (p == 0 || q == 0) {
    bool zero = std::all_of(row_sums.begin(), row_sums.end(), [](int x) { return x == 0; }) &&
                std::all_of(col_sums.begin(), col_sums.end(), [](int x) { return x == 0; });
    if (zero) out.push_back(a);
    return out;
  }
  rec(0, 0);
  return out;
}

std::vector<NatMatrix> symmetric_matrices_with_row_sums(const std::vector<int>& row_sums, DiagonalRule diagonal) {
  std::vector<NatMatrix> out;
  int m = static_cast<int>(row_sums.size());
  NatMatrix a(m, m);
  std::vector<int> left = row_sums;
  // Upper triangle in row-major order; mirrored entries keep lexicographic order
  // consistent with the full row-major order.
  std::function<void(int, int)> rec = [&](int i, int j) {
    if (i == m) {
      out.push_back(a);
      return;
    }
    if (j == m) {
      if (left[i] == 0) rec(i + 1, i + 1);
      return;
    }
    if (i == j) {
      int step = diagonal == DiagonalRule::Any ? 1 : 2;
      int hi = diagonal == DiagonalRule::Zero ? 0 : left[i];
      for (int v = 0; v <= hi; v += step) {
        a(i, i) = v;
        left[i] -= v;
        rec(i, j + 1);
        left[i] += v;
      }
      a(i, i) = 0;
      return;
    }
    int hi = std::min(left[i], left[j]);
    int lo = j == m - 1 ? left[i] : 0;
    for (int v = lo; v <= hi; ++v) {
      a(i, j) = a(j, i) = v;
      left[i] -= v;
      left[j] -= v;
      rec(i, j + 1);
      left[i] += v;
      left[j] += v;
    }
    a(i, j) = a(j, i) = 0;
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tensorinv
