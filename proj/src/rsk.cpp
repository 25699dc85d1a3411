#include "tensorinv/rsk.hpp"

#include <algorithm>

#include "tensorinv/errors.hpp"

namespace tensorinv {

namespace {

using Rows = std::vector<std::vector<int>>;

// Bumps x into the rows; returns the row index where a new cell appeared.
std::size_t row_insert(Rows& rows, int x) {
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({x});
      return r;
    }
    auto it = std::upper_bound(rows[r].begin(), rows[r].end(), x);
    if (it == rows[r].end()) {
      rows[r].push_back(x);
      return r;
    }
    std::swap(*it, x);
  }
}

// Removes the corner at the end of row `r` and bumps back up; returns the ejected value.
int reverse_bump(Rows& rows, std::size_t r) {
  int x = rows[r].back();
  rows[r].pop_back();
  if (rows[r].empty()) rows.pop_back();
  while (r-- > 0) {
    // Rightmost entry strictly smaller than x.
    auto it = std::lower_bound(rows[r].begin(), rows[r].end(), x);
    --it;
    std::swap(*it, x);
  }
  return x;
}

int default_size(int requested, const Tableau& t) { return requested >= 0 ? requested : t.max_entry(); }

}  // namespace

Tableau insert_word(const std::vector<int>& word) {
  Rows rows;
  for (int x : word) row_insert(rows, x);
  return Tableau(std::move(rows));
}

Bitableau rsk_a(const NatMatrix& a) {
  Rows p, q;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int k = 0; k < a(i, j); ++k) {
        std::size_t r = row_insert(p, j + 1);
        if (r == q.size()) q.emplace_back();
        q[r].push_back(i + 1);
      }
  return {Tableau(std::move(q)), Tableau(std::move(p))};
}

NatMatrix rsk_a_inv(const Bitableau& b, int rows, int cols) {
  if (b.recording.shape() != b.insertion.shape()) throw ShapeError("rsk_a_inv: tableaux differ in shape");
  if (!b.recording.is_semistandard() || !b.insertion.is_semistandard())
    throw ShapeError("rsk_a_inv: tableaux must be semistandard");
  rows = default_size(rows, b.recording);
  cols = default_size(cols, b.insertion);
  if (b.recording.max_entry() > rows || b.insertion.max_entry() > cols)
    throw ShapeError("rsk_a_inv: entries exceed the matrix size");
  NatMatrix a(rows, cols);
  Rows p = b.insertion.rows();
  Rows q = b.recording.rows();
  while (!q.empty()) {
    // The last-inserted cell holds the largest recording entry, rightmost among ties.
    std::size_t r = 0;
    for (std::size_t k = 1; k < q.size(); ++k)
      if (q[k].back() > q[r].back()) r = k;
    int i = q[r].back();
    q[r].pop_back();
    if (q[r].empty()) q.pop_back();
    int j = reverse_bump(p, r);
    ++a(i - 1, j - 1);
  }
  return a;
}

NatMatrix rsk_b(const Tableau& t, int m) {
  if (!t.is_semistandard()) throw ShapeError("rsk_b: tableau must be semistandard");
  if (!t.shape().has_even_rows()) throw ShapeError("rsk_b: every row must have even length");
  m = default_size(m, t);
  if (t.max_entry() > m) throw ShapeError("rsk_b: entries exceed m");
  // The recording tableau of the row-reversed matrix is the insertion tableau
  // of the reversed, complemented reading word.
  auto word = t.reading_word();
  std::reverse(word.begin(), word.end());
  for (int& x : word) x = m + 1 - x;
  Tableau q = insert_word(word);
  return rsk_a_inv({q, t}, m, m).row_reversed();
}

Tableau rsk_b_inv(const NatMatrix& a) {
  if (!a.is_symmetric()) throw DomainError("rsk_b_inv: matrix must be square and symmetric");
  if (!a.has_even_diagonal()) throw DomainError("rsk_b_inv: diagonal entries must be even");
  return rsk_a(a.row_reversed()).insertion;
}

NatMatrix rsk_c(const Tableau& t, int m) {
  if (!t.is_semistandard()) throw ShapeError("rsk_c: tableau must be semistandard");
  if (!t.shape().has_even_columns()) throw ShapeError("rsk_c: every column must have even length");
  return rsk_a_diagonal(t, m);
}

Tableau rsk_c_inv(const NatMatrix& a) {
  if (!a.is_symmetric()) throw DomainError("rsk_c_inv: matrix must be square and symmetric");
  if (!a.has_zero_diagonal()) throw DomainError("rsk_c_inv: diagonal must be zero");
  auto b = rsk_a(a);
  return b.insertion;
}

NatMatrix rsk_a_diagonal(const Tableau& t, int m) {
  m = default_size(m, t);
  return rsk_a_inv({t, t}, m, m);
}

int support_width(const NatMatrix& a, SupportOrder order) {
  // Antichains are sequences with rows strictly increasing and columns strictly
  // decreasing (product order) or strictly increasing (reversed order).
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) > 0) cells.emplace_back(i, j);
  std::vector<int> len(cells.size(), 1);
  int best = 0;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    for (std::size_t l = 0; l < k; ++l) {
      bool rows_up = cells[l].first < cells[k].first;
      bool ok = order == SupportOrder::Product ? cells[l].second > cells[k].second : cells[l].second < cells[k].second;
      if (rows_up && ok) len[k] = std::max(len[k], len[l] + 1);
    }
    best = std::max(best, len[k]);
  }
  return best;
}

}  // namespace tensorinv
