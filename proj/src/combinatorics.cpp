#include "tensorinv/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "json.hpp"
#include "tensorinv/errors.hpp"

namespace tensorinv {

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt double_factorial(long n) {
  BigInt r = 1;
  for (long k = n; k > 1; k -= 2) r *= k;
  return r;
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ShapeError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw ShapeError("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::column_length(int j) const {
  int len = 0;
  for (int p : parts_) {
    if (p > j) ++len;
    else break;
  }
  return len;
}

bool Partition::has_even_rows() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; });
}

bool Partition::has_odd_rows() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 1; });
}

bool Partition::has_even_columns() const { return conjugate().has_even_rows(); }

Partition Partition::conjugate() const {
  std::vector<int> cols;
  for (int j = 0; j < row(0); ++j) cols.push_back(column_length(j));
  return Partition(std::move(cols));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition conjugate(const Partition& lambda) { return lambda.conjugate(); }

std::vector<Partition> partitions_of(int n, int max_length, int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  if (max_length < 0) max_length = n;
  if (max_part < 0) max_part = n;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_length) return;
    for (int k = std::min(remaining, cap); k >= 1; --k) {
      cur.push_back(k);
      rec(remaining - k, k);
      cur.pop_back();
    }
  };
  rec(n, max_part);
  return out;
}

// ---------------------------------------------------------------------------
// Tableau

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> lens;
  for (const auto& r : rows_) {
    if (r.empty()) throw ShapeError("tableau rows must be nonempty");
    lens.push_back(static_cast<int>(r.size()));
  }
  shape_ = Partition(std::move(lens));
}

std::vector<int> Tableau::column(int c) const {
  std::vector<int> col;
  for (const auto& r : rows_) {
    if (c < static_cast<int>(r.size())) col.push_back(r[c]);
    else break;
  }
  return col;
}

bool Tableau::is_semistandard() const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (rows_[r][c] < 1) return false;
      if (c > 0 && rows_[r][c - 1] > rows_[r][c]) return false;
      if (r > 0 && rows_[r - 1][c] >= rows_[r][c]) return false;
    }
  }
  return true;
}

bool Tableau::is_standard() const {
  if (!is_semistandard()) return false;
  std::vector<int> entries;
  for (const auto& r : rows_) entries.insert(entries.end(), r.begin(), r.end());
  std::sort(entries.begin(), entries.end());
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::vector<int> Tableau::weight(int max_entry) const {
  std::vector<int> w(max_entry, 0);
  for (const auto& r : rows_)
    for (int x : r) {
      if (x < 1 || x > max_entry) throw ShapeError("tableau entry outside [1, max_entry]");
      ++w[x - 1];
    }
  return w;
}

int Tableau::max_entry() const {
  int m = 0;
  for (const auto& r : rows_)
    for (int x : r) m = std::max(m, x);
  return m;
}

std::vector<int> Tableau::row_word() const {
  std::vector<int> w;
  for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
  return w;
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> w;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

std::string Tableau::to_json() const {
  nlohmann::ordered_json j;
  j["shape"] = shape_.parts();
  j["rows"] = rows_;
  return j.dump();
}

Tableau Tableau::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  Tableau t(j.at("rows").get<std::vector<std::vector<int>>>());
  if (j.contains("shape") && j["shape"].get<std::vector<int>>() != t.shape().parts())
    throw ShapeError("declared shape does not match rows");
  return t;
}

// ---------------------------------------------------------------------------
// Counting and enumeration

BigInt count_syt(const Partition& lambda) {
  BigInt hooks = 1;
  Partition conj = lambda.conjugate();
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
  return factorial(static_cast<unsigned>(lambda.size())) / hooks;
}

namespace {

// Row-major cell list of a shape.
std::vector<std::pair<int, int>> cells_of(const Partition& lambda) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) cells.emplace_back(i, j);
  return cells;
}

std::vector<std::vector<int>> blank_rows(const Partition& lambda) {
  std::vector<std::vector<int>> rows;
  for (int p : lambda.parts()) rows.emplace_back(p, 0);
  return rows;
}

}  // namespace

std::vector<Tableau> enumerate_syt(const Partition& lambda, int box_limit) {
  if (lambda.size() > box_limit)
    throw SizeLimitError("enumerate_syt: " + std::to_string(lambda.size()) + " boxes exceeds limit " +
                         std::to_string(box_limit));
  std::vector<int> weight(lambda.size(), 1);
  return enumerate_ssyt(lambda, lambda.size(), weight, box_limit);
}

std::vector<Tableau> enumerate_ssyt(const Partition& lambda, int max_entry, std::optional<std::vector<int>> weight,
                                    int box_limit) {
  if (lambda.size() > box_limit)
    throw SizeLimitError("enumerate_ssyt: " + std::to_string(lambda.size()) + " boxes exceeds limit " +
                         std::to_string(box_limit));
  if (weight && static_cast<int>(weight->size()) != max_entry)
    throw ShapeError("enumerate_ssyt: weight length must equal max_entry");
  std::vector<Tableau> out;
  if (weight && std::accumulate(weight->begin(), weight->end(), 0) != lambda.size()) return out;
  if (lambda.empty()) {
    out.emplace_back();
    return out;
  }
  if (max_entry < lambda.length()) return out;

  auto cells = cells_of(lambda);
  auto rows = blank_rows(lambda);
  std::vector<int> remaining = weight.value_or(std::vector<int>{});

  // Row-major fill with ascending candidates yields row-word lexicographic order.
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      out.emplace_back(rows);
      return;
    }
    auto [i, j] = cells[k];
    int lo = 1;
    if (j > 0) lo = std::max(lo, rows[i][j - 1]);
    if (i > 0) lo = std::max(lo, rows[i - 1][j] + 1);
    // Entries below this cell in its column still need room.
    int hi = max_entry - (lambda.column_length(j) - 1 - i);
    for (int v = lo; v <= hi; ++v) {
      if (weight) {
        if (remaining[v - 1] == 0) continue;
        --remaining[v - 1];
      }
      rows[i][j] = v;
      rec(k + 1);
      if (weight) ++remaining[v - 1];
    }
  };
  rec(0);
  return out;
}

Partition add_rectangle(const Partition& lambda, int d, int n) {
  if (lambda.length() > n)
    throw ShapeError("add_rectangle: partition " + lambda.to_string() + " has more than " + std::to_string(n) +
                     " rows");
  if (d < 0) throw ShapeError("add_rectangle: negative width");
  if (d == 0) return lambda;
  std::vector<int> parts;
  for (int i = 0; i < n; ++i) parts.push_back(lambda.row(i) + d);
  return Partition(std::move(parts));
}

BigInt kostka(const Partition& lambda, std::span<const int> weight) {
  int total = std::accumulate(weight.begin(), weight.end(), 0);
  if (total != lambda.size()) return 0;
  if (weight.empty()) return lambda.empty() ? 1 : 0;
  // The largest letter occupies a horizontal strip lambda / mu of size weight.back().
  int k = weight.back();
  auto rest = weight.first(weight.size() - 1);
  BigInt sum = 0;
  std::vector<int> mu = lambda.parts();
  std::function<void(std::size_t, int)> rec = [&](std::size_t row, int left) {
    if (row == mu.size()) {
      if (left != 0) return;
      std::vector<int> trimmed;
      for (int p : mu)
        if (p > 0) trimmed.push_back(p);
      sum += kostka(Partition(trimmed), rest);
      return;
    }
    // mu[row] >= lambda[row+1] keeps the removed cells a horizontal strip.
    int floor = row + 1 < mu.size() ? lambda[row + 1] : 0;
    int original = lambda[row];
    for (int take = 0; take <= std::min(left, original - floor); ++take) {
      mu[row] = original - take;
      rec(row + 1, left - take);
    }
    mu[row] = original;
  };
  rec(0, k);
  return sum;
}

Tableau prepend_columns(const std::vector<std::vector<int>>& columns, const Tableau& tail) {
  if (columns.empty()) return tail;
  std::size_t height = columns.front().size();
  for (const auto& c : columns)
    if (c.size() != height) throw ShapeError("prepend_columns: columns must share a length");
  if (static_cast<std::size_t>(tail.shape().length()) > height)
    throw ShapeError("prepend_columns: tail is taller than the prepended columns");
  std::vector<std::vector<int>> rows(height);
  for (std::size_t r = 0; r < height; ++r) {
    for (const auto& c : columns) rows[r].push_back(c[r]);
    if (r < tail.rows().size()) rows[r].insert(rows[r].end(), tail.rows()[r].begin(), tail.rows()[r].end());
  }
  return Tableau(std::move(rows));
}

std::pair<std::vector<std::vector<int>>, Tableau> split_leading_columns(const Tableau& t, int count) {
  std::vector<std::vector<int>> cols;
  for (int c = 0; c < count; ++c) cols.push_back(t.column(c));
  std::vector<std::vector<int>> rows;
  for (const auto& r : t.rows()) {
    if (static_cast<int>(r.size()) < count) throw ShapeError("split_leading_columns: row shorter than split");
    if (static_cast<int>(r.size()) > count) rows.emplace_back(r.begin() + count, r.end());
  }
  return {std::move(cols), Tableau(std::move(rows))};
}

}  // namespace tensorinv
