#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tensorinv/numeric.hpp"

namespace tensorinv {

/// Weakly decreasing sequence of positive integers. The empty partition is a
/// valid value (size 0, length 0).
class Partition {
 public:
  Partition() = default;
  /// Throws ShapeError unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  /// Row length, or 0 past the last row.
  int row(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  /// Length of column `j` (0-based).
  int column_length(int j) const;

  bool has_even_rows() const;
  bool has_odd_rows() const;
  bool has_even_columns() const;

  Partition conjugate() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Default ceiling on the number of boxes an enumeration will accept.
inline constexpr int kDefaultBoxLimit = 14;

/// Partitions of `n` in reverse lexicographic order, optionally bounded in
/// length and largest part.
std::vector<Partition> partitions_of(int n, int max_length = -1, int max_part = -1);

/// Tableau in the usual English orientation: rows weakly increase, columns
/// strictly increase (for semistandard fillings).
class Tableau {
 public:
  Tableau() = default;
  /// Throws ShapeError if the rows do not form a partition shape.
  explicit Tableau(std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }
  bool empty() const { return rows_.empty(); }
  int at(int r, int c) const { return rows_[r][c]; }

  std::vector<int> column(int c) const;
  int num_columns() const { return shape_.row(0); }

  bool is_semistandard() const;
  bool is_standard() const;
  /// Entry counts for 1..max_entry. Throws ShapeError on an entry outside that range.
  std::vector<int> weight(int max_entry) const;
  int max_entry() const;

  /// Row reading word, top row first.
  std::vector<int> row_word() const;
  /// Reading word bottom row first; row insertion of this word rebuilds the tableau.
  std::vector<int> reading_word() const;

  std::string to_json() const;
  static Tableau from_json(const std::string& text);

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

/// Partition conjugate (transpose of the Young diagram).
Partition conjugate(const Partition& lambda);

/// Number of standard Young tableaux of shape `lambda`, by the hook length formula.
BigInt count_syt(const Partition& lambda);

/// All standard Young tableaux of shape `lambda`, sorted lexicographically by
/// their top-to-bottom row word. Throws SizeLimitError past `box_limit` boxes.
std::vector<Tableau> enumerate_syt(const Partition& lambda, int box_limit = kDefaultBoxLimit);

/// All semistandard tableaux of shape `lambda` with entries in [1, max_entry],
/// optionally restricted to an exact weight vector (of length max_entry).
std::vector<Tableau> enumerate_ssyt(const Partition& lambda, int max_entry,
                                    std::optional<std::vector<int>> weight = std::nullopt,
                                    int box_limit = kDefaultBoxLimit);

/// lambda + d^n: `d` extra boxes in each of the first `n` rows.
Partition add_rectangle(const Partition& lambda, int d, int n);

/// Kostka number K_{lambda, weight}, computed by peeling horizontal strips.
BigInt kostka(const Partition& lambda, std::span<const int> weight);

/// Prepends columns to a tableau (the columns must all have the same length,
/// at least as long as the tableau's first column).
Tableau prepend_columns(const std::vector<std::vector<int>>& columns, const Tableau& tail);

/// Splits off the first `count` columns; returns {columns, remainder}.
std::pair<std::vector<std::vector<int>>, Tableau> split_leading_columns(const Tableau& t, int count);

}  // namespace tensorinv
