#pragma once

#include <compare>
#include <string>
#include <vector>

namespace tensorinv {

/// Dense matrix of nonnegative integers. Serves as an RSK image, as the
/// (bi)adjacency matrix of an arc diagram, and as a monomial degree matrix.
class NatMatrix {
 public:
  NatMatrix() = default;
  NatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}
  /// Throws DomainError on ragged or negative input.
  static NatMatrix from_rows(const std::vector<std::vector<int>>& rows);
  static NatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  int& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::vector<int> row_sums() const;
  std::vector<int> col_sums() const;
  int trace() const;
  int total() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool has_even_diagonal() const;
  bool has_zero_diagonal() const;
  bool is_zero() const;

  NatMatrix transpose() const;
  /// Reverses the order of the rows.
  NatMatrix row_reversed() const;

  std::vector<std::vector<int>> to_rows() const;
  const std::vector<int>& data() const { return data_; }
  std::string to_json() const;
  static NatMatrix from_json(const std::string& text);

  friend bool operator==(const NatMatrix&, const NatMatrix&) = default;
  /// Shape first, then row-major lexicographic on entries.
  friend std::strong_ordering operator<=>(const NatMatrix& a, const NatMatrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> data_;
};

/// All rows x cols matrices with the given row and column sums (contingency tables).
std::vector<NatMatrix> matrices_with_margins(const std::vector<int>& row_sums, const std::vector<int>& col_sums);

/// Symmetric matrices with the given row sums. `diagonal` selects even diagonal
/// entries (loops count twice), zero diagonal, or arbitrary diagonal.
enum class DiagonalRule { Even, Zero, Any };
std::vector<NatMatrix> symmetric_matrices_with_row_sums(const std::vector<int>& row_sums, DiagonalRule diagonal);

}  // namespace tensorinv
