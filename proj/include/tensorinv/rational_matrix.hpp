#pragma once

#include <string>
#include <vector>

#include "tensorinv/numeric.hpp"

namespace tensorinv {

using RationalVector = std::vector<Rational>;

/// Dense matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  static RationalMatrix identity(int n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix from_ints(const std::vector<std::vector<long>>& rows);
  /// Columns given as vectors.
  static RationalMatrix from_columns(const std::vector<RationalVector>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const Rational& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  Rational& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix operator+(const RationalMatrix& other) const;
  RationalMatrix operator-(const RationalMatrix& other) const;
  RationalMatrix operator-() const;
  RationalVector operator*(const RationalVector& v) const;
  /// Row vector times matrix.
  RationalVector left_multiply(const RationalVector& row) const;

  bool is_symmetric() const;
  bool is_skew() const;
  bool is_zero() const;

  std::string to_string() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

Rational det(RationalMatrix a);
/// Throws DomainError when singular.
RationalMatrix inverse(const RationalMatrix& a);
int rank(RationalMatrix a);
/// Rank of `a` reduced mod the prime `p`, or -1 if some denominator is divisible by p.
/// Never exceeds the rank over Q.
int rank_mod(const RationalMatrix& a, unsigned long p);
/// Pfaffian of a skew-symmetric matrix of even order; pf([[0,1],[-1,0]]) = 1.
/// Throws DomainError on odd order or non-skew input.
Rational pfaffian(const RationalMatrix& a);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace tensorinv
