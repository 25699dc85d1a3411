#include "tensorinv/rational_matrix.hpp"

#include <sstream>
#include <string>
#include <vector>
#include <utility>

#include "tensorinv/errors.hpp"

namespace tensorinv {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix a(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 1;
  return a;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return {};
  RationalMatrix a(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < a.rows_; ++i) {
    if (static_cast<int>(rows[i].size()) != a.cols_) throw DimensionMismatchError("ragged matrix rows");
    for (int j = 0; j < a.cols_; ++j) a(i, j) = rows[i][j];
  }
  return a;
}

RationalMatrix RationalMatrix::from_ints(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (long x : row) r.back().emplace_back(x);
  }
  return from_rows(r);
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& cols) {
  if (cols.empty()) return {};
  RationalMatrix a(static_cast<int>(cols.front().size()), static_cast<int>(cols.size()));
  for (int j = 0; j < a.cols_; ++j) {
    if (static_cast<int>(cols[j].size()) != a.rows_) throw DimensionMismatchError("columns differ in length");
    for (int i = 0; i < a.rows_; ++i) a(i, j) = cols[j][i];
  }
  return a;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatchError("matrix product shape mismatch");
  RationalMatrix c(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) c(i, j) += x * o(k, j);
    }
  return c;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatchError("matrix sum shape mismatch");
  RationalMatrix c = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) c.data_[k] += o.data_[k];
  return c;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const { return *this + (-o); }

RationalMatrix RationalMatrix::operator-() const {
  RationalMatrix c = *this;
  for (auto& x : c.data_) x = -x;
  return c;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw DimensionMismatchError("matrix-vector shape mismatch");
  RationalVector out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

RationalVector RationalMatrix::left_multiply(const RationalVector& row) const {
  if (static_cast<int>(row.size()) != rows_) throw DimensionMismatchError("vector-matrix shape mismatch");
  RationalVector out(cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[j] += row[i] * (*this)(i, j);
  return out;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool RationalMatrix::is_skew() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

std::string RationalMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Rational det(RationalMatrix a) {
  if (!a.is_square()) throw DimensionMismatchError("determinant of a non-square matrix");
  int n = a.rows();
  Rational d = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      d = -d;
    }
    d *= a(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (int j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return d;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionMismatchError("inverse of a non-square matrix");
  int n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) throw DomainError("matrix is singular");
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    Rational s = 1 / a(c, c);
    for (int j = 0; j < n; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Rational f = a(r, c);
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

int rank(RationalMatrix a) {
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    for (int i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

int rank_mod(const RationalMatrix& a, unsigned long p) {
  using u128 = unsigned __int128;
  const mpz_class modulus(std::to_string(p));
  auto mul = [p](unsigned long x, unsigned long y) { return static_cast<unsigned long>(static_cast<u128>(x) * y % p); };
  auto power = [&](unsigned long x, unsigned long e) {
    unsigned long r = 1;
    for (; e; e >>= 1, x = mul(x, x))
      if (e & 1) r = mul(r, x);
    return r;
  };
  auto reduce = [&](const mpz_class& x) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
    return std::stoul(r.get_str());
  };
  std::vector<std::vector<unsigned long>> m(a.rows(), std::vector<unsigned long>(a.cols()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      unsigned long den = reduce(a(i, j).get_den());
      if (den == 0) return -1;
      m[i][j] = mul(reduce(a(i, j).get_num()), power(den, p - 2));
    }
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int piv = r;
    while (piv < a.rows() && m[piv][c] == 0) ++piv;
    if (piv == a.rows()) continue;
    std::swap(m[piv], m[r]);
    unsigned long inv = power(m[r][c], p - 2);
    for (int i = r + 1; i < a.rows(); ++i) {
      if (m[i][c] == 0) continue;
      unsigned long f = mul(m[i][c], inv);
      for (int j = c; j < a.cols(); ++j) m[i][j] = (m[i][j] + p - mul(f, m[r][j])) % p;
    }
    ++r;
  }
  return r;
}

Rational pfaffian(const RationalMatrix& m) {
  if (!m.is_square() || m.rows() % 2 != 0) throw DomainError("pfaffian needs a square matrix of even order");
  if (!m.is_skew()) throw DomainError("pfaffian needs a skew-symmetric matrix");
  // Skew Gaussian elimination: pivot on (0,1), clear rows/columns 0 and 1, recurse.
  RationalMatrix a = m;
  int n = a.rows();
  Rational pf = 1;
  for (int k = 0; k < n; k += 2) {
    int piv = k + 1;
    while (piv < n && a(k, piv) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k + 1) {
      // Simultaneous swap of rows and columns flips the sign.
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(k + 1, j));
      for (int i = 0; i < n; ++i) std::swap(a(i, piv), a(i, k + 1));
      pf = -pf;
    }
    Rational p = a(k, k + 1);
    pf *= p;
    for (int i = k + 2; i < n; ++i) {
      // Eliminate entries in columns k and k+1 of row i using rows k, k+1, keeping skew symmetry.
      Rational f1 = a(i, k + 1) / p;   // multiple of row k
      Rational f2 = -a(i, k) / p;      // multiple of row k+1
      for (int j = 0; j < n; ++j) a(i, j) -= f1 * a(k, j) + f2 * a(k + 1, j);
      for (int j = 0; j < n; ++j) a(j, i) -= f1 * a(j, k) + f2 * a(j, k + 1);
    }
  }
  return pf;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DimensionMismatchError("dot product length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace tensorinv
