#pragma once

#include "tensorinv/combinatorics.hpp"
#include "tensorinv/nat_matrix.hpp"

namespace tensorinv {

/// Recording tableau T (its weight gives the row sums) and insertion tableau U
/// (weight gives the column sums), of a common shape.
struct Bitableau {
  Tableau recording;
  Tableau insertion;

  const Partition& shape() const { return recording.shape(); }
  friend bool operator==(const Bitableau&, const Bitableau&) = default;
};

/// Row insertion of a word into an (initially empty) tableau.
Tableau insert_word(const std::vector<int>& word);

/// Knuth's correspondence on N-matrices, reading the two-line array row by row.
Bitableau rsk_a(const NatMatrix& a);
/// Inverse of rsk_a. `rows`/`cols` fix the matrix size (default: largest entries).
/// Throws ShapeError if the two tableaux differ in shape or are not semistandard.
NatMatrix rsk_a_inv(const Bitableau& b, int rows = -1, int cols = -1);

/// Even-rowed SSYT with entries in [m] to a symmetric matrix with even diagonal.
/// `m` defaults to the largest entry. Throws ShapeError on an odd row.
NatMatrix rsk_b(const Tableau& t, int m = -1);
/// Symmetric even-diagonal matrix to an even-rowed SSYT. Throws DomainError otherwise.
Tableau rsk_b_inv(const NatMatrix& a);

/// rsk_a_inv(T, T) for an SSYT with even columns; the image has zero trace.
NatMatrix rsk_c(const Tableau& t, int m = -1);
/// Symmetric zero-diagonal matrix back to its even-columned tableau.
Tableau rsk_c_inv(const NatMatrix& a);

/// rsk_a_inv(T, T) for any SSYT; the trace counts the odd-length columns.
NatMatrix rsk_a_diagonal(const Tableau& t, int m = -1);

enum class SupportOrder { Product, Reversed };
/// Largest antichain in the support of `a`. Product: (i,j) <= (i',j') iff
/// i <= i' and j <= j'. Reversed: i <= i' and j >= j'.
int support_width(const NatMatrix& a, SupportOrder order);

}  // namespace tensorinv
