#pragma once

#include <vector>

#include "tensorinv/arc_diagram.hpp"
#include "tensorinv/numeric.hpp"

namespace tensorinv {

/// GL/SL queries use (p, q): p copies of V* and q copies of V, or V^{(x)q} (x) V*^{(x)p}
/// in tensor language. O/SO/Sp queries use m.
struct InvariantQuery {
  GroupKind group;
  int m = 0;
  int p = 0;
  int q = 0;

  static InvariantQuery tensor(const GroupKind& g, int m);
  static InvariantQuery mixed(const GroupKind& g, int p, int q);
};

/// Dimension of the invariant space, from sums over standard Young tableaux.
BigInt dim_invariants(const InvariantQuery& query);

/// Graded dimension of polynomial invariants with the given multidegree, from
/// Kostka numbers (O, SO, Sp).
BigInt graded_dim(const GroupKind& g, const std::vector<int>& degree);
/// GL and SL: multidegree split as (starred, unstarred).
BigInt graded_dim(const GroupKind& g, const std::vector<int>& starred, const std::vector<int>& unstarred);

/// Permutations of [m] with no decreasing subsequence longer than n.
BigInt count_restricted_permutations(int m, int n);

enum class InvolutionMode {
  FpfIncreasing,  // fixed-point-free, longest increasing subsequence <= n
  FpfDecreasing,  // fixed-point-free, longest decreasing subsequence <= 2n
  SoFixedPoints,  // longest increasing subsequence <= n, and 0 or n fixed points
};
BigInt count_restricted_involutions(int m, int n, InvolutionMode mode);

/// Perfect matchings of [m] with no k pairwise crossing arcs.
BigInt count_noncrossing_matchings(int m, int k);

/// Oscillating tableaux of length m from the empty shape back to it, every shape
/// having at most n columns.
BigInt count_oscillating_tableaux(int m, int n);

/// Closed m-step walks with steps +-e_i in the Weyl chamber of Sp(2n)
/// (x_1 >= ... >= x_n >= 0) or of SO(2r) (x_1 >= ... >= x_r, x_{r-1} >= -x_r).
/// SO requires even n = 2r; odd n throws UnsupportedError.
BigInt count_lattice_walks(int m, const GroupKind& g);

/// Value of the dimension once the length constraint is vacuous: m! for GL/SL
/// with p = q = m, and (m-1)!! or 0 for O, SO, Sp.
BigInt stable_dim(Group g, int m);

/// #SYT of the n x d rectangle (the n-dimensional Catalan numbers); the SL
/// dimension for (p, q) = (nd, 0).
BigInt n_dimensional_catalan(int n, int d);

}  // namespace tensorinv
