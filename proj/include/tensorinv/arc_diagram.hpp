#pragma once

#include <compare>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tensorinv/nat_matrix.hpp"

namespace tensorinv {

enum class Group { GL, SL, O, SO, Sp };

struct GroupKind {
  Group tag = Group::GL;
  int n = 1;

  /// dim V: 2n for Sp, n otherwise.
  int dim() const { return tag == Group::Sp ? 2 * n : n; }
  /// GL and SL act on V* (+) V, so their diagrams are bipartite.
  bool bipartite() const { return tag == Group::GL || tag == Group::SL; }
  std::string name() const;
  /// Accepts gl, sl, o, so, sp in any case. Throws DomainError otherwise.
  static GroupKind parse(const std::string& tag, int n);

  friend bool operator==(const GroupKind&, const GroupKind&) = default;
};

std::string to_string(Group g);

/// Arc between vertex positions i <= j (i == j is a loop). In a bipartite
/// diagram, starred vertex i sits at position i and unstarred j at p + j.
using Arc = std::pair<int, int>;
using Hyperedge = std::vector<int>;

class ArcDiagram {
 public:
  ArcDiagram() = default;
  /// Normalizes arc orientation and sorts. Throws MalformedDiagramError on an
  /// out-of-range vertex, a non-increasing hyperedge, or (when `p` is given) a
  /// loop or an arc that does not join the two sides.
  ArcDiagram(int m, std::vector<Arc> arcs, std::vector<Hyperedge> hyperedges = {}, std::optional<int> p = std::nullopt);

  /// Bipartite diagram from (starred i, unstarred j) pairs, 1-based on each side.
  /// Hyperedges are given in global positions.
  static ArcDiagram bipartite(int p, int q, const std::vector<std::pair<int, int>>& links,
                              std::vector<Hyperedge> hyperedges = {});

  int m() const { return m_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Hyperedge>& hyperedges() const { return hyperedges_; }
  std::optional<int> split() const { return p_; }
  bool is_bipartite() const { return p_.has_value(); }
  int p() const { return p_.value_or(0); }
  int q() const { return p_ ? m_ - *p_ : 0; }
  bool has_loops() const;
  bool is_starred(int v) const { return p_ && v <= *p_; }

  std::string to_json() const;
  static ArcDiagram from_json(const std::string& text);
  std::string to_dot() const;

  friend bool operator==(const ArcDiagram&, const ArcDiagram&) = default;
  /// Orders by arc matrix (row-major), then hyperedges lexicographically.
  friend std::strong_ordering operator<=>(const ArcDiagram& a, const ArcDiagram& b);

 private:
  int m_ = 0;
  std::vector<Arc> arcs_;
  std::vector<Hyperedge> hyperedges_;
  std::optional<int> p_;
};

/// Per-vertex degrees: loops count twice, each incident hyperedge once.
std::vector<int> degree_sequence(const ArcDiagram& d);
/// Bipartite degrees split as (starred, unstarred).
std::pair<std::vector<int>, std::vector<int>> degree_pair(const ArcDiagram& d);

int max_strict_nesting(const std::vector<Arc>& arcs);
int weak_nonnesting_number(const std::vector<Arc>& arcs);

inline constexpr int kNoThreshold = std::numeric_limits<int>::max();
enum class Side { Starred, Unstarred };

/// Largest admissible position of the l-th vertex of the maximal hyperedge, for
/// l = 1..n, as global vertex positions; kNoThreshold stands for +infinity.
/// SL needs a side; SO ignores it. Other groups throw UnsupportedError.
std::vector<int> hyperedge_thresholds(const ArcDiagram& d, const GroupKind& g, Side side = Side::Starred);

/// Basis membership. Throws MalformedDiagramError on structural mismatch
/// (bipartite flag vs group, hyperedges for GL/O/Sp, loops for Sp).
bool is_admissible(const ArcDiagram& d, const GroupKind& g);

/// Default cap on the total degree accepted by enumerate_basis.
inline constexpr int kDefaultDegreeLimit = 16;

/// Admissible diagrams with the given degree sequence (O, SO, Sp).
std::vector<ArcDiagram> enumerate_basis(const GroupKind& g, const std::vector<int>& degree,
                                        int limit = kDefaultDegreeLimit);
/// Admissible bipartite diagrams with degrees (starred, unstarred) (GL, SL).
std::vector<ArcDiagram> enumerate_basis(const GroupKind& g, const std::vector<int>& starred,
                                        const std::vector<int>& unstarred, int limit = kDefaultDegreeLimit);

/// Biadjacency (p x q) for bipartite diagrams, adjacency with 2 per loop otherwise.
/// Throws MalformedDiagramError if hyperedges are present.
NatMatrix diagram_to_matrix(const ArcDiagram& d);
/// Inverse of diagram_to_matrix. Non-bipartite input must be symmetric with even diagonal.
ArcDiagram matrix_to_diagram(const NatMatrix& a, bool bipartite);

}  // namespace tensorinv
