#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "tensorinv/arc_diagram.hpp"
#include "tensorinv/rational_matrix.hpp"
#include "tensorinv/rsk.hpp"

namespace tensorinv {

/// The bilinear form preserved by the group: none (GL, SL), symmetric b (O, SO),
/// or skew omega (Sp).
struct FormSpec {
  enum class Kind { None, Symmetric, Skew };
  Kind kind = Kind::None;
  RationalMatrix gram;

  /// Identity for b, the block matrix [[0, I], [-I, 0]] for omega.
  static FormSpec standard(const GroupKind& g);
  /// Throws DomainError unless `gram` is symmetric (resp. skew) and nondegenerate.
  static FormSpec symmetric(const RationalMatrix& gram);
  static FormSpec skew(const RationalMatrix& gram);

  Rational pair(const RationalVector& u, const RationalVector& v) const;
};

/// Points for evaluation. Bipartite diagrams read covector i at starred vertex i
/// and vector j at unstarred vertex j; other diagrams read vector v at vertex v.
struct ArgumentTuple {
  std::vector<RationalVector> vectors;
  std::vector<RationalVector> covectors;
};

/// A multilinear or polynomial function of an ArgumentTuple with a fixed signature.
struct Functional {
  int vectors = 0;
  int covectors = 0;
  std::function<Rational(const ArgumentTuple&)> eval;
  std::string label;
};

/// Product of the arc contractions and hyperedge determinants. Arcs {i*, j}
/// give phi_i(v_j); arcs {i, j} give b(v_i, v_j) or omega(v_i, v_j) with i < j;
/// a starred hyperedge is det of its covectors, an unstarred one det of its
/// vectors. Works for any degree sequence (arguments repeat with multiplicity).
Rational evaluate_diagram(const ArcDiagram& d, const GroupKind& g, const FormSpec& form, const ArgumentTuple& args);
/// Same value, restricted to 1-regular diagrams (the tensor invariants).
/// Throws MalformedDiagramError if some vertex degree differs from 1.
Rational evaluate_diagram_functional(const ArcDiagram& d, const GroupKind& g, const FormSpec& form,
                                     const ArgumentTuple& args);

/// GL: bitableau (T on covectors, U on vectors), product of column minors of
/// [phi_i(v_j)]. SL: recording (or insertion) tableau carries d extra leading
/// columns of length n, each contributing a determinant. O: even-rowed tableau,
/// minors of [b(v_i, v_j)] over column pairs. SO: as O, or odd-rowed of length n
/// with the first column giving det(v_I). Sp: even columns, Pfaffians of
/// [omega(v_i, v_j)] per column.
using MonomialSpec = std::variant<Bitableau, Tableau>;
Rational evaluate_standard_monomial(const MonomialSpec& spec, const GroupKind& g, const FormSpec& form,
                                    const ArgumentTuple& points);

/// Index set of the standard monomials of a multidegree: the tableau side of
/// the basis, in the same count as enumerate_basis.
std::vector<MonomialSpec> standard_monomials(const GroupKind& g, const std::vector<int>& degree);
std::vector<MonomialSpec> standard_monomials(const GroupKind& g, const std::vector<int>& starred,
                                             const std::vector<int>& unstarred);

Functional diagram_functional(const ArcDiagram& d, const GroupKind& g, const FormSpec& form);
Functional monomial_functional(const MonomialSpec& spec, const GroupKind& g, const FormSpec& form, int vectors,
                               int covectors);

/// Small-height random rational: numerator in [-7, 7], denominator in [1, 7].
Rational random_rational(std::mt19937_64& rng);
ArgumentTuple random_arguments(int vectors, int covectors, int dim, std::mt19937_64& rng);

/// (I - S)(I + S)^{-1}. Throws DomainError if I + S is singular.
RationalMatrix cayley_transform(const RationalMatrix& s);

/// Exact group element. GL: random invertible. SL: product of elementary
/// matrices. SO, Sp: Cayley transform of a random element of the Lie algebra
/// of the form. O: an SO sample composed with a reflection when `improper`.
RationalMatrix sample_group_element(const GroupKind& g, const FormSpec& form, std::mt19937_64& rng,
                                    bool improper = false);
/// Convenience overload seeding its own generator.
RationalMatrix sample_group_element(const GroupKind& g, const FormSpec& form, std::uint64_t seed);

/// A reflection in the form's orthogonal group (determinant -1).
RationalMatrix reflection(const FormSpec& form, const RationalVector& normal);

/// v -> g v on vectors, phi -> phi g^{-1} on covectors.
ArgumentTuple act(const RationalMatrix& g, const ArgumentTuple& args);

struct InvarianceReport {
  bool invariant = true;
  int checks = 0;
  std::string witness;  // set on failure: group element, arguments, both values
};

/// Compares f(args) and f(g . args) for `trials` sampled elements of `sampler`
/// times `tuples` random argument tuples. Exact equality.
InvarianceReport check_invariance(const Functional& f, const GroupKind& sampler, const FormSpec& form, int trials,
                                  int tuples, std::uint64_t seed);
/// Invariance under one fixed element.
InvarianceReport check_invariance_under(const Functional& f, const RationalMatrix& g, int tuples, std::uint64_t seed);

/// Rank of the matrix of values of the functionals on `sample_count` shared
/// random argument tuples. All functionals must share one signature.
int evaluation_rank(const std::vector<Functional>& fs, int dim, int sample_count, std::uint64_t seed);

}  // namespace tensorinv
