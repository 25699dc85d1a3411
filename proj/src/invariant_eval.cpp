#include "tensorinv/invariant_eval.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tensorinv/errors.hpp"

namespace tensorinv {

// ---------------------------------------------------------------------------
// Forms

FormSpec FormSpec::standard(const GroupKind& g) {
  switch (g.tag) {
    case Group::O:
    case Group::SO:
      return {Kind::Symmetric, RationalMatrix::identity(g.n)};
    case Group::Sp: {
      int n = g.n;
      RationalMatrix j(2 * n, 2 * n);
      for (int i = 0; i < n; ++i) {
        j(i, n + i) = 1;
        j(n + i, i) = -1;
      }
      return {Kind::Skew, j};
    }
    default:
      return {Kind::None, RationalMatrix::identity(g.n)};
  }
}

FormSpec FormSpec::symmetric(const RationalMatrix& gram) {
  if (!gram.is_symmetric()) throw DomainError("Gram matrix of b must be symmetric");
  if (det(gram) == 0) throw DomainError("Gram matrix of b must be nondegenerate");
  return {Kind::Symmetric, gram};
}

FormSpec FormSpec::skew(const RationalMatrix& gram) {
  if (!gram.is_skew()) throw DomainError("Gram matrix of omega must be skew-symmetric");
  if (det(gram) == 0) throw DomainError("Gram matrix of omega must be nondegenerate");
  return {Kind::Skew, gram};
}

Rational FormSpec::pair(const RationalVector& u, const RationalVector& v) const {
  if (kind == Kind::None) return dot(u, v);
  return dot(u, gram * v);
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

void check_args(int vectors, int covectors, int dim, const ArgumentTuple& args) {
  if (static_cast<int>(args.vectors.size()) != vectors || static_cast<int>(args.covectors.size()) != covectors)
    throw DimensionMismatchError("expected " + std::to_string(vectors) + " vectors and " +
                                 std::to_string(covectors) + " covectors");
  for (const auto& v : args.vectors)
    if (static_cast<int>(v.size()) != dim) throw DimensionMismatchError("vector length differs from dim V");
  for (const auto& v : args.covectors)
    if (static_cast<int>(v.size()) != dim) throw DimensionMismatchError("covector length differs from dim V");
}

int form_dim(const GroupKind& g, const FormSpec& form) {
  if (form.kind != FormSpec::Kind::None && form.gram.rows() != g.dim())
    throw DimensionMismatchError("Gram matrix size differs from dim V");
  return g.dim();
}

Rational det_of(const std::vector<const RationalVector*>& cols) {
  int n = static_cast<int>(cols.size());
  RationalMatrix a(n, n);
  for (int j = 0; j < n; ++j) {
    if (static_cast<int>(cols[j]->size()) != n) throw DimensionMismatchError("hyperedge order differs from dim V");
    for (int i = 0; i < n; ++i) a(i, j) = (*cols[j])[i];
  }
  return det(a);
}

}  // namespace

Rational evaluate_diagram(const ArcDiagram& d, const GroupKind& g, const FormSpec& form, const ArgumentTuple& args) {
  int dim = form_dim(g, form);
  if (d.is_bipartite() != g.bipartite()) throw MalformedDiagramError("diagram type does not match the group");
  Rational value = 1;
  if (d.is_bipartite()) {
    int p = d.p();
    check_args(d.q(), p, dim, args);
    for (auto [i, j] : d.arcs()) value *= dot(args.covectors[i - 1], args.vectors[j - p - 1]);
    for (const auto& h : d.hyperedges()) {
      std::vector<const RationalVector*> cols;
      for (int v : h) cols.push_back(v <= p ? &args.covectors[v - 1] : &args.vectors[v - p - 1]);
      value *= det_of(cols);
    }
    return value;
  }
  check_args(d.m(), 0, dim, args);
  if (form.kind == FormSpec::Kind::None) throw DomainError(g.name() + " needs a bilinear form");
  for (auto [i, j] : d.arcs()) value *= form.pair(args.vectors[i - 1], args.vectors[j - 1]);
  for (const auto& h : d.hyperedges()) {
    std::vector<const RationalVector*> cols;
    for (int v : h) cols.push_back(&args.vectors[v - 1]);
    value *= det_of(cols);
  }
  return value;
}

Rational evaluate_diagram_functional(const ArcDiagram& d, const GroupKind& g, const FormSpec& form,
                                     const ArgumentTuple& args) {
  for (int x : degree_sequence(d))
    if (x != 1) throw MalformedDiagramError("tensor functionals need a 1-regular diagram");
  return evaluate_diagram(d, g, form, args);
}

namespace {

const RationalVector& point(const std::vector<RationalVector>& pts, int index) {
  if (index < 1 || index > static_cast<int>(pts.size()))
    throw DimensionMismatchError("tableau entry " + std::to_string(index) + " has no matching point");
  return pts[index - 1];
}

// Product over columns of det[phi_{T_c[a]}(v_{U_c[b]})].
Rational gl_monomial(const Tableau& t, const Tableau& u, const ArgumentTuple& pts) {
  if (t.shape() != u.shape()) throw ShapeError("bitableau shapes differ");
  Rational value = 1;
  for (int c = 0; c < t.num_columns(); ++c) {
    auto tc = t.column(c), uc = u.column(c);
    int k = static_cast<int>(tc.size());
    RationalMatrix minor(k, k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) minor(a, b) = dot(point(pts.covectors, tc[a]), point(pts.vectors, uc[b]));
    value *= det(minor);
  }
  return value;
}

Rational o_monomial(const Tableau& t, const FormSpec& form, const ArgumentTuple& pts) {
  if (!t.shape().has_even_rows()) throw ShapeError("O monomials need even rows");
  Rational value = 1;
  for (int c = 0; c + 1 < t.num_columns(); c += 2) {
    auto c1 = t.column(c), c2 = t.column(c + 1);
    int k = static_cast<int>(c1.size());
    RationalMatrix minor(k, k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) minor(a, b) = form.pair(point(pts.vectors, c1[a]), point(pts.vectors, c2[b]));
    value *= det(minor);
  }
  return value;
}

Rational sp_monomial(const Tableau& t, const FormSpec& form, const ArgumentTuple& pts) {
  if (!t.shape().has_even_columns()) throw ShapeError("Sp monomials need even columns");
  Rational value = 1;
  for (int c = 0; c < t.num_columns(); ++c) {
    auto col = t.column(c);
    int k = static_cast<int>(col.size());
    RationalMatrix block(k, k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        if (a != b) block(a, b) = form.pair(point(pts.vectors, col[a]), point(pts.vectors, col[b]));
    value *= pfaffian(block);
  }
  return value;
}

Rational det_columns(const std::vector<std::vector<int>>& columns, const std::vector<RationalVector>& pts) {
  Rational value = 1;
  for (const auto& col : columns) {
    std::vector<const RationalVector*> vs;
    for (int x : col) vs.push_back(&point(pts, x));
    value *= det_of(vs);
  }
  return value;
}

}  // namespace

Rational evaluate_standard_monomial(const MonomialSpec& spec, const GroupKind& g, const FormSpec& form,
                                   const ArgumentTuple& points) {
  const int n = g.n;
  switch (g.tag) {
    case Group::GL: {
      const auto* b = std::get_if<Bitableau>(&spec);
      if (!b) throw ShapeError("GL monomials are indexed by bitableaux");
      return gl_monomial(b->recording, b->insertion, points);
    }
    case Group::SL: {
      const auto* b = std::get_if<Bitableau>(&spec);
      if (!b) throw ShapeError("SL monomials are indexed by bitableaux");
      const auto& t = b->recording;
      const auto& u = b->insertion;
      if (t.shape() == u.shape()) return gl_monomial(t, u, points);
      int dt = t.num_columns() - u.num_columns();
      if (dt > 0 && t.shape() == add_rectangle(u.shape(), dt, n)) {
        auto [cols, rest] = split_leading_columns(t, dt);
        return det_columns(cols, points.covectors) * gl_monomial(rest, u, points);
      }
      if (dt < 0 && u.shape() == add_rectangle(t.shape(), -dt, n)) {
        auto [cols, rest] = split_leading_columns(u, -dt);
        return det_columns(cols, points.vectors) * gl_monomial(t, rest, points);
      }
      throw ShapeError("SL bitableau shapes must differ by an n-row rectangle");
    }
    case Group::O:
    case Group::SO: {
      const auto* t = std::get_if<Tableau>(&spec);
      if (!t) throw ShapeError("orthogonal monomials are indexed by tableaux");
      if (t->shape().has_even_rows()) {
        if (t->shape().length() > n) throw ShapeError("tableau longer than n");
        return o_monomial(*t, form, points);
      }
      if (g.tag == Group::SO && t->shape().has_odd_rows() && t->shape().length() == n) {
        auto [cols, rest] = split_leading_columns(*t, 1);
        return det_columns(cols, points.vectors) * o_monomial(rest, form, points);
      }
      throw ShapeError("tableau shape is not valid for " + g.name());
    }
    case Group::Sp: {
      const auto* t = std::get_if<Tableau>(&spec);
      if (!t) throw ShapeError("Sp monomials are indexed by tableaux");
      return sp_monomial(*t, form, points);
    }
  }
  return 0;
}

Functional diagram_functional(const ArcDiagram& d, const GroupKind& g, const FormSpec& form) {
  Functional f;
  if (d.is_bipartite()) {
    f.covectors = d.p();
    f.vectors = d.q();
  } else {
    f.vectors = d.m();
  }
  f.eval = [d, g, form](const ArgumentTuple& a) { return evaluate_diagram(d, g, form, a); };
  f.label = d.to_json();
  return f;
}

Functional monomial_functional(const MonomialSpec& spec, const GroupKind& g, const FormSpec& form, int vectors,
                               int covectors) {
  Functional f;
  f.vectors = vectors;
  f.covectors = covectors;
  f.eval = [spec, g, form](const ArgumentTuple& a) { return evaluate_standard_monomial(spec, g, form, a); };
  if (const auto* t = std::get_if<Tableau>(&spec)) f.label = t->to_json();
  else {
    const auto& b = std::get<Bitableau>(spec);
    f.label = "{\"recording\":" + b.recording.to_json() + ",\"insertion\":" + b.insertion.to_json() + "}";
  }
  return f;
}

// ---------------------------------------------------------------------------
// Sampling

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 7);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

ArgumentTuple random_arguments(int vectors, int covectors, int dim, std::mt19937_64& rng) {
  ArgumentTuple a;
  for (int k = 0; k < vectors; ++k) {
    a.vectors.emplace_back(dim);
    for (auto& x : a.vectors.back()) x = random_rational(rng);
  }
  for (int k = 0; k < covectors; ++k) {
    a.covectors.emplace_back(dim);
    for (auto& x : a.covectors.back()) x = random_rational(rng);
  }
  return a;
}

RationalMatrix cayley_transform(const RationalMatrix& s) {
  auto id = RationalMatrix::identity(s.rows());
  return (id - s) * inverse(id + s);
}

RationalMatrix reflection(const FormSpec& form, const RationalVector& u) {
  Rational norm = form.pair(u, u);
  if (norm == 0) throw DomainError("reflection needs a non-isotropic normal");
  int n = static_cast<int>(u.size());
  auto bu = form.gram * u;  // x -> x - 2 b(u, x) / b(u, u) u
  RationalMatrix r = RationalMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) -= 2 * u[i] * bu[j] / norm;
  return r;
}

namespace {

RationalMatrix random_matrix(int n, std::mt19937_64& rng) {
  RationalMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = random_rational(rng);
  return a;
}

RationalMatrix isometry_sample(const FormSpec& form, std::mt19937_64& rng) {
  int n = form.gram.rows();
  auto binv = inverse(form.gram);
  for (int attempt = 0; attempt < 100; ++attempt) {
    // K skew for symmetric B, symmetric for skew B; then S = B^{-1} K satisfies S^T B + B S = 0.
    RationalMatrix k(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        if (form.kind == FormSpec::Kind::Symmetric) {
          if (i == j) continue;
          k(i, j) = random_rational(rng);
          k(j, i) = -k(i, j);
        } else {
          k(i, j) = k(j, i) = random_rational(rng);
        }
      }
    auto s = binv * k;
    auto id = RationalMatrix::identity(n);
    if (det(id + s) == 0) continue;
    return cayley_transform(s);
  }
  throw DomainError("could not sample a Cayley isometry");
}

}  // namespace

RationalMatrix sample_group_element(const GroupKind& g, const FormSpec& form, std::mt19937_64& rng, bool improper) {
  int n = g.dim();
  switch (g.tag) {
    case Group::GL:
      for (;;) {
        auto a = random_matrix(n, rng);
        if (det(a) != 0) return a;
      }
    case Group::SL: {
      auto a = RationalMatrix::identity(n);
      if (n < 2) return a;
      std::uniform_int_distribution<int> idx(0, n - 1);
      for (int k = 0; k < 3 * n; ++k) {
        int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        auto e = RationalMatrix::identity(n);
        e(i, j) = random_rational(rng);
        a = a * e;
      }
      return a;
    }
    case Group::O:
    case Group::SO:
    case Group::Sp: {
      if (form.gram.rows() != n) throw DimensionMismatchError("Gram matrix size differs from dim V");
      auto a = isometry_sample(form, rng);
      if (improper && g.tag == Group::O) {
        for (;;) {
          RationalVector u(n);
          for (auto& x : u) x = random_rational(rng);
          if (form.pair(u, u) != 0) return a * reflection(form, u);
        }
      }
      return a;
    }
  }
  return RationalMatrix::identity(n);
}

RationalMatrix sample_group_element(const GroupKind& g, const FormSpec& form, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_group_element(g, form, rng);
}

ArgumentTuple act(const RationalMatrix& g, const ArgumentTuple& args) {
  ArgumentTuple out;
  for (const auto& v : args.vectors) out.vectors.push_back(g * v);
  if (!args.covectors.empty()) {
    auto ginv = inverse(g);
    for (const auto& phi : args.covectors) out.covectors.push_back(ginv.left_multiply(phi));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Invariance and rank

namespace {

std::string describe(const RationalMatrix& g, const ArgumentTuple& a, const Rational& before, const Rational& after) {
  std::ostringstream os;
  os << "g=" << g.to_string() << " vectors=[";
  for (std::size_t k = 0; k < a.vectors.size(); ++k) {
    os << (k ? "," : "") << "[";
    for (std::size_t i = 0; i < a.vectors[k].size(); ++i) os << (i ? "," : "") << a.vectors[k][i].get_str();
    os << "]";
  }
  os << "] covectors=[";
  for (std::size_t k = 0; k < a.covectors.size(); ++k) {
    os << (k ? "," : "") << "[";
    for (std::size_t i = 0; i < a.covectors[k].size(); ++i) os << (i ? "," : "") << a.covectors[k][i].get_str();
    os << "]";
  }
  os << "] f=" << before.get_str() << " f(g.x)=" << after.get_str();
  return os.str();
}

bool compare(const Functional& f, const RationalMatrix& g, const ArgumentTuple& args, InvarianceReport& report) {
  Rational before = f.eval(args);
  Rational after = f.eval(act(g, args));
  ++report.checks;
  if (before == after) return true;
  report.invariant = false;
  report.witness = describe(g, args, before, after);
  return false;
}

}  // namespace

InvarianceReport check_invariance(const Functional& f, const GroupKind& sampler, const FormSpec& form, int trials,
                                  int tuples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  InvarianceReport report;
  int dim = sampler.dim();
  for (int t = 0; t < trials; ++t) {
    // For O, every other sample has determinant -1.
    auto g = sample_group_element(sampler, form, rng, t % 2 == 1);
    for (int k = 0; k < tuples; ++k) {
      auto args = random_arguments(f.vectors, f.covectors, dim, rng);
      if (!compare(f, g, args, report)) return report;
    }
  }
  return report;
}

InvarianceReport check_invariance_under(const Functional& f, const RationalMatrix& g, int tuples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  InvarianceReport report;
  for (int k = 0; k < tuples; ++k) {
    auto args = random_arguments(f.vectors, f.covectors, g.rows(), rng);
    if (!compare(f, g, args, report)) return report;
  }
  return report;
}

int evaluation_rank(const std::vector<Functional>& fs, int dim, int sample_count, std::uint64_t seed) {
  if (fs.empty()) return 0;
  for (const auto& f : fs)
    if (f.vectors != fs.front().vectors || f.covectors != fs.front().covectors)
      throw DimensionMismatchError("functionals differ in signature");
  std::mt19937_64 rng(seed);
  RationalMatrix values(static_cast<int>(fs.size()), sample_count);
  for (int s = 0; s < sample_count; ++s) {
    auto args = random_arguments(fs.front().vectors, fs.front().covectors, dim, rng);
    for (std::size_t k = 0; k < fs.size(); ++k) values(static_cast<int>(k), s) = fs[k].eval(args);
  }
  // Rank mod p is a lower bound, so a full rank there is exact.
  int full = std::min(values.rows(), values.cols());
  if (rank_mod(values, 2305843009213693951UL) == full) return full;
  return rank(values);
}

}  // namespace tensorinv

namespace tensorinv {

namespace {

constexpr int kMonomialBoxLimit = 24;

std::vector<Tableau> weighted(const Partition& lambda, const std::vector<int>& weight) {
  return enumerate_ssyt(lambda, static_cast<int>(weight.size()), weight, kMonomialBoxLimit);
}

}  // namespace

std::vector<MonomialSpec> standard_monomials(const GroupKind& g, const std::vector<int>& degree) {
  if (g.bipartite()) throw DomainError(g.name() + " needs a (starred, unstarred) degree pair");
  int total = std::accumulate(degree.begin(), degree.end(), 0);
  std::vector<MonomialSpec> out;
  for (const auto& lambda : partitions_of(total, static_cast<int>(degree.size()))) {
    bool keep = false;
    switch (g.tag) {
      case Group::O: keep = lambda.length() <= g.n && lambda.has_even_rows(); break;
      case Group::SO:
        keep = (lambda.length() <= g.n && lambda.has_even_rows()) ||
               (lambda.length() == g.n && lambda.has_odd_rows());
        break;
      default: keep = lambda.length() <= 2 * g.n && lambda.has_even_columns(); break;
    }
    if (!keep) continue;
    for (auto& t : weighted(lambda, degree)) out.emplace_back(std::move(t));
  }
  return out;
}

std::vector<MonomialSpec> standard_monomials(const GroupKind& g, const std::vector<int>& starred,
                                             const std::vector<int>& unstarred) {
  if (!g.bipartite()) throw DomainError(g.name() + " takes a single degree vector");
  int ds = std::accumulate(starred.begin(), starred.end(), 0);
  int de = std::accumulate(unstarred.begin(), unstarred.end(), 0);
  std::vector<MonomialSpec> out;
  int d = 0;
  if (g.tag == Group::GL) {
    if (ds != de) return out;
  } else {
    if ((ds - de) % g.n != 0) return out;
    d = (ds - de) / g.n;
  }
  for (const auto& lambda : partitions_of(std::min(ds, de), g.n)) {
    Partition ts = d > 0 ? add_rectangle(lambda, d, g.n) : lambda;
    Partition us = d < 0 ? add_rectangle(lambda, -d, g.n) : lambda;
    auto left = weighted(ts, starred);
    if (left.empty()) continue;
    auto right = weighted(us, unstarred);
    for (const auto& t : left)
      for (const auto& u : right) out.emplace_back(Bitableau{t, u});
  }
  return out;
}

}  // namespace tensorinv
