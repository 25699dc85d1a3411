#include <random>

#include "doctest.h"
#include "tensorinv/errors.hpp"
#include "tensorinv/invariant_eval.hpp"

using namespace tensorinv;

namespace {

RationalVector basis_vector(int dim, int i) {
  RationalVector v(dim, 0);
  v[i] = 1;
  return v;
}

Rational det3(const RationalVector& a, const RationalVector& b, const RationalVector& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1]) + c[0] * (a[1] * b[2] - a[2] * b[1]);
}

std::vector<Functional> functionals(const std::vector<ArcDiagram>& basis, const GroupKind& g, const FormSpec& form) {
  std::vector<Functional> fs;
  for (const auto& d : basis) fs.push_back(diagram_functional(d, g, form));
  return fs;
}

bool preserves(const RationalMatrix& g, const RationalMatrix& gram) { return g.transpose() * gram * g == gram; }

}  // namespace

TEST_CASE("diagram evaluation examples") {
  GroupKind gl1{Group::GL, 1};
  ArgumentTuple a{{{1}}, {{1}}};
  CHECK(evaluate_diagram_functional(ArcDiagram::bipartite(1, 1, {{1, 1}}), gl1, FormSpec::standard(gl1), a) == 1);

  GroupKind o2{Group::O, 2};
  ArgumentTuple b{{basis_vector(2, 0), basis_vector(2, 0)}, {}};
  CHECK(evaluate_diagram_functional(ArcDiagram(2, {{1, 2}}), o2, FormSpec::standard(o2), b) == 1);

  CHECK_THROWS_AS(evaluate_diagram_functional(ArcDiagram(2, {{1, 1}}), o2, FormSpec::standard(o2), b),
                  MalformedDiagramError);
  ArgumentTuple short_args{{basis_vector(2, 0)}, {}};
  CHECK_THROWS_AS(evaluate_diagram_functional(ArcDiagram(2, {{1, 2}}), o2, FormSpec::standard(o2), short_args),
                  DimensionMismatchError);
}

TEST_CASE("SO(3) functional on fifteen vectors") {
  GroupKind so3{Group::SO, 3};
  auto form = FormSpec::standard(so3);
  ArcDiagram d(15, {{2, 5}, {4, 13}, {6, 12}, {8, 15}, {9, 14}, {10, 11}}, {{1, 3, 7}});
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto args = random_arguments(15, 0, 3, rng);
    const auto& v = args.vectors;
    auto b = [&](int i, int j) { return dot(v[i - 1], v[j - 1]); };
    Rational expected = det3(v[0], v[2], v[6]) * b(2, 5) * b(4, 13) * b(6, 12) * b(8, 15) * b(9, 14) * b(10, 11);
    CHECK(evaluate_diagram_functional(d, so3, form, args) == expected);
  }
  ArgumentTuple standard;
  for (int k = 0; k < 15; ++k) standard.vectors.push_back(basis_vector(3, 0));
  standard.vectors[2] = basis_vector(3, 1);
  standard.vectors[6] = basis_vector(3, 2);
  CHECK(evaluate_diagram_functional(d, so3, form, standard) == 1);
  std::swap(standard.vectors[2], standard.vectors[6]);
  CHECK(evaluate_diagram_functional(d, so3, form, standard) == -1);
}

TEST_CASE("standard monomial examples") {
  std::mt19937_64 rng(2);
  GroupKind gl2{Group::GL, 2};
  auto a = random_arguments(1, 1, 2, rng);
  Bitableau one{Tableau(std::vector<std::vector<int>>{{1}}), Tableau(std::vector<std::vector<int>>{{1}})};
  CHECK(evaluate_standard_monomial(one, gl2, FormSpec::standard(gl2), a) == dot(a.covectors[0], a.vectors[0]));

  GroupKind o2{Group::O, 2};
  auto b = random_arguments(2, 0, 2, rng);
  CHECK(evaluate_standard_monomial(Tableau({{1, 2}}), o2, FormSpec::standard(o2), b) ==
        dot(b.vectors[0], b.vectors[1]));

  GroupKind sp1{Group::Sp, 1};
  auto form = FormSpec::standard(sp1);
  auto c = random_arguments(2, 0, 2, rng);
  CHECK(evaluate_standard_monomial(Tableau({{1}, {2}}), sp1, form, c) ==
        evaluate_diagram_functional(ArcDiagram(2, {{1, 2}}), sp1, form, c));
  CHECK(evaluate_standard_monomial(Tableau({{1}, {2}}), sp1, form, c) == form.pair(c.vectors[0], c.vectors[1]));

  CHECK_THROWS_AS(evaluate_standard_monomial(Tableau(std::vector<std::vector<int>>{{1}}), o2, FormSpec::standard(o2), b), ShapeError);
  CHECK_THROWS_AS(evaluate_standard_monomial(one, o2, FormSpec::standard(o2), b), ShapeError);
}

TEST_CASE("standard monomials have the multidegree of their weight") {
  std::mt19937_64 rng(17);
  const Rational c(3, 2);
  std::vector<std::vector<int>> degrees{{1, 1}, {1, 1, 1, 1}, {2, 1, 1}, {1, 2, 2}, {2, 2}, {1, 1, 1, 1, 1}, {3, 1},
                                        {1, 1, 1}};
  for (auto tag : {Group::O, Group::SO, Group::Sp})
    for (int n = 1; n <= 3; ++n) {
      GroupKind g{tag, n};
      auto form = FormSpec::standard(g);
      for (const auto& d : degrees)
        for (const auto& spec : standard_monomials(g, d)) {
          const auto& t = std::get<Tableau>(spec);
          auto wt = t.weight(static_cast<int>(d.size()));
          CHECK(wt == d);
          auto pts = random_arguments(static_cast<int>(d.size()), 0, g.dim(), rng);
          Rational base = evaluate_standard_monomial(spec, g, form, pts);
          for (std::size_t i = 0; i < d.size(); ++i) {
            auto scaled = pts;
            for (auto& x : scaled.vectors[i]) x *= c;
            Rational factor = 1;
            for (int k = 0; k < wt[i]; ++k) factor *= c;
            CHECK(evaluate_standard_monomial(spec, g, form, scaled) == base * factor);
          }
        }
    }
  std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs{
      {{1, 1}, {1, 1}}, {{2, 1}, {1, 1, 1}}, {{1, 1, 1}, {}}, {{2, 2}, {}}, {{1}, {1, 2}}, {{1, 1, 1, 1}, {1}}};
  for (auto tag : {Group::GL, Group::SL})
    for (int n = 1; n <= 3; ++n) {
      GroupKind g{tag, n};
      auto form = FormSpec::standard(g);
      for (const auto& [s, u] : pairs)
        for (const auto& spec : standard_monomials(g, s, u)) {
          auto pts = random_arguments(static_cast<int>(u.size()), static_cast<int>(s.size()), g.dim(), rng);
          Rational base = evaluate_standard_monomial(spec, g, form, pts);
          for (std::size_t i = 0; i < s.size(); ++i) {
            auto scaled = pts;
            for (auto& x : scaled.covectors[i]) x *= c;
            Rational factor = 1;
            for (int k = 0; k < s[i]; ++k) factor *= c;
            CHECK(evaluate_standard_monomial(spec, g, form, scaled) == base * factor);
          }
          for (std::size_t j = 0; j < u.size(); ++j) {
            auto scaled = pts;
            for (auto& x : scaled.vectors[j]) x *= c;
            Rational factor = 1;
            for (int k = 0; k < u[j]; ++k) factor *= c;
            CHECK(evaluate_standard_monomial(spec, g, form, scaled) == base * factor);
          }
        }
    }
}

TEST_CASE("Cayley samples preserve their forms") {
  CHECK(cayley_transform(RationalMatrix(3, 3)) == RationalMatrix::identity(3));
  auto rot = cayley_transform(RationalMatrix::from_ints({{0, 1}, {-1, 0}}));
  CHECK(rot.transpose() * rot == RationalMatrix::identity(2));
  CHECK(rot == RationalMatrix::from_ints({{0, -1}, {1, 0}}));
  CHECK_THROWS_AS(cayley_transform(RationalMatrix::from_ints({{-1, 0}, {0, 0}})), DomainError);

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GroupKind sp1{Group::Sp, 1}, sp2{Group::Sp, 2}, so3{Group::SO, 3}, o3{Group::O, 3}, sl3{Group::SL, 3};
    auto j1 = FormSpec::standard(sp1);
    auto g = sample_group_element(sp1, j1, seed);
    CHECK(preserves(g, j1.gram));
    auto j2 = FormSpec::standard(sp2);
    CHECK(preserves(sample_group_element(sp2, j2, seed), j2.gram));
    auto b = FormSpec::standard(so3);
    auto h = sample_group_element(so3, b, seed);
    CHECK(preserves(h, b.gram));
    CHECK(det(h) == 1);
    std::mt19937_64 rng(seed);
    auto r = sample_group_element(o3, b, rng, true);
    CHECK(preserves(r, b.gram));
    CHECK(det(r) == -1);
    CHECK(det(sample_group_element(sl3, FormSpec::standard(sl3), seed)) == 1);
    CHECK(det(sample_group_element(GroupKind{Group::GL, 3}, FormSpec::standard(sl3), seed)) != 0);
  }
}

TEST_CASE("nonstandard Gram matrices") {
  auto gram = RationalMatrix::from_ints({{2, 1, 0}, {1, 3, 1}, {0, 1, 1}});
  auto b = FormSpec::symmetric(gram);
  GroupKind so3{Group::SO, 3};
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto g = sample_group_element(so3, b, seed);
    CHECK(preserves(g, gram));
  }
  auto omega = FormSpec::skew(RationalMatrix::from_ints({{0, 2, 1, 0}, {-2, 0, 0, 1}, {-1, 0, 0, 3}, {0, -1, -3, 0}}));
  GroupKind sp2{Group::Sp, 2};
  CHECK(preserves(sample_group_element(sp2, omega, 9), omega.gram));
  for (const auto& d : enumerate_basis(sp2, std::vector<int>(4, 1)))
    CHECK(check_invariance(diagram_functional(d, sp2, omega), sp2, omega, 5, 3, 1).invariant);
  for (const auto& d : enumerate_basis(so3, std::vector<int>(5, 1)))
    CHECK(check_invariance(diagram_functional(d, so3, b), so3, b, 5, 3, 1).invariant);
  CHECK_THROWS_AS(FormSpec::symmetric(RationalMatrix::from_ints({{1, 1}, {1, 1}})), DomainError);
  CHECK_THROWS_AS(FormSpec::skew(RationalMatrix::from_ints({{1, 1}, {1, 1}})), DomainError);
}

TEST_CASE("check_invariance") {
  GroupKind gl3{Group::GL, 3};
  auto arc = diagram_functional(ArcDiagram::bipartite(2, 2, {{1, 2}, {2, 1}}), gl3, FormSpec::standard(gl3));
  auto rep = check_invariance(arc, gl3, FormSpec::standard(gl3), 20, 5, 1);
  CHECK(rep.invariant);
  CHECK(rep.checks == 100);

  GroupKind sp1{Group::Sp, 1};
  auto form = FormSpec::standard(sp1);
  auto matching = diagram_functional(ArcDiagram(2, {{1, 2}}), sp1, form);
  auto stretch = RationalMatrix::from_ints({{2, 0}, {0, 1}});
  auto bad = check_invariance_under(matching, stretch, 5, 3);
  CHECK_FALSE(bad.invariant);
  CHECK(bad.witness.find("f(g.x)") != std::string::npos);

  GroupKind so2{Group::SO, 2};
  auto b = FormSpec::standard(so2);
  auto hyper = diagram_functional(ArcDiagram(2, {}, {{1, 2}}), so2, b);
  CHECK(check_invariance(hyper, so2, b, 20, 5, 4).invariant);
  auto flip = reflection(b, RationalVector{1, 2});
  CHECK(det(flip) == -1);
  CHECK(preserves(flip, b.gram));
  CHECK_FALSE(check_invariance_under(hyper, flip, 3, 1).invariant);
  CHECK_FALSE(check_invariance(hyper, GroupKind{Group::O, 2}, b, 4, 2, 4).invariant);
  CHECK(check_invariance(diagram_functional(ArcDiagram(2, {{1, 2}}), so2, b), GroupKind{Group::O, 2}, b, 20, 5, 4)
            .invariant);
}

TEST_CASE("evaluation rank") {
  GroupKind so2{Group::SO, 2};
  auto b = FormSpec::standard(so2);
  auto basis = enumerate_basis(so2, {1, 1});
  auto fs = functionals(basis, so2, b);
  CHECK(evaluation_rank(fs, 2, 6, 1) == 2);
  CHECK(evaluation_rank({fs[0], fs[0]}, 2, 6, 1) == 1);

  GroupKind sp2{Group::Sp, 2};
  auto sp = functionals(enumerate_basis(sp2, std::vector<int>(6, 1)), sp2, FormSpec::standard(sp2));
  REQUIRE(sp.size() == 14);
  CHECK(evaluation_rank(sp, 4, 30, 1) == 14);

  auto mixed = fs;
  mixed.push_back(diagram_functional(ArcDiagram(4, {{1, 2}, {3, 4}}), so2, b));
  CHECK_THROWS_AS(evaluation_rank(mixed, 2, 4, 1), DimensionMismatchError);
}

TEST_CASE("standard monomials are linearly independent and match the basis count") {
  std::vector<std::vector<int>> degrees{{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {1, 1, 1, 1, 1, 1}, {2, 1, 2, 1}};
  for (auto tag : {Group::O, Group::SO, Group::Sp})
    for (int n = 1; n <= 3; ++n) {
      GroupKind g{tag, n};
      auto form = FormSpec::standard(g);
      for (const auto& d : degrees) {
        auto ms = standard_monomials(g, d);
        auto basis = enumerate_basis(g, d);
        CHECK(ms.size() == basis.size());
        std::vector<Functional> fs;
        for (const auto& s : ms) fs.push_back(monomial_functional(s, g, form, static_cast<int>(d.size()), 0));
        int samples = 2 * static_cast<int>(fs.size()) + 2;
        CHECK(evaluation_rank(fs, g.dim(), samples, 3) == static_cast<int>(fs.size()));
        CHECK(evaluation_rank(functionals(basis, g, form), g.dim(), samples, 3) == static_cast<int>(basis.size()));
      }
    }
  std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs{
      {{1, 1, 1}, {1, 1, 1}}, {{2, 1}, {1, 2}}, {{1, 1, 1, 1}, {1, 1}}, {{2, 2}, {}}};
  for (auto tag : {Group::GL, Group::SL})
    for (int n = 1; n <= 3; ++n) {
      GroupKind g{tag, n};
      auto form = FormSpec::standard(g);
      for (const auto& [s, u] : pairs) {
        auto ms = standard_monomials(g, s, u);
        auto basis = enumerate_basis(g, s, u);
        CHECK(ms.size() == basis.size());
        std::vector<Functional> fs;
        for (const auto& x : ms)
          fs.push_back(monomial_functional(x, g, form, static_cast<int>(u.size()), static_cast<int>(s.size())));
        int samples = 2 * static_cast<int>(fs.size()) + 2;
        CHECK(evaluation_rank(fs, g.dim(), samples, 3) == static_cast<int>(fs.size()));
        CHECK(evaluation_rank(functionals(basis, g, form), g.dim(), samples, 3) == static_cast<int>(basis.size()));
      }
    }
}
