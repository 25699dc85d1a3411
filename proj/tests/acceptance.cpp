// Acceptance suite: one PASS/FAIL line per criterion, exit 1 on any FAIL.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "tensorinv/dimensions.hpp"
#include "tensorinv/invariant_eval.hpp"
#include "tensorinv/lie_oracle.hpp"
#include "tensorinv/rsk.hpp"

using namespace tensorinv;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  int checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string str(const BigInt& x) { return x.get_str(); }

BigInt tensor_dim(Group g, int n, int m) { return dim_invariants(InvariantQuery::tensor(GroupKind{g, n}, m)); }
BigInt mixed_dim(Group g, int n, int p, int q) { return dim_invariants(InvariantQuery::mixed(GroupKind{g, n}, p, q)); }

// Runs body(k) for k in [0, count) over the hardware threads.
void parallel_for(long count, const std::function<void(long)>& body) {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (long k; (k = next.fetch_add(4096)) < count;)
        for (long i = k; i < std::min(count, k + 4096); ++i) body(i);
    });
  for (auto& t : pool) t.join();
}

Outcome table4() {
  Outcome o;
  const long expected[] = {5, 14, 15, 15};
  for (int n = 1; n <= 4; ++n) {
    GroupKind g{Group::Sp, n};
    std::vector<std::pair<std::string, BigInt>> counts{
        {"syt-sum", tensor_dim(Group::Sp, n, 6)},
        {"involutions", count_restricted_involutions(6, n, InvolutionMode::FpfDecreasing)},
        {"matchings", count_noncrossing_matchings(6, n + 1)},
        {"oscillating", count_oscillating_tableaux(6, n)},
        {"walks", count_lattice_walks(6, g)},
        {"basis", BigInt(static_cast<long>(enumerate_basis(g, std::vector<int>(6, 1)).size()))}};
    for (const auto& [name, v] : counts)
      o.expect(v == expected[n - 1], "Sp n=" + std::to_string(n) + " " + name + " gave " + str(v));
  }
  o.detail = o.pass ? "Sp m=6, n=1..4: 5 14 15 15 by six methods" : o.detail;
  return o;
}

Outcome table3() {
  Outcome o;
  const long expected[] = {1, 6, 3, 4, 3, 3};
  for (int n = 1; n <= 6; ++n) {
    auto v = tensor_dim(Group::SO, n, 4);
    auto b = enumerate_basis(GroupKind{Group::SO, n}, std::vector<int>(4, 1)).size();
    auto inv = count_restricted_involutions(4, n, InvolutionMode::SoFixedPoints);
    o.expect(v == expected[n - 1] && b == static_cast<std::size_t>(expected[n - 1]) && inv == expected[n - 1],
             "SO n=" + std::to_string(n) + " gave " + str(v));
    if (n % 2 == 0) o.expect(count_lattice_walks(4, GroupKind{Group::SO, n}) == expected[n - 1], "SO walks");
  }
  o.detail = o.pass ? "SO m=4, n=1..6: 1 6 3 4 3 3" : o.detail;
  return o;
}

Outcome table2() {
  Outcome o;
  for (int p = 0; p <= 8; ++p) {
    int q = 8 - p;
    long expected = 0;
    if (p == 4) expected = 24;
    if (p == 6 || p == 2) expected = 19;
    if (p == 8 || p == 0) expected = 14;
    auto v = mixed_dim(Group::SL, 4, p, q);
    auto b = enumerate_basis(GroupKind{Group::SL, 4}, std::vector<int>(p, 1), std::vector<int>(q, 1)).size();
    o.expect(v == expected && b == static_cast<std::size_t>(expected),
             "SL n=4 (" + std::to_string(p) + "," + std::to_string(q) + ") gave " + str(v));
  }
  o.detail = o.pass ? "SL n=4, p+q=8: 24, 19, 14 and zeros" : o.detail;
  return o;
}

Outcome table1() {
  Outcome o;
  const long gl2[] = {1, 1, 2, 5, 14, 42};
  for (int m = 0; m <= 5; ++m) o.expect(mixed_dim(Group::GL, 2, m, m) == gl2[m], "GL n=2 m=" + std::to_string(m));
  const long o3[] = {1, 3, 15};
  for (int k = 0; k < 3; ++k) o.expect(tensor_dim(Group::O, 3, 2 * k + 2) == o3[k], "O n=3");
  const long sp2[] = {1, 3, 14, 84};
  for (int k = 0; k < 4; ++k) o.expect(tensor_dim(Group::Sp, 2, 2 * k + 2) == sp2[k], "Sp n=2");
  const long so3[] = {0, 1, 1, 3, 6};
  for (int m = 1; m <= 5; ++m) o.expect(tensor_dim(Group::SO, 3, m) == so3[m - 1], "SO n=3 m=" + std::to_string(m));
  for (int m = 1; m <= 7; ++m) {
    BigInt df = m % 2 ? BigInt(0) : double_factorial(m - 1);
    o.expect(mixed_dim(Group::GL, m, m, m) == factorial(m), "GL stable m=" + std::to_string(m));
    o.expect(mixed_dim(Group::SL, m + 1, m, m) == factorial(m), "SL stable m=" + std::to_string(m));
    o.expect(tensor_dim(Group::O, m, m) == df, "O stable m=" + std::to_string(m));
    o.expect(tensor_dim(Group::SO, m + 1, m) == df, "SO stable m=" + std::to_string(m));
    o.expect(tensor_dim(Group::Sp, m, m) == df, "Sp stable m=" + std::to_string(m));
  }
  o.detail = o.pass ? "Catalan, O n=3, Sp n=2, SO n=3 anchors; m! and (m-1)!! stable rows" : o.detail;
  return o;
}

std::vector<std::vector<int>> weights(int m, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(m, 0);
  std::function<void(int, int)> go = [&](int i, int left) {
    if (i == m - 1) {
      w[i] = left;
      out.push_back(w);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      w[i] = x;
      go(i + 1, left - x);
    }
  };
  go(0, total);
  return out;
}

Outcome bijections() {
  Outcome o;
  // RSK_A round trip on every matrix up to 4x4 with entries in {0,1,2}.
  long matrices = 0;
  for (int r = 1; r <= 4; ++r)
    for (int c = 1; c <= 4; ++c) {
      long total = 1;
      for (int k = 0; k < r * c; ++k) total *= 3;
      std::atomic<long> bad{-1};
      parallel_for(total, [&](long code) {
        NatMatrix a(r, c);
        long x = code;
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < c; ++j) {
            a(i, j) = static_cast<int>(x % 3);
            x /= 3;
          }
        auto b = rsk_a(a);
        bool ok = rsk_a_inv(b, r, c) == a && b.recording.weight(r) == a.row_sums() &&
                  b.insertion.weight(c) == a.col_sums();
        if (!ok) bad = code;
      });
      matrices += total;
      o.expect(bad < 0, "RSK_A round trip failed for a " + std::to_string(r) + "x" + std::to_string(c) + " matrix");
    }
  // RSK_B and RSK_C on every weight with at most 6 boxes over at most 5 letters.
  long tableaux = 0;
  for (int m = 1; m <= 5; ++m)
    for (int total = 0; total <= 6; ++total)
      for (const auto& d : weights(m, total)) {
        std::vector<NatMatrix> image_b, image_c;
        for (const auto& lambda : partitions_of(total))
          for (const auto& t : enumerate_ssyt(lambda, m, d)) {
            ++tableaux;
            auto diag = rsk_a_diagonal(t, m);
            int odd = 0;
            for (int j = 0; j < lambda.row(0); ++j) odd += lambda.column_length(j) % 2;
            o.expect(diag.trace() == odd, "diagonal RSK trace");
            if (lambda.has_even_rows()) {
              auto a = rsk_b(t, m);
              o.expect(a.row_sums() == d && rsk_b_inv(a) == t, "RSK_B round trip");
              o.expect(support_width(a, SupportOrder::Reversed) == lambda.length(), "RSK_B width");
              image_b.push_back(a);
            }
            if (lambda.has_even_columns()) {
              auto a = rsk_c(t, m);
              o.expect(a.trace() == 0 && a.row_sums() == d && rsk_c_inv(a) == t, "RSK_C round trip");
              o.expect(support_width(a, SupportOrder::Product) == lambda.length(), "RSK_C width");
              image_c.push_back(a);
            }
          }
        std::sort(image_b.begin(), image_b.end());
        std::sort(image_c.begin(), image_c.end());
        o.expect(image_b == symmetric_matrices_with_row_sums(d, DiagonalRule::Even), "RSK_B not onto");
        o.expect(image_c == symmetric_matrices_with_row_sums(d, DiagonalRule::Zero), "RSK_C not onto");
      }
  if (o.pass)
    o.detail = std::to_string(matrices) + " matrices, " + std::to_string(tableaux) + " tableaux";
  return o;
}

// Diagrams used by the transport check: all-ones degrees up to order 6 plus
// every degree vector with entries at most 2 on at most 4 vertices.
std::vector<std::vector<int>> degree_grid(int max_vertices) {
  std::vector<std::vector<int>> out;
  for (int m = 1; m <= 6; ++m) out.push_back(std::vector<int>(m, 1));
  for (int m = 1; m <= max_vertices; ++m) {
    std::vector<std::vector<int>> all{{}};
    for (int v = 0; v < m; ++v) {
      std::vector<std::vector<int>> next;
      for (const auto& d : all)
        for (int x = 0; x <= 2; ++x) {
          auto e = d;
          e.push_back(x);
          next.push_back(e);
        }
      all = next;
    }
    for (const auto& d : all)
      if (std::count(d.begin(), d.end(), 2) > 0) out.push_back(d);
  }
  return out;
}

Outcome transport() {
  Outcome o;
  long diagrams = 0;
  auto grid = degree_grid(4);
  for (int n = 1; n <= 3; ++n) {
    for (auto tag : {Group::O, Group::SO, Group::Sp}) {
      GroupKind g{tag, n};
      for (const auto& d : grid)
        for (const auto& diagram : enumerate_basis(g, d)) {
          ++diagrams;
          ArcDiagram arcs_only(diagram.m(), diagram.arcs());
          auto a = diagram_to_matrix(arcs_only);
          if (tag == Group::Sp) {
            // Each strict nesting contributes two rows to the column-even shape.
            auto t = rsk_c_inv(a);
            o.expect(t.shape().length() == 2 * max_strict_nesting(diagram.arcs()),
                     "Sp transport at " + diagram.to_json());
          } else {
            auto t = rsk_b_inv(a);
            o.expect(t.shape().length() == weak_nonnesting_number(diagram.arcs()),
                     g.name() + " transport at " + diagram.to_json());
          }
        }
    }
    for (auto tag : {Group::GL, Group::SL}) {
      GroupKind g{tag, n};
      std::vector<std::pair<std::vector<int>, std::vector<int>>> sides;
      for (int p = 0; p <= 6; ++p)
        for (int q = 0; p + q <= 6; ++q) sides.push_back({std::vector<int>(p, 1), std::vector<int>(q, 1)});
      for (const auto& s : std::vector<std::vector<int>>{{2, 1}, {1, 2}, {2, 2}, {2, 1, 1}, {1, 2, 1}})
        for (const auto& u : std::vector<std::vector<int>>{{2, 1}, {1, 2}, {2, 2}, {2, 1, 1}, {1, 1, 2}})
          sides.push_back({s, u});
      for (const auto& [s, u] : sides)
        for (const auto& diagram : enumerate_basis(g, s, u)) {
          ++diagrams;
          ArcDiagram arcs_only(diagram.m(), diagram.arcs(), {}, diagram.p());
          auto b = rsk_a(diagram_to_matrix(arcs_only));
          o.expect(b.shape().length() == max_strict_nesting(diagram.arcs()),
                   g.name() + " transport at " + diagram.to_json());
        }
    }
  }
  if (o.pass) o.detail = std::to_string(diagrams) + " admissible diagrams";
  return o;
}

struct GridPoint {
  InvariantQuery query;
  std::vector<ArcDiagram> basis;
};

// (group, n <= 3, order <= 12) with tensor space of size at most 4096. Order 12
// is where dim V = 2 hits the cap; dim V = 1 is cut there too.
std::vector<GridPoint> oracle_grid() {
  std::vector<GridPoint> grid;
  for (int n = 1; n <= 3; ++n) {
    for (auto tag : {Group::GL, Group::SL})
      for (int p = 0; p <= 12; ++p)
        for (int q = 0; p + q <= 12; ++q) {
          GroupKind g{tag, n};
          long size = 1;
          for (int k = 0; k < p + q; ++k) size *= g.dim();
          if (size > kDefaultOracleLimit) continue;
          grid.push_back({InvariantQuery::mixed(g, p, q),
                          enumerate_basis(g, std::vector<int>(p, 1), std::vector<int>(q, 1))});
        }
    for (auto tag : {Group::O, Group::SO, Group::Sp})
      for (int m = 0; m <= 12; ++m) {
        GroupKind g{tag, n};
        long size = 1;
        for (int k = 0; k < m; ++k) size *= g.dim();
        if (size > kDefaultOracleLimit) continue;
        grid.push_back({InvariantQuery::tensor(g, m), enumerate_basis(g, std::vector<int>(m, 1))});
      }
  }
  return grid;
}

std::string label(const InvariantQuery& q) {
  std::ostringstream os;
  os << q.group.name();
  if (q.group.bipartite()) os << " p=" << q.p << " q=" << q.q;
  else os << " m=" << q.m;
  return os.str();
}

Outcome oracle_equivalence(const std::vector<GridPoint>& grid) {
  Outcome o;
  for (const auto& point : grid) {
    const auto& q = point.query;
    auto form = FormSpec::standard(q.group);
    BigInt formula = dim_invariants(q);
    BigInt lie = lie_invariant_dim(q);
    std::vector<Functional> fs;
    for (const auto& d : point.basis) fs.push_back(diagram_functional(d, q.group, form));
    int r = evaluation_rank(fs, q.group.dim(), 2 * static_cast<int>(fs.size()) + 2, 1);
    o.expect(formula == lie && BigInt(r) == formula && BigInt(static_cast<long>(fs.size())) == formula,
             label(q) + ": formula " + str(formula) + ", oracle " + str(lie) + ", rank " + std::to_string(r));
  }
  if (o.pass) o.detail = std::to_string(grid.size()) + " grid points";
  return o;
}

Outcome invariance(const std::vector<GridPoint>& grid) {
  Outcome o;
  long functionals = 0;
  for (const auto& point : grid) {
    const auto& g = point.query.group;
    auto form = FormSpec::standard(g);
    for (std::size_t k = 0; k < point.basis.size(); ++k) {
      ++functionals;
      auto f = diagram_functional(point.basis[k], g, form);
      auto rep = check_invariance(f, g, form, 20, 5, 1000 + k);
      o.expect(rep.invariant && rep.checks == 100, label(point.query) + " " + point.basis[k].to_json() + " " + rep.witness);
    }
  }
  // SO versus O: hyperedge functionals flip sign under a reflection, arc-only ones do not.
  long hyper = 0;
  for (const auto& point : grid) {
    const auto& g = point.query.group;
    if (g.tag != Group::SO) continue;
    auto form = FormSpec::standard(g);
    RationalVector u(g.dim(), 1);
    u[0] = 2;
    auto flip = reflection(form, u);
    for (const auto& d : point.basis) {
      auto f = diagram_functional(d, g, form);
      auto rep = check_invariance_under(f, flip, 5, 7);
      if (d.hyperedges().empty()) {
        o.expect(rep.invariant, "arc-only SO functional moved under a reflection");
      } else {
        ++hyper;
        o.expect(!rep.invariant, "hyperedge functional fixed by a reflection: " + d.to_json());
        o.expect(check_invariance(f, GroupKind{Group::O, g.n}, form, 4, 3, 5).invariant == false,
                 "O sampler missed the sign flip");
      }
    }
  }
  if (o.pass)
    o.detail = std::to_string(functionals) + " functionals x 100 checks, " + std::to_string(hyper) +
               " hyperedge functionals flip under det -1";
  return o;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  bool all = true;
  auto report = [&](int id, const std::string& name, const std::function<Outcome()>& body) {
    auto start = clock::now();
    Outcome o = body();
    double secs = std::chrono::duration<double>(clock::now() - start).count();
    std::printf("%s criterion %d: %s (%s) [%d checks, %.2fs]\n", o.pass ? "PASS" : "FAIL", id, name.c_str(),
                o.detail.c_str(), o.checks, secs);
    std::fflush(stdout);
    all = all && o.pass;
  };
  report(1, "Sp tensor invariants of order 6", table4);
  report(2, "SO tensor invariants of order 4", table3);
  report(3, "SL invariants with p+q = 8", table2);
  report(4, "reference anchors", table1);
  report(5, "RSK bijections", bijections);
  report(6, "nesting transport", transport);
  std::vector<GridPoint> grid;
  report(7, "oracle, formula and rank agree", [&] {
    grid = oracle_grid();
    return oracle_equivalence(grid);
  });
  report(8, "invariance", [&] { return invariance(grid); });
  return all ? 0 : 1;
}
