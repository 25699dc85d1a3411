#include "tensorinv/dimensions.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>

#include "tensorinv/combinatorics.hpp"
#include "tensorinv/errors.hpp"

namespace tensorinv {

InvariantQuery InvariantQuery::tensor(const GroupKind& g, int m) {
  if (m < 0) throw DomainError("tensor order must be nonnegative");
  InvariantQuery query{g, m, 0, 0};
  if (g.bipartite()) query.p = query.q = m;
  return query;
}

InvariantQuery InvariantQuery::mixed(const GroupKind& g, int p, int q) {
  if (p < 0 || q < 0) throw DomainError("p and q must be nonnegative");
  return {g, p + q, p, q};
}

namespace {

BigInt sum_syt(int m, const std::function<bool(const Partition&)>& keep) {
  BigInt total = 0;
  for (const auto& lambda : partitions_of(m))
    if (keep(lambda)) total += count_syt(lambda);
  return total;
}

}  // namespace

BigInt dim_invariants(const InvariantQuery& query) {
  const int n = query.group.n;
  switch (query.group.tag) {
    case Group::GL: {
      if (query.p != query.q) return 0;
      BigInt total = 0;
      for (const auto& lambda : partitions_of(query.p, n)) {
        BigInt f = count_syt(lambda);
        total += f * f;
      }
      return total;
    }
    case Group::SL: {
      int diff = std::abs(query.p - query.q);
      if (diff % n != 0) return 0;
      int d = diff / n;
      BigInt total = 0;
      for (const auto& lambda : partitions_of(std::min(query.p, query.q), n))
        total += count_syt(add_rectangle(lambda, d, n)) * count_syt(lambda);
      return total;
    }
    case Group::O:
      return sum_syt(query.m, [&](const Partition& l) { return l.length() <= n && l.has_even_rows(); });
    case Group::SO:
      return sum_syt(query.m, [&](const Partition& l) {
        return (l.length() <= n && l.has_even_rows()) || (l.length() == n && l.has_odd_rows());
      });
    case Group::Sp:
      return sum_syt(query.m, [&](const Partition& l) { return l.length() <= 2 * n && l.has_even_columns(); });
  }
  return 0;
}

BigInt graded_dim(const GroupKind& g, const std::vector<int>& degree) {
  if (g.bipartite()) throw DomainError(g.name() + " needs a (starred, unstarred) degree pair");
  int total = std::accumulate(degree.begin(), degree.end(), 0);
  const int n = g.n;
  std::function<bool(const Partition&)> keep;
  switch (g.tag) {
    case Group::O: keep = [&](const Partition& l) { return l.length() <= n && l.has_even_rows(); }; break;
    case Group::SO:
      keep = [&](const Partition& l) {
        return (l.length() <= n && l.has_even_rows()) || (l.length() == n && l.has_odd_rows());
      };
      break;
    default: keep = [&](const Partition& l) { return l.length() <= 2 * n && l.has_even_columns(); }; break;
  }
  BigInt sum = 0;
  for (const auto& lambda : partitions_of(total, static_cast<int>(degree.size())))
    if (keep(lambda)) sum += kostka(lambda, degree);
  return sum;
}

BigInt graded_dim(const GroupKind& g, const std::vector<int>& starred, const std::vector<int>& unstarred) {
  if (!g.bipartite()) throw DomainError(g.name() + " takes a single degree vector");
  int ds = std::accumulate(starred.begin(), starred.end(), 0);
  int de = std::accumulate(unstarred.begin(), unstarred.end(), 0);
  const int n = g.n;
  if (g.tag == Group::GL) {
    if (ds != de) return 0;
    BigInt sum = 0;
    for (const auto& lambda : partitions_of(ds, n)) sum += kostka(lambda, starred) * kostka(lambda, unstarred);
    return sum;
  }
  if ((ds - de) % n != 0) return 0;
  // The side with the surplus carries the n x d block of hyperedge columns.
  const auto& big = ds >= de ? starred : unstarred;
  const auto& small = ds >= de ? unstarred : starred;
  int d = std::abs(ds - de) / n;
  BigInt sum = 0;
  for (const auto& lambda : partitions_of(std::min(ds, de), n))
    sum += kostka(add_rectangle(lambda, d, n), big) * kostka(lambda, small);
  return sum;
}

namespace {

// Longest strictly increasing subsequence (patience sorting).
int lis(const std::vector<int>& w) {
  std::vector<int> tails;
  for (int x : w) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end()) tails.push_back(x);
    else *it = x;
  }
  return static_cast<int>(tails.size());
}

int lds(std::vector<int> w) {
  for (int& x : w) x = -x;
  return lis(w);
}

constexpr int kBruteForceLimit = 12;

void check_brute_force(int m) {
  if (m > kBruteForceLimit)
    throw SizeLimitError("brute-force count for m = " + std::to_string(m) + " exceeds limit " +
                         std::to_string(kBruteForceLimit));
}

// Visits every involution of [m] as a one-line word (0-based values).
void for_each_involution(int m, bool allow_fixed, const std::function<void(const std::vector<int>&, int)>& visit) {
  std::vector<int> w(m, -1);
  std::function<void(int)> rec = [&](int fixed) {
    int i = 0;
    while (i < m && w[i] >= 0) ++i;
    if (i == m) {
      visit(w, fixed);
      return;
    }
    if (allow_fixed) {
      w[i] = i;
      rec(fixed + 1);
      w[i] = -1;
    }
    for (int j = i + 1; j < m; ++j) {
      if (w[j] >= 0) continue;
      w[i] = j;
      w[j] = i;
      rec(fixed);
      w[i] = w[j] = -1;
    }
  };
  rec(0);
}

}  // namespace

BigInt count_restricted_permutations(int m, int n) {
  check_brute_force(m);
  std::vector<int> w(m);
  std::iota(w.begin(), w.end(), 0);
  BigInt count = 0;
  do {
    if (lds(w) <= n) ++count;
  } while (std::next_permutation(w.begin(), w.end()));
  return count;
}

BigInt count_restricted_involutions(int m, int n, InvolutionMode mode) {
  check_brute_force(m);
  BigInt count = 0;
  bool allow_fixed = mode == InvolutionMode::SoFixedPoints;
  for_each_involution(m, allow_fixed, [&](const std::vector<int>& w, int fixed) {
    switch (mode) {
      case InvolutionMode::FpfIncreasing:
        if (lis(w) <= n) ++count;
        break;
      case InvolutionMode::FpfDecreasing:
        if (lds(w) <= 2 * n) ++count;
        break;
      case InvolutionMode::SoFixedPoints:
        if ((fixed == 0 || fixed == n) && lis(w) <= n) ++count;
        break;
    }
  });
  return count;
}

BigInt count_noncrossing_matchings(int m, int k) {
  check_brute_force(m);
  if (m % 2 != 0) return 0;
  BigInt count = 0;
  for_each_involution(m, false, [&](const std::vector<int>& w, int) {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < m; ++i)
      if (i < w[i]) arcs.emplace_back(i, w[i]);
    // Arcs are sorted by left end; a set pairwise crosses iff the right ends
    // increase and the last left end precedes the first right end.
    int best = 0;
    std::size_t a = arcs.size();
    for (unsigned mask = 1; mask < (1u << a); ++mask) {
      std::vector<std::pair<int, int>> pick;
      for (std::size_t t = 0; t < a; ++t)
        if (mask & (1u << t)) pick.push_back(arcs[t]);
      bool crossing = pick.back().first < pick.front().second;
      for (std::size_t t = 1; t < pick.size() && crossing; ++t) crossing = pick[t - 1].second < pick[t].second;
      if (crossing) best = std::max(best, static_cast<int>(pick.size()));
    }
    if (best < k) ++count;
  });
  return count;
}

BigInt count_oscillating_tableaux(int m, int n) {
  if (m % 2 != 0) return 0;
  // Partitions stored as row-length vectors, with at most n columns.
  std::map<std::vector<int>, BigInt> cur{{{}, 1}};
  for (int step = 0; step < m; ++step) {
    std::map<std::vector<int>, BigInt> next;
    int size_left = m - step - 1;  // boxes still removable after this step
    for (const auto& [shape, ways] : cur) {
      int size = std::accumulate(shape.begin(), shape.end(), 0);
      // add a box
      for (std::size_t r = 0; r <= shape.size(); ++r) {
        int len = r < shape.size() ? shape[r] : 0;
        if (len + 1 > n) continue;
        if (r > 0 && shape[r - 1] < len + 1) continue;
        if (size + 1 > size_left) continue;
        auto s = shape;
        if (r == s.size()) s.push_back(1);
        else ++s[r];
        next[s] += ways;
      }
      // remove a box
      for (std::size_t r = 0; r < shape.size(); ++r) {
        if (r + 1 < shape.size() && shape[r + 1] == shape[r]) continue;
        auto s = shape;
        if (--s[r] == 0) s.pop_back();
        next[s] += ways;
      }
    }
    cur = std::move(next);
  }
  auto it = cur.find({});
  return it == cur.end() ? BigInt(0) : it->second;
}

BigInt count_lattice_walks(int m, const GroupKind& g) {
  int r;
  std::function<bool(const std::vector<int>&)> inside;
  if (g.tag == Group::Sp) {
    r = g.n;
    inside = [r](const std::vector<int>& x) {
      for (int i = 0; i + 1 < r; ++i)
        if (x[i] < x[i + 1]) return false;
      return x[r - 1] >= 0;
    };
  } else if (g.tag == Group::SO) {
    if (g.n % 2 != 0) throw UnsupportedError("SO walks need even n");
    r = g.n / 2;
    inside = [r](const std::vector<int>& x) {
      for (int i = 0; i + 1 < r; ++i)
        if (x[i] < x[i + 1]) return false;
      return r < 2 || x[r - 2] >= -x[r - 1];
    };
  } else {
    throw UnsupportedError("lattice walks are defined here for Sp and SO only");
  }
  std::map<std::vector<int>, BigInt> cur{{std::vector<int>(r, 0), 1}};
  for (int step = 0; step < m; ++step) {
    std::map<std::vector<int>, BigInt> next;
    int steps_left = m - step - 1;
    for (const auto& [x, ways] : cur) {
      for (int i = 0; i < r; ++i)
        for (int s : {1, -1}) {
          auto y = x;
          y[i] += s;
          if (!inside(y)) continue;
          int dist = 0;
          for (int v : y) dist += std::abs(v);
          if (dist > steps_left) continue;
          next[y] += ways;
        }
    }
    cur = std::move(next);
  }
  auto it = cur.find(std::vector<int>(r, 0));
  return it == cur.end() ? BigInt(0) : it->second;
}

BigInt stable_dim(Group g, int m) {
  if (m < 0) throw DomainError("tensor order must be nonnegative");
  if (g == Group::GL || g == Group::SL) return factorial(static_cast<unsigned>(m));
  if (m % 2 != 0) return 0;
  return double_factorial(m - 1);
}

BigInt n_dimensional_catalan(int n, int d) {
  if (n < 1 || d < 0) throw DomainError("n_dimensional_catalan needs n >= 1, d >= 0");
  if (d == 0) return 1;
  return count_syt(Partition(std::vector<int>(n, d)));
}

}  // namespace tensorinv
