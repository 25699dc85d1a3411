#pragma once

// Naive reference implementations. Nothing here calls into the library, so a
// test that compares against these compares two independent computations.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using Shape = std::vector<int>;
using Grid = std::vector<std::vector<int>>;
using Pair = std::pair<int, int>;

// #SYT by removing the box holding the largest entry, over every corner.
inline long syt_count(const Shape& shape) {
  static std::map<Shape, long> memo;
  Shape s = shape;
  while (!s.empty() && s.back() == 0) s.pop_back();
  if (s.empty()) return 1;
  if (auto it = memo.find(s); it != memo.end()) return it->second;
  long total = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool corner = i + 1 == s.size() || s[i + 1] < s[i];
    if (!corner) continue;
    Shape t = s;
    --t[i];
    total += syt_count(t);
  }
  memo[s] = total;
  return total;
}

// Every filling with entries in [1, max_entry], kept when rows weakly increase
// and columns strictly increase.
inline std::vector<Grid> ssyt(const Shape& shape, int max_entry) {
  std::vector<Pair> cells;
  for (int r = 0; r < static_cast<int>(shape.size()); ++r)
    for (int c = 0; c < shape[r]; ++c) cells.push_back({r, c});
  std::vector<Grid> out;
  Grid g;
  for (int len : shape) g.emplace_back(len, 0);
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == cells.size()) {
      out.push_back(g);
      return;
    }
    auto [r, c] = cells[k];
    for (int v = 1; v <= max_entry; ++v) {
      if (c > 0 && g[r][c - 1] > v) continue;
      if (r > 0 && g[r - 1][c] >= v) continue;
      g[r][c] = v;
      fill(k + 1);
    }
  };
  fill(0);
  return out;
}

inline std::vector<Shape> partitions(int n, int max_part) {
  if (n == 0) return {Shape{}};
  std::vector<Shape> out;
  for (int first = std::min(n, max_part); first >= 1; --first)
    for (auto rest : partitions(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(rest);
    }
  return out;
}

inline bool strictly_nests(Pair outer, Pair inner) { return outer.first < inner.first && inner.second < outer.second; }
inline bool weakly_contains(Pair outer, Pair inner) {
  return outer.first <= inner.first && inner.second <= outer.second;
}

// Largest subset whose members pairwise satisfy `related`, by exhaustive search.
inline int largest_clique(const std::vector<Pair>& arcs, const std::function<bool(Pair, Pair)>& related) {
  int n = static_cast<int>(arcs.size());
  int best = 0;
  for (long mask = 0; mask < (1L << n); ++mask) {
    int size = __builtin_popcountl(mask);
    if (size <= best) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if ((mask >> i & 1) && (mask >> j & 1)) ok = related(arcs[i], arcs[j]);
    if (ok) best = size;
  }
  return best;
}

inline int strict_nesting(const std::vector<Pair>& arcs) {
  return largest_clique(arcs, [](Pair a, Pair b) { return strictly_nests(a, b) || strictly_nests(b, a); });
}

inline int weak_nonnesting(const std::vector<Pair>& arcs) {
  return largest_clique(arcs, [](Pair a, Pair b) { return !weakly_contains(a, b) && !weakly_contains(b, a); });
}

inline int longest_run(const std::vector<int>& w, bool increasing) {
  std::vector<int> best(w.size(), 1);
  int top = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (increasing ? w[j] < w[i] : w[j] > w[i]) best[i] = std::max(best[i], best[j] + 1);
    top = std::max(top, best[i]);
  }
  return top;
}

inline long permutations_lds_at_most(int m, int n) {
  std::vector<int> w(m);
  std::iota(w.begin(), w.end(), 1);
  long count = 0;
  do {
    if (longest_run(w, false) <= n) ++count;
  } while (std::next_permutation(w.begin(), w.end()));
  return count;
}

// All involutions of [m] as one-line words.
inline std::vector<std::vector<int>> involutions(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(m, 0);
  std::function<void()> go = [&]() {
    int i = 0;
    while (i < m && w[i] != 0) ++i;
    if (i == m) {
      out.push_back(w);
      return;
    }
    w[i] = i + 1;
    go();
    for (int j = i + 1; j < m; ++j) {
      if (w[j] != 0) continue;
      w[i] = j + 1;
      w[j] = i + 1;
      go();
      w[j] = 0;
    }
    w[i] = 0;
  };
  go();
  return out;
}

inline int fixed_points(const std::vector<int>& w) {
  int f = 0;
  for (std::size_t i = 0; i < w.size(); ++i) f += w[i] == static_cast<int>(i) + 1;
  return f;
}

inline std::vector<std::vector<Pair>> perfect_matchings(int m) {
  std::vector<std::vector<Pair>> out;
  for (const auto& w : involutions(m)) {
    if (fixed_points(w) != 0) continue;
    std::vector<Pair> arcs;
    for (int i = 0; i < m; ++i)
      if (w[i] > i + 1) arcs.push_back({i + 1, w[i]});
    out.push_back(arcs);
  }
  return out;
}

inline long noncrossing(int m, int k) {
  long count = 0;
  auto crosses = [](Pair a, Pair b) {
    if (a.first > b.first) std::swap(a, b);
    return a.first < b.first && b.first < a.second && a.second < b.second;
  };
  for (const auto& arcs : perfect_matchings(m))
    if (largest_clique(arcs, crosses) < k) ++count;
  return count;
}

// Arc multisets on [m] realizing a degree sequence (loops count 2), optionally
// with loops forbidden. Arcs are listed with i <= j, sorted.
inline std::vector<std::vector<Pair>> arc_multisets(std::vector<int> degree, bool loops) {
  std::vector<std::vector<Pair>> out;
  std::vector<Pair> arcs;
  int m = static_cast<int>(degree.size());
  std::function<void(int, int)> go = [&](int i, int j) {
    while (i < m && degree[i] == 0) {
      ++i;
      j = i;
    }
    if (i == m) {
      out.push_back(arcs);
      return;
    }
    for (int k = j; k < m; ++k) {
      int need = k == i ? 2 : 1;
      if (k == i && !loops) continue;
      if (k == i ? degree[i] < 2 : degree[k] < 1) continue;
      degree[i] -= need == 2 ? 2 : 1;
      if (k != i) degree[k] -= 1;
      arcs.push_back({i + 1, k + 1});
      go(i, k);
      arcs.pop_back();
      if (k != i) degree[k] += 1;
      degree[i] += need == 2 ? 2 : 1;
    }
  };
  go(0, 0);
  return out;
}

// Bipartite link multisets with margins (starred, unstarred), in global positions.
inline std::vector<std::vector<Pair>> link_multisets(const std::vector<int>& starred, const std::vector<int>& unstarred) {
  int p = static_cast<int>(starred.size());
  int q = static_cast<int>(unstarred.size());
  std::vector<std::vector<Pair>> out;
  std::vector<Pair> arcs;
  std::vector<int> col(unstarred);
  std::function<void(int, int, int)> go = [&](int i, int j, int left) {
    if (i == p) {
      if (std::all_of(col.begin(), col.end(), [](int x) { return x == 0; })) out.push_back(arcs);
      return;
    }
    if (left == 0) {
      go(i + 1, 0, i + 1 < p ? starred[i + 1] : 0);
      return;
    }
    for (int k = j; k < q; ++k) {
      if (col[k] == 0) continue;
      --col[k];
      arcs.push_back({i + 1, p + k + 1});
      go(i, k, left - 1);
      arcs.pop_back();
      ++col[k];
    }
  };
  go(0, 0, p > 0 ? starred[0] : 0);
  return out;
}

// The SO hyperedge rule read off the proof: the l-th hyperedge vertex h_l is
// fine when the arcs starting strictly left of h_l have weak nonnesting number < l.
inline bool so_hyperedge_ok(const std::vector<Pair>& arcs, const std::vector<int>& h) {
  for (std::size_t l = 1; l <= h.size(); ++l) {
    std::vector<Pair> left;
    for (auto a : arcs)
      if (a.first < h[l - 1]) left.push_back(a);
    if (weak_nonnesting(left) >= static_cast<int>(l)) return false;
  }
  return true;
}

inline std::vector<std::vector<int>> subsets(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> go = [&](int from) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v <= m; ++v) {
      cur.push_back(v);
      go(v + 1);
      cur.pop_back();
    }
  };
  go(1);
  return out;
}

// Brute-force basis count for O/SO/Sp (tag 'o', 's', 'p') with a degree sequence.
inline long basis_count(char tag, int n, const std::vector<int>& degree) {
  int m = static_cast<int>(degree.size());
  long count = 0;
  auto arcs_ok = [&](const std::vector<Pair>& arcs) {
    if (tag == 'p') return strict_nesting(arcs) <= n;
    return weak_nonnesting(arcs) <= n;
  };
  for (const auto& arcs : arc_multisets(degree, tag != 'p'))
    if (arcs_ok(arcs)) ++count;
  if (tag == 's') {
    for (const auto& h : subsets(m, n)) {
      std::vector<int> rest = degree;
      bool fits = true;
      for (int v : h) fits = fits && --rest[v - 1] >= 0;
      if (!fits) continue;
      for (const auto& arcs : arc_multisets(rest, true))
        if (arcs_ok(arcs) && so_hyperedge_ok(arcs, h)) ++count;
    }
  }
  return count;
}

}  // namespace oracle
