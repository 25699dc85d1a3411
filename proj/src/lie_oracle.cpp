#include "tensorinv/lie_oracle.hpp"

#include <cstdlib>
#include <map>
#include <string>
#include <tuple>

#include "tensorinv/errors.hpp"

namespace tensorinv {

long oracle_limit_from_env() {
  const char* raw = std::getenv(kOracleLimitEnv);
  if (!raw) return kDefaultOracleLimit;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v <= 0) return kDefaultOracleLimit;
  return v;
}

namespace {

struct Entry {
  int row;
  int col;
  int val;
};
using Sparse = std::vector<Entry>;

bool is_diagonal(const Sparse& x) {
  for (const auto& e : x)
    if (e.row != e.col && e.val != 0) return false;
  return true;
}

// A basis of the Lie algebra in split coordinates.
std::vector<Sparse> lie_basis(const GroupKind& g) {
  int d = g.dim();
  std::vector<Sparse> basis;
  switch (g.tag) {
    case Group::GL:
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) basis.push_back({{i, j, 1}});
      break;
    case Group::SL:
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (i != j) basis.push_back({{i, j, 1}});
      for (int i = 0; i + 1 < d; ++i) basis.push_back({{i, i, 1}, {i + 1, i + 1, -1}});
      break;
    case Group::O:
    case Group::SO:
      // Form with antidiagonal Gram matrix; a' = d-1-a.
      for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) basis.push_back({{d - 1 - a, b, 1}, {d - 1 - b, a, -1}});
      break;
    case Group::Sp: {
      // J^{-1}(E_ab + E_ba) with J = [[0, I], [-I, 0]]; J^{-1} e_i = e_{i+n} or -e_{i-n}.
      int n = g.n;
      auto jinv_row = [n](int i) { return i < n ? std::pair{i + n, 1} : std::pair{i - n, -1}; };
      for (int a = 0; a < d; ++a)
        for (int b = a; b < d; ++b) {
          auto [ra, sa] = jinv_row(a);
          auto [rb, sb] = jinv_row(b);
          if (a == b) basis.push_back({{ra, b, sa}});
          else basis.push_back({{ra, b, sa}, {rb, a, sb}});
        }
      break;
    }
  }
  return basis;
}

// Incremental sparse row reduction over Q. Each pivot row is normalized so its
// leading entry is 1.
class SparseRank {
 public:
  void add(std::map<long, Rational> v) {
    while (!v.empty()) {
      auto lead = v.begin();
      auto it = pivots_.find(lead->first);
      if (it == pivots_.end()) {
        Rational s = 1 / lead->second;
        for (auto& [k, x] : v) x *= s;
        pivots_.emplace(lead->first, std::move(v));
        return;
      }
      Rational f = lead->second;
      for (const auto& [k, x] : it->second) {
        auto& slot = v[k];
        slot -= f * x;
        if (slot == 0) v.erase(k);
      }
    }
  }
  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  std::map<long, std::map<long, Rational>> pivots_;
};

}  // namespace

BigInt lie_invariant_dim(const InvariantQuery& query, long limit) {
  const GroupKind& g = query.group;
  const int d = g.dim();
  const int covector_slots = g.bipartite() ? query.p : 0;
  const int vector_slots = g.bipartite() ? query.q : query.m;
  const int order = covector_slots + vector_slots;

  long size = 1;
  for (int k = 0; k < order; ++k) {
    size *= d;
    if (size > limit)
      throw SizeLimitError("tensor space " + std::to_string(d) + "^" + std::to_string(order) + " exceeds oracle limit " +
                           std::to_string(limit));
  }

  std::vector<Sparse> cartan, roots;
  for (auto& x : lie_basis(g)) (is_diagonal(x) ? cartan : roots).push_back(std::move(x));
  {
    // A weight-zero vector killed by the positive root vectors spans a trivial
    // submodule, so only those are needed. Positivity: sign of a regular element.
    long c = 1;
    std::vector<long> h(d, 0);
    for (const auto& x : cartan) {
      for (const auto& e : x) h[e.row] += c * e.val;
      c *= 97;
    }
    std::vector<Sparse> positive;
    for (auto& x : roots) {
      const auto& e = x.front();
      if (h[e.row] == h[e.col]) throw Error("lie_oracle: singular Cartan element");
      if (h[e.row] > h[e.col]) positive.push_back(std::move(x));
    }
    roots = std::move(positive);
  }

  // Per-letter column and row views of each root for the slot actions.
  std::vector<std::vector<std::vector<std::pair<int, int>>>> col_view(roots.size()), row_view(roots.size());
  for (std::size_t r = 0; r < roots.size(); ++r) {
    col_view[r].assign(d, {});
    row_view[r].assign(d, {});
    for (const auto& e : roots[r]) {
      col_view[r][e.col].push_back({e.row, e.val});
      row_view[r][e.row].push_back({e.col, -e.val});  // covectors transform by -X^T
    }
  }
  std::vector<std::vector<int>> cartan_diag(cartan.size(), std::vector<int>(d, 0));
  for (std::size_t h = 0; h < cartan.size(); ++h)
    for (const auto& e : cartan[h]) cartan_diag[h][e.row] += e.val;

  // Determinant -1 isometry for O, as a signed permutation of letters.
  std::vector<std::pair<int, int>> improper;
  if (g.tag == Group::O) {
    for (int a = 0; a < d; ++a) improper.push_back({a, 1});
    if (d % 2 == 1) improper[d / 2] = {d / 2, -1};
    else std::swap(improper[d / 2 - 1].first, improper[d / 2].first);
  }

  std::vector<long> pow(order + 1, 1);
  for (int k = 1; k <= order; ++k) pow[k] = pow[k - 1] * d;
  auto digit = [&](long idx, int slot) { return static_cast<int>((idx / pow[slot]) % d); };

  SparseRank reducer;
  long zero_weight = 0;
  std::vector<int> letters(order);
  for (long idx = 0; idx < size; ++idx) {
    for (int s = 0; s < order; ++s) letters[s] = digit(idx, s);
    bool zero = true;
    for (std::size_t h = 0; h < cartan.size() && zero; ++h) {
      long w = 0;
      for (int s = 0; s < order; ++s) w += (s < covector_slots ? -1 : 1) * cartan_diag[h][letters[s]];
      zero = w == 0;
    }
    if (!zero) continue;
    ++zero_weight;

    std::map<long, Rational> image;
    for (std::size_t r = 0; r < roots.size(); ++r) {
      long base = static_cast<long>(r) * size;
      for (int s = 0; s < order; ++s) {
        int a = letters[s];
        const auto& terms = s < covector_slots ? row_view[r][a] : col_view[r][a];
        for (auto [to, val] : terms) {
          long key = base + idx + (static_cast<long>(to) - a) * pow[s];
          auto& slot = image[key];
          slot += val;
          if (slot == 0) image.erase(key);
        }
      }
    }
    if (!improper.empty()) {
      // (g - I) e_I, with g acting letterwise.
      long key = static_cast<long>(roots.size()) * size;
      long target = 0;
      int sign = 1;
      for (int s = 0; s < order; ++s) {
        auto [to, sg] = improper[letters[s]];
        target += to * pow[s];
        sign *= sg;
      }
      image[key + target] += sign;
      image[key + idx] -= 1;
      if (image[key + target] == 0) image.erase(key + target);
      if (image.count(key + idx) && image[key + idx] == 0) image.erase(key + idx);
    }
    reducer.add(std::move(image));
  }
  return BigInt(zero_weight - reducer.rank());
}

}  // namespace tensorinv
