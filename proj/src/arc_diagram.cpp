#include "tensorinv/arc_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "tensorinv/errors.hpp"

namespace tensorinv {

std::string to_string(Group g) {
  switch (g) {
    case Group::GL: return "GL";
    case Group::SL: return "SL";
    case Group::O: return "O";
    case Group::SO: return "SO";
    case Group::Sp: return "Sp";
  }
  return "?";
}

std::string GroupKind::name() const { return to_string(tag) + "(" + std::to_string(n) + ")"; }

GroupKind GroupKind::parse(const std::string& tag, int n) {
  std::string t;
  for (char c : tag) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (n < 1) throw DomainError("group parameter n must be positive");
  if (t == "gl") return {Group::GL, n};
  if (t == "sl") return {Group::SL, n};
  if (t == "o") return {Group::O, n};
  if (t == "so") return {Group::SO, n};
  if (t == "sp") return {Group::Sp, n};
  throw DomainError("unknown group '" + tag + "'");
}

// ---------------------------------------------------------------------------
// ArcDiagram

ArcDiagram::ArcDiagram(int m, std::vector<Arc> arcs, std::vector<Hyperedge> hyperedges, std::optional<int> p)
    : m_(m), arcs_(std::move(arcs)), hyperedges_(std::move(hyperedges)), p_(p) {
  if (m_ < 0) throw MalformedDiagramError("negative vertex count");
  if (p_ && (*p_ < 0 || *p_ > m_)) throw MalformedDiagramError("bipartite split outside [0, m]");
  for (auto& [i, j] : arcs_) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > m_) throw MalformedDiagramError("arc endpoint outside [1, m]");
    if (p_ && !(i <= *p_ && j > *p_)) throw MalformedDiagramError("bipartite arcs must join a starred and an unstarred vertex");
  }
  for (const auto& h : hyperedges_) {
    if (h.empty()) throw MalformedDiagramError("empty hyperedge");
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (h[k] < 1 || h[k] > m_) throw MalformedDiagramError("hyperedge vertex outside [1, m]");
      if (k > 0 && h[k] <= h[k - 1]) throw MalformedDiagramError("hyperedge vertices must strictly increase");
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  std::sort(hyperedges_.begin(), hyperedges_.end());
}

ArcDiagram ArcDiagram::bipartite(int p, int q, const std::vector<std::pair<int, int>>& links,
                                 std::vector<Hyperedge> hyperedges) {
  std::vector<Arc> arcs;
  for (auto [i, j] : links) {
    if (i < 1 || i > p || j < 1 || j > q) throw MalformedDiagramError("bipartite link outside [p] x [q]");
    arcs.emplace_back(i, p + j);
  }
  return ArcDiagram(p + q, std::move(arcs), std::move(hyperedges), p);
}

bool ArcDiagram::has_loops() const {
  return std::any_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.first == a.second; });
}

std::string ArcDiagram::to_json() const {
  nlohmann::ordered_json j;
  j["m"] = m_;
  if (p_) j["p"] = *p_;
  j["arcs"] = nlohmann::ordered_json::array();
  for (auto [a, b] : arcs_) j["arcs"].push_back({a, b});
  j["hyperedges"] = hyperedges_;
  return j.dump();
}

ArcDiagram ArcDiagram::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::vector<Arc> arcs;
  for (const auto& a : j.at("arcs")) {
    if (a.size() != 2) throw MalformedDiagramError("arcs must be pairs");
    arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
  }
  std::vector<Hyperedge> hyper;
  if (j.contains("hyperedges")) hyper = j["hyperedges"].get<std::vector<Hyperedge>>();
  std::optional<int> p;
  if (j.contains("p") && !j["p"].is_null()) p = j["p"].get<int>();
  return ArcDiagram(j.at("m").get<int>(), std::move(arcs), std::move(hyper), p);
}

std::string ArcDiagram::to_dot() const {
  std::ostringstream os;
  auto label = [&](int v) {
    if (!p_) return std::to_string(v);
    return v <= *p_ ? std::to_string(v) + "*" : std::to_string(v - *p_);
  };
  os << "graph arcs {\n  rankdir=LR;\n";
  for (int v = 1; v <= m_; ++v) os << "  v" << v << " [label=\"" << label(v) << "\"];\n";
  for (int v = 1; v < m_; ++v) os << "  v" << v << " -- v" << v + 1 << " [style=invis];\n";
  for (auto [a, b] : arcs_) os << "  v" << a << " -- v" << b << ";\n";
  for (std::size_t k = 0; k < hyperedges_.size(); ++k) {
    os << "  h" << k << " [shape=point];\n";
    for (int v : hyperedges_[k]) os << "  h" << k << " -- v" << v << " [style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

NatMatrix arc_matrix(const ArcDiagram& d) {
  if (d.is_bipartite()) {
    NatMatrix a(d.p(), d.q());
    for (auto [i, j] : d.arcs()) ++a(i - 1, j - d.p() - 1);
    return a;
  }
  NatMatrix a(d.m(), d.m());
  for (auto [i, j] : d.arcs()) {
    if (i == j) {
      a(i - 1, i - 1) += 2;
    } else {
      ++a(i - 1, j - 1);
      ++a(j - 1, i - 1);
    }
  }
  return a;
}

}  // namespace

std::strong_ordering operator<=>(const ArcDiagram& a, const ArcDiagram& b) {
  if (auto c = a.m_ <=> b.m_; c != 0) return c;
  if (auto c = a.p_ <=> b.p_; c != 0) return c;
  if (auto c = arc_matrix(a) <=> arc_matrix(b); c != 0) return c;
  return a.hyperedges_ <=> b.hyperedges_;
}

// ---------------------------------------------------------------------------
// Statistics

std::vector<int> degree_sequence(const ArcDiagram& d) {
  std::vector<int> deg(d.m(), 0);
  for (auto [i, j] : d.arcs()) {
    ++deg[i - 1];
    ++deg[j - 1];
  }
  for (const auto& h : d.hyperedges())
    for (int v : h) ++deg[v - 1];
  return deg;
}

std::pair<std::vector<int>, std::vector<int>> degree_pair(const ArcDiagram& d) {
  auto deg = degree_sequence(d);
  return {std::vector<int>(deg.begin(), deg.begin() + d.p()), std::vector<int>(deg.begin() + d.p(), deg.end())};
}

namespace {

// Longest chain ending at each arc (arcs sorted), where `follows(prev, next)`
// says next may come after prev.
std::vector<int> chain_lengths(const std::vector<Arc>& arcs, const std::function<bool(const Arc&, const Arc&)>& follows) {
  std::vector<int> len(arcs.size(), 1);
  for (std::size_t k = 0; k < arcs.size(); ++k)
    for (std::size_t j = 0; j < k; ++j)
      if (follows(arcs[j], arcs[k])) len[k] = std::max(len[k], len[j] + 1);
  return len;
}

bool strictly_inside(const Arc& outer, const Arc& inner) {
  return outer.first < inner.first && inner.second < outer.second;
}

bool weakly_after(const Arc& a, const Arc& b) { return a.first < b.first && a.second < b.second; }

std::vector<Arc> sorted(std::vector<Arc> arcs) {
  for (auto& [i, j] : arcs)
    if (i > j) std::swap(i, j);
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

}  // namespace

int max_strict_nesting(const std::vector<Arc>& input) {
  auto arcs = sorted(input);
  auto len = chain_lengths(arcs, strictly_inside);
  return len.empty() ? 0 : *std::max_element(len.begin(), len.end());
}

int weak_nonnesting_number(const std::vector<Arc>& input) {
  auto arcs = sorted(input);
  auto len = chain_lengths(arcs, weakly_after);
  return len.empty() ? 0 : *std::max_element(len.begin(), len.end());
}

std::vector<int> hyperedge_thresholds(const ArcDiagram& d, const GroupKind& g, Side side) {
  std::vector<int> t(g.n, kNoThreshold);
  const auto& arcs = d.arcs();
  if (g.tag == Group::SL) {
    if (!d.is_bipartite()) throw MalformedDiagramError("SL diagrams are bipartite");
    if (side == Side::Starred) {
      // Depth of each arc as the innermost member of a strict nesting; its
      // starred endpoint bounds every level up to that depth.
      auto depth = chain_lengths(arcs, strictly_inside);
      for (std::size_t k = 0; k < arcs.size(); ++k)
        for (int l = 1; l <= std::min(depth[k], g.n); ++l) t[l - 1] = std::min(t[l - 1], arcs[k].first);
    } else {
      // Height as the outermost member; its unstarred endpoint is the bound.
      std::vector<int> height(arcs.size(), 1);
      for (std::size_t k = arcs.size(); k-- > 0;)
        for (std::size_t j = k + 1; j < arcs.size(); ++j)
          if (strictly_inside(arcs[k], arcs[j])) height[k] = std::max(height[k], height[j] + 1);
      for (std::size_t k = 0; k < arcs.size(); ++k)
        for (int l = 1; l <= std::min(height[k], g.n); ++l) t[l - 1] = std::min(t[l - 1], arcs[k].second);
    }
    return t;
  }
  if (g.tag == Group::SO) {
    if (d.is_bipartite()) throw MalformedDiagramError("SO diagrams are not bipartite");
    // Smallest v at which the arcs starting at or before v reach weak
    // nonnesting number l. Arcs are sorted by left endpoint, so the chain
    // lengths over prefixes come from one pass.
    auto len = chain_lengths(arcs, weakly_after);
    int best = 0;
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      if (len[k] > best) {
        for (int l = best + 1; l <= std::min(len[k], g.n); ++l) t[l - 1] = arcs[k].first;
        best = len[k];
      }
    }
    return t;
  }
  throw UnsupportedError("hyperedge thresholds are defined only for SL and SO");
}

namespace {

void check_structure(const ArcDiagram& d, const GroupKind& g) {
  if (d.is_bipartite() != g.bipartite())
    throw MalformedDiagramError(g.name() + " diagrams must " + (g.bipartite() ? "" : "not ") + "be bipartite");
  if (!d.hyperedges().empty() && g.tag != Group::SL && g.tag != Group::SO)
    throw MalformedDiagramError(g.name() + " diagrams carry no hyperedges");
  if (g.tag == Group::Sp && d.has_loops()) throw MalformedDiagramError("Sp diagrams carry no loops");
}

bool componentwise_leq(const Hyperedge& a, const Hyperedge& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

bool within(const Hyperedge& h, const std::vector<int>& t) {
  for (std::size_t k = 0; k < h.size(); ++k)
    if (h[k] > t[k]) return false;
  return true;
}

}  // namespace

bool is_admissible(const ArcDiagram& d, const GroupKind& g) {
  check_structure(d, g);
  switch (g.tag) {
    case Group::GL:
    case Group::Sp:
      return max_strict_nesting(d.arcs()) <= g.n;
    case Group::O:
      return weak_nonnesting_number(d.arcs()) <= g.n;
    case Group::SL: {
      if (max_strict_nesting(d.arcs()) > g.n) return false;
      const auto& hs = d.hyperedges();
      if (hs.empty()) return true;
      for (const auto& h : hs)
        if (static_cast<int>(h.size()) != g.n) return false;
      bool starred = d.is_starred(hs.front().front());
      for (const auto& h : hs)
        for (int v : h)
          if (d.is_starred(v) != starred) return false;
      // Sorted lexicographically, so a chain must be increasing in this order.
      for (std::size_t k = 1; k < hs.size(); ++k)
        if (!componentwise_leq(hs[k - 1], hs[k])) return false;
      return within(hs.back(), hyperedge_thresholds(d, g, starred ? Side::Starred : Side::Unstarred));
    }
    case Group::SO: {
      if (weak_nonnesting_number(d.arcs()) > g.n) return false;
      const auto& hs = d.hyperedges();
      if (hs.empty()) return true;
      if (hs.size() > 1 || static_cast<int>(hs.front().size()) != g.n) return false;
      return within(hs.front(), hyperedge_thresholds(d, g));
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Matrices

NatMatrix diagram_to_matrix(const ArcDiagram& d) {
  if (!d.hyperedges().empty()) throw MalformedDiagramError("hyperedges have no matrix encoding");
  return arc_matrix(d);
}

ArcDiagram matrix_to_diagram(const NatMatrix& a, bool bipartite) {
  std::vector<Arc> arcs;
  if (bipartite) {
    int p = a.rows();
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j)
        for (int k = 0; k < a(i, j); ++k) arcs.emplace_back(i + 1, p + j + 1);
    return ArcDiagram(a.rows() + a.cols(), std::move(arcs), {}, p);
  }
  if (!a.is_symmetric()) throw DomainError("adjacency matrix must be square and symmetric");
  if (!a.has_even_diagonal()) throw DomainError("adjacency matrix needs an even diagonal (2 per loop)");
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a(i, i) / 2; ++k) arcs.emplace_back(i + 1, i + 1);
    for (int j = i + 1; j < a.cols(); ++j)
      for (int k = 0; k < a(i, j); ++k) arcs.emplace_back(i + 1, j + 1);
  }
  return ArcDiagram(a.rows(), std::move(arcs));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void check_limit(int total, int limit) {
  if (total > limit)
    throw SizeLimitError("total degree " + std::to_string(total) + " exceeds limit " + std::to_string(limit));
}

void check_degrees(const std::vector<int>& d) {
  for (int x : d)
    if (x < 0) throw DomainError("degrees must be nonnegative");
}

// k-element subsets of `pool` (ascending), lexicographic.
std::vector<Hyperedge> subsets(const std::vector<int>& pool, int k) {
  std::vector<Hyperedge> out;
  Hyperedge cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// Componentwise chains H_1 <= ... <= H_k of n-subsets of [lo, hi] whose
// incidence counts stay within `budget` (indexed by global position - 1).
std::vector<std::vector<Hyperedge>> hyperedge_chains(int lo, int hi, int n, int k, const std::vector<int>& budget) {
  std::vector<int> pool;
  for (int v = lo; v <= hi; ++v)
    if (budget[v - 1] > 0) pool.push_back(v);
  auto all = subsets(pool, n);
  std::vector<std::vector<Hyperedge>> out;
  std::vector<Hyperedge> chain;
  std::vector<int> left = budget;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(chain.size()) == k) {
      out.push_back(chain);
      return;
    }
    for (std::size_t i = from; i < all.size(); ++i) {
      const auto& h = all[i];
      if (!chain.empty() && !componentwise_leq(chain.back(), h)) continue;
      if (std::any_of(h.begin(), h.end(), [&](int v) { return left[v - 1] == 0; })) continue;
      for (int v : h) --left[v - 1];
      chain.push_back(h);
      rec(i);
      chain.pop_back();
      for (int v : h) ++left[v - 1];
    }
  };
  rec(0);
  return out;
}

}  // namespace

std::vector<ArcDiagram> enumerate_basis(const GroupKind& g, const std::vector<int>& degree, int limit) {
  if (g.bipartite()) throw DomainError(g.name() + " needs a (starred, unstarred) degree pair");
  check_degrees(degree);
  int total = std::accumulate(degree.begin(), degree.end(), 0);
  check_limit(total, limit);
  int m = static_cast<int>(degree.size());
  std::vector<ArcDiagram> out;
  auto add_arcs = [&](const std::vector<int>& d, const std::vector<Hyperedge>& hyper) {
    if (std::accumulate(d.begin(), d.end(), 0) % 2 != 0) return;
    auto rule = g.tag == Group::Sp ? DiagonalRule::Zero : DiagonalRule::Even;
    for (const auto& a : symmetric_matrices_with_row_sums(d, rule)) {
      auto base = matrix_to_diagram(a, false);
      ArcDiagram diagram(m, base.arcs(), hyper);
      if (is_admissible(diagram, g)) out.push_back(std::move(diagram));
    }
  };
  add_arcs(degree, {});
  if (g.tag == Group::SO) {
    std::vector<int> pool;
    for (int v = 1; v <= m; ++v)
      if (degree[v - 1] > 0) pool.push_back(v);
    for (const auto& h : subsets(pool, g.n)) {
      auto rest = degree;
      for (int v : h) --rest[v - 1];
      add_arcs(rest, {h});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ArcDiagram> enumerate_basis(const GroupKind& g, const std::vector<int>& starred,
                                        const std::vector<int>& unstarred, int limit) {
  if (!g.bipartite()) throw DomainError(g.name() + " takes a single degree vector");
  check_degrees(starred);
  check_degrees(unstarred);
  int ds = std::accumulate(starred.begin(), starred.end(), 0);
  int de = std::accumulate(unstarred.begin(), unstarred.end(), 0);
  check_limit(ds + de, limit);
  int p = static_cast<int>(starred.size());
  int q = static_cast<int>(unstarred.size());
  std::vector<ArcDiagram> out;
  std::vector<int> all = starred;
  all.insert(all.end(), unstarred.begin(), unstarred.end());

  std::vector<std::vector<Hyperedge>> chains{{}};
  if (g.tag == Group::GL) {
    if (ds != de) return out;
  } else {
    if ((ds - de) % g.n != 0) return out;
    int k = (ds - de) / g.n;
    if (k > 0) chains = hyperedge_chains(1, p, g.n, k, all);
    if (k < 0) chains = hyperedge_chains(p + 1, p + q, g.n, -k, all);
  }
  for (const auto& chain : chains) {
    auto rest = all;
    for (const auto& h : chain)
      for (int v : h) --rest[v - 1];
    std::vector<int> rs(rest.begin(), rest.begin() + p), cs(rest.begin() + p, rest.end());
    for (const auto& a : matrices_with_margins(rs, cs)) {
      auto base = matrix_to_diagram(a, true);
      ArcDiagram diagram(p + q, base.arcs(), chain, p);
      if (is_admissible(diagram, g)) out.push_back(std::move(diagram));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tensorinv
