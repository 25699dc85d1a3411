#include "tensorinv/cli.hpp"

#include <algorithm>
#include <iostream>
#include <iterator>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tensorinv/dimensions.hpp"
#include "tensorinv/errors.hpp"
#include "tensorinv/invariant_eval.hpp"
#include "tensorinv/lie_oracle.hpp"
#include "tensorinv/rsk.hpp"

namespace tensorinv::cli {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Reference values

namespace {

void add_row(std::vector<ReferenceEntry>& out, const std::string& table, Group g, int n,
             const std::vector<int>& orders, const std::vector<long>& values, const std::string& where) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    int m = orders[k];
    ReferenceEntry e{table, g, n, m, 0, 0, values[k], ""};
    if (g == Group::GL) e.p = e.q = m;
    if (g == Group::SL) {
      e.p = (m + 1) / 2;
      e.q = m / 2;
    }
    e.provenance = table + " " + where + ", " + (g == Group::GL ? "p=q=" : "m=") + std::to_string(m);
    out.push_back(e);
  }
}

std::vector<int> range(int from, int to, int step = 1) {
  std::vector<int> v;
  for (int x = from; x <= to; x += step) v.push_back(x);
  return v;
}

std::vector<ReferenceEntry> build_references() {
  std::vector<ReferenceEntry> r;
  const auto m16 = range(1, 6);
  const auto even = range(2, 12, 2);
  // table1, one block per column
  add_row(r, "table1", Group::GL, 1, m16, {1, 1, 1, 1, 1, 1}, "GL n=1");
  add_row(r, "table1", Group::GL, 2, range(0, 5), {1, 1, 2, 5, 14, 42}, "GL n=2");
  add_row(r, "table1", Group::GL, 3, m16, {1, 2, 6, 23, 103, 513}, "GL n=3");
  add_row(r, "table1", Group::GL, 4, m16, {1, 2, 6, 24, 119, 694}, "GL n=4");
  add_row(r, "table1", Group::GL, 5, m16, {1, 2, 6, 24, 120, 719}, "GL n=5");
  add_row(r, "table1", Group::GL, 0, m16, {1, 2, 6, 24, 120, 720}, "GL stable");

  add_row(r, "table1", Group::SL, 1, m16, {1, 1, 1, 1, 1, 1}, "SL n=1 (index p+q)");
  add_row(r, "table1", Group::SL, 2, m16, {0, 1, 0, 2, 0, 5}, "SL n=2 (index p+q)");
  {
    const std::vector<long> vals{1, 3, 21, 210, 2574, 36036};
    for (int k = 1; k <= 6; ++k) {
      int p = 3 * k - 2;
      r.push_back({"table1", Group::SL, 3, p + 1, p, 1, vals[k - 1],
                   "table1 SL n=3 with min(p,q)=1, index " + std::to_string(k) + ": p=" + std::to_string(p) + ", q=1"});
    }
  }
  {
    const std::vector<long> fact{1, 2, 6, 24, 120, 720};
    for (int m = 1; m <= 6; ++m)
      r.push_back({"table1", Group::SL, 0, 2 * m, m, m, fact[m - 1],
                   "table1 SL stable, p=q=" + std::to_string(m)});
    for (int m = 1; m <= 3; ++m)
      r.push_back({"table1", Group::SL, 0, 2 * m, m + 1, m - 1, 0,
                   "table1 SL stable, p=" + std::to_string(m + 1) + ", q=" + std::to_string(m - 1)});
  }

  add_row(r, "table1", Group::O, 1, even, {1, 1, 1, 1, 1, 1}, "O n=1");
  add_row(r, "table1", Group::O, 2, even, {1, 3, 10, 35, 126, 462}, "O n=2");
  add_row(r, "table1", Group::O, 3, even, {1, 3, 15, 91, 603, 4213}, "O n=3");
  add_row(r, "table1", Group::O, 4, even, {1, 3, 15, 105, 903, 8778}, "O n=4");
  add_row(r, "table1", Group::O, 5, even, {1, 3, 15, 105, 945, 10263}, "O n=5");

  add_row(r, "table1", Group::SO, 1, m16, {1, 1, 1, 1, 1, 1}, "SO n=1");
  add_row(r, "table1", Group::SO, 2, m16, {0, 2, 0, 6, 0, 20}, "SO n=2");
  add_row(r, "table1", Group::SO, 3, m16, {0, 1, 1, 3, 6, 15}, "SO n=3");
  add_row(r, "table1", Group::SO, 4, m16, {0, 1, 0, 4, 0, 25}, "SO n=4");
  add_row(r, "table1", Group::SO, 5, m16, {0, 1, 0, 3, 1, 15}, "SO n=5");

  add_row(r, "table1", Group::Sp, 1, even, {1, 2, 5, 14, 42, 132}, "Sp n=1");
  add_row(r, "table1", Group::Sp, 2, even, {1, 3, 14, 84, 594, 4719}, "Sp n=2");
  add_row(r, "table1", Group::Sp, 3, even, {1, 3, 15, 104, 909, 9449}, "Sp n=3");
  add_row(r, "table1", Group::Sp, 4, even, {1, 3, 15, 105, 944, 10340}, "Sp n=4");

  const std::vector<long> odd_df{0, 1, 0, 3, 0, 15, 0, 105, 0, 945, 0, 10395};
  for (Group g : {Group::O, Group::SO, Group::Sp})
    add_row(r, "table1", g, 0, range(1, 12), odd_df, to_string(g) + " stable");

  // table2: SL, n = 4, p + q = 8
  const std::vector<long> t2{14, 0, 19, 0, 24, 0, 19, 0, 14};
  for (int p = 8; p >= 0; --p)
    r.push_back({"table2", Group::SL, 4, 8, p, 8 - p, t2[8 - p],
                 "table2 SL n=4, p=" + std::to_string(p) + ", q=" + std::to_string(8 - p)});

  const std::vector<long> t3{1, 6, 3, 4, 3, 3};
  for (int n = 1; n <= 6; ++n)
    r.push_back({"table3", Group::SO, n, 4, 0, 0, t3[n - 1], "table3 SO m=4, n=" + std::to_string(n)});

  const std::vector<long> t4{5, 14, 15, 15};
  for (int n = 1; n <= 4; ++n)
    r.push_back({"table4", Group::Sp, n, 6, 0, 0, t4[n - 1], "table4 Sp m=6, n=" + std::to_string(n)});
  return r;
}

}  // namespace

const std::vector<ReferenceEntry>& reference_entries() {
  static const std::vector<ReferenceEntry> entries = build_references();
  return entries;
}

// ---------------------------------------------------------------------------
// Output

namespace {

enum class Format { Plain, Json, Csv };

Json big(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

class Emitter {
 public:
  Emitter(Format fmt, std::ostream& out) : fmt_(fmt), out_(out) {}

  void emit(const Json& row) {
    switch (fmt_) {
      case Format::Json:
        out_ << row.dump() << "\n";
        break;
      case Format::Csv: {
        if (!header_) {
          bool first = true;
          for (const auto& [k, v] : row.items()) {
            out_ << (first ? "" : ",") << k;
            first = false;
          }
          out_ << "\n";
          header_ = true;
        }
        bool first = true;
        for (const auto& [k, v] : row.items()) {
          out_ << (first ? "" : ",") << csv_cell(v);
          first = false;
        }
        out_ << "\n";
        break;
      }
      case Format::Plain: {
        bool first = true;
        if (row.contains("status")) {
          out_ << row["status"].get<std::string>();
          first = false;
        }
        for (const auto& [k, v] : row.items()) {
          if (k == "status") continue;
          out_ << (first ? "" : " ") << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
          first = false;
        }
        out_ << "\n";
        break;
      }
    }
  }

 private:
  Format fmt_;
  std::ostream& out_;
  bool header_ = false;
};

// ---------------------------------------------------------------------------
// Options

struct Options {
  std::string group;
  int n = -1;
  int m = -1;
  int p = -1;
  int q = -1;
  std::string degree;
  std::string format = "plain";
  std::uint64_t seed = 1;
  long limit = -1;
  std::string which = "all";
  std::string kind = "diagrams";
  std::string map;
  std::string input;
  int trials = 20;
  int tuples = 5;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& f) {
  if (f == "json") return Format::Json;
  if (f == "csv") return Format::Csv;
  return Format::Plain;
}

GroupKind require_group(const Options& o) {
  if (o.group.empty()) throw UsageError("--group is required");
  if (o.n < 1) throw UsageError("--n must be a positive integer");
  return GroupKind::parse(o.group, o.n);
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw UsageError("");
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--degree entries must be nonnegative integers: '" + item + "'");
    }
  }
  return out;
}

// "d1,d2,..." or "d1,...,dp/e1,...,eq" for bipartite groups.
std::pair<std::vector<int>, std::vector<int>> parse_degree(const std::string& text, bool bipartite) {
  auto slash = text.find('/');
  if (bipartite) {
    if (slash == std::string::npos) throw UsageError("GL/SL degrees take the form d1,...,dp/e1,...,eq");
    return {parse_list(text.substr(0, slash)), parse_list(text.substr(slash + 1))};
  }
  if (slash != std::string::npos) throw UsageError("only GL/SL degrees have a '/' split");
  return {parse_list(text), {}};
}

// Tensor-order query from --m or --p/--q.
InvariantQuery require_query(const Options& o, const GroupKind& g) {
  if (g.bipartite()) {
    if (o.p >= 0 || o.q >= 0) {
      if (o.p < 0 || o.q < 0) throw UsageError("--p and --q go together");
      return InvariantQuery::mixed(g, o.p, o.q);
    }
    if (o.m < 0) throw UsageError(g.name() + " needs --m or --p/--q");
    return InvariantQuery::tensor(g, o.m);
  }
  if (o.p >= 0 || o.q >= 0) throw UsageError("--p/--q apply to GL and SL only");
  if (o.m < 0) throw UsageError(g.name() + " needs --m");
  return InvariantQuery::tensor(g, o.m);
}

Json query_fields(const InvariantQuery& q) {
  Json row;
  row["group"] = to_string(q.group.tag);
  row["n"] = q.group.n;
  if (q.group.bipartite()) {
    row["p"] = q.p;
    row["q"] = q.q;
  } else {
    row["m"] = q.m;
  }
  return row;
}

constexpr int kBasisOrderLimit = 12;

std::vector<int> ones(int k) { return std::vector<int>(k, 1); }

std::vector<ArcDiagram> tensor_basis(const InvariantQuery& q) {
  if (q.group.bipartite()) return enumerate_basis(q.group, ones(q.p), ones(q.q));
  return enumerate_basis(q.group, ones(q.m));
}

// Every applicable independent count for a tensor query.
std::vector<std::pair<std::string, BigInt>> all_methods(const InvariantQuery& q) {
  std::vector<std::pair<std::string, BigInt>> out;
  out.emplace_back("syt-sum", dim_invariants(q));
  const GroupKind& g = q.group;
  int order = g.bipartite() ? q.p + q.q : q.m;
  if (order <= kBasisOrderLimit) out.emplace_back("basis", BigInt(static_cast<long>(tensor_basis(q).size())));
  switch (g.tag) {
    case Group::GL:
      if (q.p == q.q && q.p <= 9) out.emplace_back("permutations", count_restricted_permutations(q.p, g.n));
      if (q.p == q.q && g.n >= q.p) out.emplace_back("stable", stable_dim(Group::GL, q.p));
      break;
    case Group::SL:
      if (std::min(q.p, q.q) == 0 && std::max(q.p, q.q) % g.n == 0)
        out.emplace_back("rectangle-syt", n_dimensional_catalan(g.n, std::max(q.p, q.q) / g.n));
      break;
    case Group::O:
      if (q.m <= kBasisOrderLimit)
        out.emplace_back("involutions", count_restricted_involutions(q.m, g.n, InvolutionMode::FpfIncreasing));
      if (2 * g.n >= q.m) out.emplace_back("stable", stable_dim(Group::O, q.m));
      break;
    case Group::SO:
      if (q.m <= kBasisOrderLimit)
        out.emplace_back("involutions", count_restricted_involutions(q.m, g.n, InvolutionMode::SoFixedPoints));
      if (g.n % 2 == 0) out.emplace_back("walks", count_lattice_walks(q.m, g));
      if (g.n > q.m) out.emplace_back("stable", stable_dim(Group::SO, q.m));
      break;
    case Group::Sp:
      if (q.m <= kBasisOrderLimit) {
        out.emplace_back("involutions", count_restricted_involutions(q.m, g.n, InvolutionMode::FpfDecreasing));
        out.emplace_back("matchings", count_noncrossing_matchings(q.m, g.n + 1));
      }
      out.emplace_back("oscillating", count_oscillating_tableaux(q.m, g.n));
      out.emplace_back("walks", count_lattice_walks(q.m, g));
      if (2 * g.n >= q.m) out.emplace_back("stable", stable_dim(Group::Sp, q.m));
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_dims(const Options& o, std::ostream& out) {
  auto g = require_group(o);
  Format fmt = parse_format(o.format);
  if (!o.degree.empty()) {
    auto [d, e] = parse_degree(o.degree, g.bipartite());
    BigInt value = g.bipartite() ? graded_dim(g, d, e) : graded_dim(g, d);
    if (fmt == Format::Plain) {
      out << value.get_str() << "\n";
      return 0;
    }
    Emitter em(fmt, out);
    Json row;
    row["group"] = to_string(g.tag);
    row["n"] = g.n;
    row["degree"] = o.degree;
    row["dimension"] = big(value);
    row["method"] = "kostka-sum";
    em.emit(row);
    return 0;
  }
  auto q = require_query(o, g);
  if (fmt == Format::Plain) {
    out << dim_invariants(q).get_str() << "\n";
    return 0;
  }
  Emitter em(fmt, out);
  auto methods = all_methods(q);
  bool agree = true;
  for (const auto& [name, value] : methods) {
    Json row = query_fields(q);
    row["dimension"] = big(value);
    row["method"] = name;
    em.emit(row);
    agree = agree && value == methods.front().second;
  }
  return agree ? 0 : 1;
}

int cmd_table(const Options& o, std::ostream& out) {
  static const std::vector<std::string> known{"all", "table1", "table2", "table3", "table4"};
  if (std::find(known.begin(), known.end(), o.which) == known.end())
    throw UsageError("--which must be one of table1..table4 or all");
  std::optional<Group> only;
  if (!o.group.empty()) only = GroupKind::parse(o.group, 1).tag;
  Emitter em(parse_format(o.format), out);
  bool all_pass = true;
  for (const auto& e : reference_entries()) {
    if (o.which != "all" && e.table != o.which) continue;
    if (only && e.group != *only) continue;
    if (o.n > 0 && e.n != o.n) continue;
    // Stable rows are evaluated past the point where the length bound binds.
    int n = e.n > 0 ? e.n : e.m + 1;
    GroupKind g{e.group, n};
    InvariantQuery q = g.bipartite() ? InvariantQuery::mixed(g, e.p, e.q) : InvariantQuery::tensor(g, e.m);
    Json got;
    bool pass = true;
    auto record = [&](const std::string& method, const BigInt& v) {
      got[method] = big(v);
      pass = pass && v == e.expected;
    };
    record("syt-sum", dim_invariants(q));
    int order = g.bipartite() ? e.p + e.q : e.m;
    if (order <= kBasisOrderLimit) record("basis", BigInt(static_cast<long>(tensor_basis(q).size())));
    if (e.n == 0) {
      if (g.bipartite()) record("stable", e.p == e.q ? stable_dim(e.group, e.p) : BigInt(0));
      else record("stable", stable_dim(e.group, e.m));
    }
    Json row;
    row["status"] = pass ? "PASS" : "FAIL";
    row["table"] = e.table;
    row["group"] = to_string(e.group);
    row["n"] = e.n > 0 ? Json(e.n) : Json("inf");
    if (g.bipartite()) {
      row["p"] = e.p;
      row["q"] = e.q;
    } else {
      row["m"] = e.m;
    }
    row["expected"] = e.expected;
    row["got"] = got;
    row["provenance"] = e.provenance;
    em.emit(row);
    all_pass = all_pass && pass;
  }
  return all_pass ? 0 : 1;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  auto g = require_group(o);
  if (o.kind != "diagrams" && o.kind != "tableaux") throw UsageError("--kind must be diagrams or tableaux");
  std::vector<int> d, e;
  if (!o.degree.empty()) {
    std::tie(d, e) = parse_degree(o.degree, g.bipartite());
  } else {
    auto q = require_query(o, g);
    if (g.bipartite()) {
      d = ones(q.p);
      e = ones(q.q);
    } else {
      d = ones(q.m);
    }
  }
  std::vector<std::string> records;
  if (o.kind == "diagrams") {
    auto basis = g.bipartite() ? enumerate_basis(g, d, e) : enumerate_basis(g, d);
    for (const auto& x : basis) records.push_back(x.to_json());
  } else {
    auto monomials = g.bipartite() ? standard_monomials(g, d, e) : standard_monomials(g, d);
    for (const auto& x : monomials) {
      if (const auto* t = std::get_if<Tableau>(&x)) {
        records.push_back(t->to_json());
      } else {
        const auto& b = std::get<Bitableau>(x);
        records.push_back("{\"recording\":" + b.recording.to_json() + ",\"insertion\":" + b.insertion.to_json() + "}");
      }
    }
  }
  Format fmt = parse_format(o.format);
  std::size_t cap = o.limit >= 0 ? static_cast<std::size_t>(o.limit) : records.size();
  if (fmt == Format::Csv) out << "index,record\n";
  for (std::size_t k = 0; k < std::min(cap, records.size()); ++k) {
    if (fmt == Format::Csv) out << k << "," << csv_cell(Json(records[k])) << "\n";
    else out << records[k] << "\n";
  }
  return 0;
}

Tableau tableau_from(const Json& j) {
  return Tableau::from_json(j.dump());
}

int cmd_rsk(const Options& o, std::ostream& out) {
  if (o.map != "a" && o.map != "b" && o.map != "c") throw UsageError("--map must be a, b or c");
  std::string text = o.input;
  if (text.empty() || text == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  Json in;
  try {
    in = Json::parse(text);
  } catch (const std::exception& ex) {
    throw UsageError(std::string("--input is not valid JSON: ") + ex.what());
  }
  Json result;
  result["map"] = o.map;
  if (in.is_array()) {
    auto a = NatMatrix::from_rows(in.get<std::vector<std::vector<int>>>());
    result["matrix"] = a.to_rows();
    if (o.map == "a") {
      auto b = rsk_a(a);
      result["recording"] = Json::parse(b.recording.to_json());
      result["insertion"] = Json::parse(b.insertion.to_json());
    } else {
      auto t = o.map == "b" ? rsk_b_inv(a) : rsk_c_inv(a);
      result["tableau"] = Json::parse(t.to_json());
    }
  } else if (in.is_object()) {
    int size = in.contains("m") ? in["m"].get<int>() : -1;
    if (o.map == "a") {
      if (!in.contains("recording") || !in.contains("insertion"))
        throw UsageError("rsk a expects a matrix or {recording, insertion}");
      Bitableau b{tableau_from(in["recording"]), tableau_from(in["insertion"])};
      int rows = in.contains("rows") ? in["rows"].get<int>() : -1;
      int cols = in.contains("cols") ? in["cols"].get<int>() : -1;
      result["matrix"] = rsk_a_inv(b, rows, cols).to_rows();
    } else {
      auto t = tableau_from(in);
      result["tableau"] = Json::parse(t.to_json());
      result["matrix"] = (o.map == "b" ? rsk_b(t, size) : rsk_c(t, size)).to_rows();
    }
  } else {
    throw UsageError("--input must be a matrix (array of rows) or a tableau object");
  }
  Format fmt = parse_format(o.format);
  if (fmt == Format::Csv) {
    out << "map,result\n" << o.map << "," << csv_cell(Json(result.dump())) << "\n";
  } else {
    out << result.dump() << "\n";
  }
  return 0;
}

Json claim_row(const std::string& claim, const std::string& method, const Json& expected, const Json& got, bool pass,
               const std::string& witness = "") {
  Json row;
  row["status"] = pass ? "PASS" : "FAIL";
  row["claim"] = claim;
  row["method"] = method;
  row["expected"] = expected;
  row["got"] = got;
  if (!witness.empty()) row["witness"] = witness;
  return row;
}

int cmd_verify(const Options& o, std::ostream& out) {
  auto g = require_group(o);
  auto form = FormSpec::standard(g);
  Emitter em(parse_format(o.format), out);
  bool ok = true;
  auto emit = [&](const Json& row) {
    em.emit(row);
    ok = ok && row["status"] == "PASS";
  };

  std::vector<int> d, e;
  BigInt expected;
  std::string label;
  if (!o.degree.empty()) {
    std::tie(d, e) = parse_degree(o.degree, g.bipartite());
    expected = g.bipartite() ? graded_dim(g, d, e) : graded_dim(g, d);
    label = g.name() + " degree " + o.degree;
  } else {
    auto q = require_query(o, g);
    d = g.bipartite() ? ones(q.p) : ones(q.m);
    e = g.bipartite() ? ones(q.q) : std::vector<int>{};
    expected = dim_invariants(q);
    label = g.name() + (g.bipartite() ? " p=" + std::to_string(q.p) + " q=" + std::to_string(q.q)
                                      : " m=" + std::to_string(q.m));
  }
  auto basis = g.bipartite() ? enumerate_basis(g, d, e) : enumerate_basis(g, d);
  auto monomials = g.bipartite() ? standard_monomials(g, d, e) : standard_monomials(g, d);
  emit(claim_row(label + ": basis size", "enumerate_basis", big(expected), static_cast<long>(basis.size()),
                 BigInt(static_cast<long>(basis.size())) == expected));
  emit(claim_row(label + ": standard monomial count", "tableaux", big(expected), static_cast<long>(monomials.size()),
                 BigInt(static_cast<long>(monomials.size())) == expected));

  std::vector<Functional> fs;
  int passed = 0;
  std::string witness;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    fs.push_back(diagram_functional(basis[k], g, form));
    auto rep = check_invariance(fs.back(), g, form, o.trials, o.tuples, o.seed + k);
    if (rep.invariant) ++passed;
    else if (witness.empty()) witness = basis[k].to_json() + " " + rep.witness;
  }
  emit(claim_row(label + ": invariance", std::to_string(o.trials) + " samples x " + std::to_string(o.tuples) + " tuples",
                 static_cast<long>(basis.size()), passed, passed == static_cast<int>(basis.size()), witness));

  int vectors = g.bipartite() ? static_cast<int>(e.size()) : static_cast<int>(d.size());
  int covectors = g.bipartite() ? static_cast<int>(d.size()) : 0;
  int samples = 2 * static_cast<int>(basis.size()) + 2;
  int r = evaluation_rank(fs, g.dim(), samples, o.seed);
  emit(claim_row(label + ": diagram evaluation rank", "random rational points", big(expected), r, BigInt(r) == expected));

  std::vector<Functional> ms;
  for (const auto& x : monomials) ms.push_back(monomial_functional(x, g, form, vectors, covectors));
  int rm = evaluation_rank(ms, g.dim(), 2 * static_cast<int>(ms.size()) + 2, o.seed);
  emit(claim_row(label + ": standard monomial rank", "random rational points", big(expected), rm,
                 BigInt(rm) == expected));

  if (g.tag == Group::SO) {
    // Hyperedge functionals change sign under a reflection.
    int with_hyper = 0, flipped = 0;
    std::mt19937_64 rng(o.seed);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (basis[k].hyperedges().empty()) continue;
      ++with_hyper;
      RationalVector u(g.dim());
      do {
        for (auto& x : u) x = random_rational(rng);
      } while (form.pair(u, u) == 0);
      auto rep = check_invariance_under(fs[k], reflection(form, u), o.tuples, o.seed + k);
      if (!rep.invariant) ++flipped;
    }
    if (with_hyper > 0)
      emit(claim_row(label + ": hyperedge functionals are not O-invariant", "reflection", with_hyper, flipped,
                     flipped == with_hyper));
  }
  return ok ? 0 : 1;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  auto g = require_group(o);
  auto q = require_query(o, g);
  long limit = o.limit > 0 ? o.limit : oracle_limit_from_env();
  BigInt expected = dim_invariants(q);
  BigInt got = lie_invariant_dim(q, limit);
  Emitter em(parse_format(o.format), out);
  Json row = claim_row(g.name() + " invariant dimension", "lie-algebra kernel", big(expected), big(got), got == expected);
  Json fields = query_fields(q);
  for (const auto& [k, v] : fields.items()) row[k] = v;
  em.emit(row);
  return got == expected ? 0 : 1;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--group", o.group, "gl, sl, o, so or sp")
      ->check(CLI::IsMember({"gl", "sl", "o", "so", "sp"}, CLI::ignore_case));
  sub->add_option("--n", o.n, "group parameter (dim V, or half of it for sp)");
  sub->add_option("--m", o.m, "tensor order");
  sub->add_option("--p", o.p, "number of V* factors (gl, sl)");
  sub->add_option("--q", o.q, "number of V factors (gl, sl)");
  sub->add_option("--degree", o.degree, "multidegree: d1,d2,... or d1,...,dp/e1,...,eq for gl and sl");
  sub->add_option("--format", o.format, "plain, json or csv")->check(CLI::IsMember({"plain", "json", "csv"}));
  sub->add_option("--seed", o.seed, "random seed");
  sub->add_option("--limit", o.limit, "record cap (enumerate) or tensor-space cap (oracle)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Bases and dimensions of tensor invariants of the classical groups", "tensorinv"};
  app.require_subcommand(1);
  auto* dims = app.add_subcommand("dims", "dimension of an invariant space");
  auto* table = app.add_subcommand("table", "recompute the reference tables");
  auto* enumerate = app.add_subcommand("enumerate", "stream basis diagrams or tableaux as JSON lines");
  auto* rsk = app.add_subcommand("rsk", "apply an RSK correspondence");
  auto* verify = app.add_subcommand("verify", "invariance and linear independence checks");
  auto* oracle = app.add_subcommand("oracle", "Lie algebra kernel dimension");
  for (auto* sub : {dims, table, enumerate, rsk, verify, oracle}) add_common(sub, o);
  table->add_option("--which", o.which, "table1, table2, table3, table4 or all");
  enumerate->add_option("--kind", o.kind, "diagrams or tableaux");
  rsk->add_option("--map", o.map, "a, b or c")->required();
  rsk->add_option("--input", o.input, "JSON matrix or tableau ('-' reads stdin)");
  verify->add_option("--trials", o.trials, "group samples per functional");
  verify->add_option("--tuples", o.tuples, "argument tuples per sample");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << "usage error: " << ex.what() << "\n";
    return 2;
  }

  try {
    if (*dims) return cmd_dims(o, out);
    if (*table) return cmd_table(o, out);
    if (*enumerate) return cmd_enumerate(o, out);
    if (*rsk) return cmd_rsk(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*oracle) return cmd_oracle(o, out);
  } catch (const UsageError& ex) {
    err << "usage error: " << ex.what() << "\n";
    return 2;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& ex) {
    err << "usage error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace tensorinv::cli
