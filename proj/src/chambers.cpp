#include "hyperlat/chambers.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace hyperlat {

SimpleRootSystem gamma_simple_roots(int n) {
  if (n != 7 && n != 13) throw std::invalid_argument("gamma_simple_roots: n must be 7 or 13");
  SimpleRootSystem s;
  s.n = n;
  LatticeVector a0(n);
  a0[0] = 1;
  a0[1] = a0[2] = a0[3] = -1;
  s.roots.push_back(a0);
  for (int i = 1; i < n; ++i) {
    LatticeVector a(n);
    a[static_cast<std::size_t>(i)] = 1;
    a[static_cast<std::size_t>(i) + 1] = -1;
    s.roots.push_back(a);
  }
  s.roots.push_back(LatticeVector::basis(n, n));
  if (n == 13) {
    LatticeVector a14(n);
    a14[0] = 3;
    for (int p = 1; p <= 11; ++p) a14[static_cast<std::size_t>(p)] = -1;
    s.roots.push_back(a14);
  }
  return s;
}

std::vector<std::string> diagram_violations(const SimpleRootSystem& s) {
  const int m = static_cast<int>(s.roots.size());
  std::vector<std::string> out;
  auto bonded = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    if (j == i + 1 && i >= 1 && j <= s.n) return true;
    if (i == 0 && j == 3) return true;
    if (s.n == 13 && i == 11 && j == 14) return true;
    return false;
  };
  for (int i = 0; i < m; ++i) {
    const long expected_norm = i == s.n ? 1 : 2;
    if (norm(s.roots[static_cast<std::size_t>(i)]) != expected_norm)
      out.push_back("alpha_" + std::to_string(i) + " has norm " + norm(s.roots[static_cast<std::size_t>(i)]).get_str());
    for (int j = i + 1; j < m; ++j) {
      const Integer v = inner(s.roots[static_cast<std::size_t>(i)], s.roots[static_cast<std::size_t>(j)]);
      const long expected = bonded(i, j) ? -1 : 0;
      if (v != expected)
        out.push_back("(alpha_" + std::to_string(i) + ", alpha_" + std::to_string(j) + ") = " + v.get_str());
    }
  }
  return out;
}

std::vector<LatticeVector> gosset_walls_n7() {
  const int n = 7;
  std::vector<LatticeVector> out;
  for (int p = 1; p <= n; ++p) out.push_back(LatticeVector::basis(n, p));
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) {
      LatticeVector w = LatticeVector::basis(n, 0);
      w[static_cast<std::size_t>(p)] = w[static_cast<std::size_t>(q)] = -1;
      out.push_back(w);
    }
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) {
      LatticeVector w(n);
      w[0] = 2;
      for (int r = 1; r <= n; ++r) w[static_cast<std::size_t>(r)] = (r == p || r == q) ? 0 : -1;
      out.push_back(w);
    }
  for (int p = 1; p <= n; ++p) {
    LatticeVector w(n);
    w[0] = 3;
    for (int r = 1; r <= n; ++r) w[static_cast<std::size_t>(r)] = r == p ? -2 : -1;
    out.push_back(w);
  }
  return out;
}

bool in_D(const LatticeVector& x, int n) {
  const auto s = gamma_simple_roots(n);
  if (x.n() != n) throw DimensionMismatch("in_D: vector has the wrong dimension");
  return std::all_of(s.roots.begin(), s.roots.end(), [&](const LatticeVector& a) { return inner(x, a) <= 0; });
}

bool in_G7(const LatticeVector& x) {
  if (x.n() != 7) throw DimensionMismatch("in_G7: vector has the wrong dimension");
  const auto walls = gosset_walls_n7();
  return std::all_of(walls.begin(), walls.end(), [&](const LatticeVector& w) { return inner(x, w) <= 0; });
}

std::vector<LatticeVector> chamber_D_extremals(int n) {
  if (n != 7) throw std::invalid_argument("chamber_D_extremals: D is a simplex only for n = 7");
  const auto s = gamma_simple_roots(n);
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < s.roots.size(); ++i) {
    std::vector<LatticeVector> rows;
    for (std::size_t j = 0; j < s.roots.size(); ++j)
      if (j != i) rows.push_back(s.roots[j]);
    LatticeVector v = solve_primitive_kernel(rows, n);
    if (inner(v, s.roots[i]) > 0) v = -v;
    out.push_back(v);
  }
  return out;
}

SignatureString SignatureString::of(const LatticeVector& x) {
  SignatureString s;
  s.x0 = x[0];
  std::map<Integer, int, std::greater<>> counts;
  for (std::size_t p = 1; p < x.size(); ++p)
    if (x[p] != 0) ++counts[-x[p]];
  for (const auto& [v, m] : counts) s.parts.emplace_back(v, m);
  return s;
}

namespace {

std::string value_token(const Integer& v) {
  if (v >= 0 && v <= 9) return v.get_str();
  return "(" + v.get_str() + ")";
}

struct Parser {
  const std::string& text;
  int max_support;
  std::vector<SignatureString> found;

  // Reads a value token at `pos`; returns the end position or npos.
  std::size_t read_value(std::size_t pos, Integer& out) const {
    if (pos >= text.size()) return std::string::npos;
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      out = text[pos] - '0';
      return pos + 1;
    }
    if (text[pos] != '(') return std::string::npos;
    const std::size_t close = text.find(')', pos);
    if (close == std::string::npos || close == pos + 1) return std::string::npos;
    const std::string inside = text.substr(pos + 1, close - pos - 1);
    if (out.set_str(inside, 10) != 0) return std::string::npos;
    return close + 1;
  }

  void parts_from(std::size_t pos, SignatureString& cur, int total) {
    if (pos == text.size()) {
      found.push_back(cur);
      return;
    }
    Integer v;
    const std::size_t after = read_value(pos, v);
    if (after == std::string::npos || v == 0) return;
    if (!cur.parts.empty() && v >= cur.parts.back().first) return;
    if (after < text.size() && text[after] == '^') {
      std::size_t end = after + 1;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      for (std::size_t stop = after + 2; stop <= end; ++stop) {
        if (text[after + 1] == '0') break;
        const int mult = std::stoi(text.substr(after + 1, stop - after - 1));
        if (mult < 2 || total + mult > max_support) continue;
        cur.parts.emplace_back(v, mult);
        parts_from(stop, cur, total + mult);
        cur.parts.pop_back();
      }
      return;
    }
    if (total + 1 > max_support) return;
    cur.parts.emplace_back(v, 1);
    parts_from(after, cur, total + 1);
    cur.parts.pop_back();
  }
};

}  // namespace

std::string SignatureString::render() const {
  std::string out = value_token(x0);
  for (const auto& [v, m] : parts) {
    out += value_token(v);
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out;
}

SignatureString SignatureString::parse(const std::string& text, int max_support) {
  Parser parser{text, max_support, {}};
  SignatureString cur;
  const std::size_t after = parser.read_value(0, cur.x0);
  if (after == std::string::npos) throw std::invalid_argument("SignatureString: bad leading token in '" + text + "'");
  parser.parts_from(after, cur, 0);
  if (parser.found.empty()) throw std::invalid_argument("SignatureString: cannot read '" + text + "'");
  if (parser.found.size() > 1) throw std::invalid_argument("SignatureString: ambiguous '" + text + "'");
  return parser.found.front();
}

std::vector<std::string> ReductionTrace::chain() const {
  std::vector<std::string> out{SignatureString::of(start).render()};
  for (const auto& s : steps) out.push_back(s.signature);
  return out;
}

namespace {

// Bubble sort of x_1..x_n ascending (coefficients c_p = -x_p descending);
// each swap of positions i, i+1 is the reflection in e_i - e_{i+1}.
void sort_coefficients(LatticeVector& x, std::set<int>& used) {
  const std::size_t n = x.size() - 1;
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (std::size_t i = 1; i < n; ++i)
      if (x[i] > x[i + 1]) {
        std::swap(x[i], x[i + 1]);
        used.insert(static_cast<int>(i));
        swapped = true;
      }
  }
}

}  // namespace

ReductionTrace reduce_to_D(const LatticeVector& x) {
  if (x.n() != 13) throw DimensionMismatch("reduce_to_D: vector must lie in Z^{13,1}");
  const auto sys = gamma_simple_roots(13);
  const LatticeVector& a0 = sys.roots[0];
  ReductionTrace t;
  t.start = x;
  LatticeVector cur = x;
  sort_coefficients(cur, t.indices_used);
  while (true) {
    for (int i = 1; i <= 12; ++i)
      if (inner(cur, sys.roots[static_cast<std::size_t>(i)]) > 0)
        throw ReductionError("reduce_to_D: sorted vector violates alpha_" + std::to_string(i));
    const Integer k = inner(cur, a0);
    if (k <= 0) break;
    const Integer before = cur[0];
    cur = reflect(a0, cur);
    if (cur[0] >= before) throw ReductionError("reduce_to_D: x_0 did not decrease");
    t.indices_used.insert(0);
    sort_coefficients(cur, t.indices_used);
    t.steps.push_back({0, cur, SignatureString::of(cur).render()});
  }
  t.endpoint = cur;
  t.endpoint_in_D = in_D(cur, 13);
  return t;
}

const std::vector<TableRow>& expected_reduction_table() {
  static const std::vector<TableRow> table = {
      {"13A_1", "v_P", {"1"}},
      {"13A_1", "v_L", {"41^13"}},
      {"4A_1+3A_3", "v_pqr", {"21^3", "1"}},
      {"4A_1+3A_3", "v_lmn", {"52^41^6", "421^9"}},
      {"A_1+4A_3", "v_{p,l}", {"31^8"}},
      {"A_1+4A_3", "v_{l,p}", {"431^4", "321^2", "21"}},
      {"2A_1+A_2+3A_3", "v_{p,q,l}", {"321^3", "21^2"}},
      {"2A_1+A_2+3A_3", "v_{l,m,p}", {"73^22^61", "62^71^2"}},
      {"A_1+3A_4", "v_{p,qrs}", {"42^31^3", "21^3", "1"}},
      {"A_1+3A_4", "v_{k,lmn}", {"743^31^3", "431^4", "321^2", "21"}},
      {"A_2+A_3+2A_4", "v_{p,qr,s}", {"532^31^2", "321^3", "21^2"}},
      {"A_2+A_3+2A_4", "v_{k,lm,n}", {"954^232^21", "532^21^2", "31^3"}},
      {"3A_3+A_4", "v_{p,q,rs}", {"321^4", "21^3", "1"}},
      {"3A_3+A_4", "v_{k,l,mn}", {"63^22^31^3", "42^21^5", "31^6"}},
      {"4D_4", "u_p", {"11"}},
      {"4D_4", "u_l", {"31^9"}},
      {"3A_5", "u_pqrs", {"21^4", "11"}},
      {"3A_5", "u_klmn", {"42^31^4", "21^4", "11"}},
  };
  return table;
}

namespace {

std::string join_chain(const std::vector<std::string>& chain) {
  std::string out;
  for (const auto& s : chain) out += (out.empty() ? "" : " -> ") + s;
  return out;
}

void inclusion_n7(const ChamberP& c, const VertexCatalog& cat, InclusionCertificate& cert) {
  for (const auto& v : cat.vertices) {
    ++cert.vertices_checked;
    if (!in_G7(v.vertex)) cert.failures.push_back("vertex " + v.vertex.to_string() + " is not in G");
  }
  for (const auto& e : chamber_D_extremals(7)) {
    if (c.contains(e))
      ++cert.d_extremals_in_P;
    else
      cert.failures.push_back("extremal ray " + e.to_string() + " of D is not in P");
  }
}

void inclusion_n13(const VertexCatalog& cat, const std::vector<CatalogFamily>& families, bool per_vertex,
                   InclusionCertificate& cert) {
  std::map<LatticeVector, std::string> family_of;
  for (const auto& f : families)
    for (const auto& m : f.members) family_of.emplace(m, f.name);

  std::map<std::string, std::vector<std::string>> chain_of;
  std::map<std::string, std::string> label_of;
  for (const auto& v : cat.vertices) {
    ++cert.vertices_checked;
    const ReductionTrace t = reduce_to_D(v.vertex);
    const auto fam = family_of.find(v.vertex);
    const std::string family = fam == family_of.end() ? "" : fam->second;
    if (family.empty()) cert.failures.push_back("vertex " + v.vertex.to_string() + " belongs to no family");
    if (!t.endpoint_in_D) cert.failures.push_back("endpoint of " + v.vertex.to_string() + " is not in D");
    if (norm(t.endpoint) != norm(t.start))
      cert.failures.push_back("reduction of " + v.vertex.to_string() + " changed the norm");
    for (int i : t.indices_used) {
      cert.indices_used.insert(i);
      if (i > 12) cert.failures.push_back("reduction of " + v.vertex.to_string() + " used s_" + std::to_string(i));
    }
    cert.terminal_signatures.insert(t.chain().back());
    const auto chain = t.chain();
    auto [it, fresh] = chain_of.emplace(family, chain);
    if (!fresh && it->second != chain)
      cert.failures.push_back("family " + family + " has differing chains: " + join_chain(it->second) + " vs " +
                              join_chain(chain));
    label_of.emplace(family, v.type_label);
    if (per_vertex) {
      nlohmann::json j = to_json(t);
      j["family"] = family;
      cert.per_vertex.push_back(std::move(j));
    }
  }

  for (const auto& f : families) {
    auto it = chain_of.find(f.name);
    if (it == chain_of.end()) continue;
    cert.table.push_back({label_of[f.name], f.name, it->second});
  }

  const auto& expected = expected_reduction_table();
  std::set<std::string> expected_terminal;
  for (const auto& row : expected) expected_terminal.insert(row.chain.back());
  if (cert.table.size() != expected.size())
    cert.table_diff.push_back("expected " + std::to_string(expected.size()) + " rows, found " +
                              std::to_string(cert.table.size()));
  for (std::size_t i = 0; i < std::max(expected.size(), cert.table.size()); ++i) {
    if (i >= expected.size() || i >= cert.table.size()) break;
    const auto& a = expected[i];
    const auto& b = cert.table[i];
    if (a.type_label != b.type_label || a.family != b.family || a.chain != b.chain)
      cert.table_diff.push_back("row " + std::to_string(i + 1) + ": expected " + a.type_label + " " + a.family + " " +
                                join_chain(a.chain) + ", found " + b.type_label + " " + b.family + " " +
                                join_chain(b.chain));
  }
  if (cert.terminal_signatures != expected_terminal)
    cert.failures.push_back("terminal signatures differ from the last column of the table");
}

}  // namespace

InclusionCertificate verify_inclusion(const ChamberP& c, const VertexCatalog& cat,
                                      const std::vector<CatalogFamily>& families, bool per_vertex) {
  InclusionCertificate cert;
  cert.n = c.n;
  if (c.n == 7)
    inclusion_n7(c, cat, cert);
  else if (c.n == 13)
    inclusion_n13(cat, families, per_vertex, cert);
  else
    throw std::invalid_argument("verify_inclusion: n must be 7 or 13");
  cert.pass = cert.failures.empty() && cert.table_diff.empty();
  return cert;
}

nlohmann::json to_json(const TableRow& r) {
  return {{"type_label", r.type_label}, {"family", r.family}, {"chain", r.chain}};
}

nlohmann::json to_json(const ReductionTrace& t) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : t.steps) steps.push_back({{"index", s.index}, {"vector", s.vector}, {"signature", s.signature}});
  return {{"vertex", t.start},
          {"chain", t.chain()},
          {"steps", steps},
          {"endpoint", t.endpoint},
          {"indices_used", std::vector<int>(t.indices_used.begin(), t.indices_used.end())},
          {"in_D", t.endpoint_in_D}};
}

}  // namespace hyperlat
