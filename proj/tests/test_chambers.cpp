#include <doctest.h>

#include <random>
#include <set>

#include "hyperlat/chambers.hpp"
#include "hyperlat/e7.hpp"

using namespace hyperlat;

namespace {

LatticeVector from_signature(const std::string& text, int n = 13) {
  const auto s = SignatureString::parse(text);
  LatticeVector v(n);
  v[0] = s.x0;
  std::size_t p = 1;
  for (const auto& [value, mult] : s.parts)
    for (int k = 0; k < mult; ++k) v[p++] = -value;
  return v;
}

}  // namespace

TEST_CASE("simple roots of the reflection groups") {
  for (int n : {7, 13}) {
    const auto s = gamma_simple_roots(n);
    CHECK(s.roots.size() == static_cast<std::size_t>(n == 7 ? 8 : 15));
    CHECK(diagram_violations(s).empty());
    for (const auto& r : s.roots) CHECK((norm(r) == 1 || norm(r) == 2));
  }
}

TEST_CASE("Gosset walls equal the norm 1 vectors at -1 against v_7 in a box") {
  const auto walls = gosset_walls_n7();
  CHECK(walls.size() == 56);
  const LatticeVector v7 = weyl_vector_n7();
  std::set<LatticeVector> expected;
  LatticeVector x(7);
  // x_0 in [0,3], x_p in [-2,1]
  for (int code = 0; code < 4 * (1 << 14); ++code) {
    int c = code;
    x[0] = c % 4;
    c /= 4;
    for (std::size_t p = 1; p <= 7; ++p) {
      x[p] = (c % 4) - 2;
      c /= 4;
    }
    if (norm(x) == 1 && inner(x, v7) == -1) expected.insert(x);
  }
  CHECK(std::set<LatticeVector>(walls.begin(), walls.end()) == expected);
  CHECK(walls.front()[0] == 0);
  CHECK(walls.back()[0] == 3);
}

TEST_CASE("chamber membership") {
  CHECK(in_D(LatticeVector::basis(13, 0), 13));
  CHECK(in_D(LatticeVector::basis(13, 0) - LatticeVector::basis(13, 1), 13));
  CHECK(!in_D(LatticeVector::basis(13, 0) - LatticeVector::basis(13, 13), 13));
  CHECK(!in_G7(LatticeVector::basis(7, 1)));
  CHECK(in_G7(weyl_vector_n7()));
  CHECK_THROWS_AS(in_D(LatticeVector::basis(7, 0), 13), DimensionMismatch);
}

TEST_CASE("extremal rays of D") {
  CHECK_THROWS_AS(chamber_D_extremals(13), std::invalid_argument);
  for (int n : {7}) {
    const auto s = gamma_simple_roots(n);
    const auto ext = chamber_D_extremals(n);
    CHECK(ext.size() == s.roots.size());
    for (std::size_t i = 0; i < ext.size(); ++i) {
      CHECK(in_D(ext[i], n));
      for (std::size_t j = 0; j < s.roots.size(); ++j)
        if (j != i) CHECK(inner(ext[i], s.roots[j]) == 0);
      CHECK(inner(ext[i], s.roots[i]) < 0);
    }
  }
}

TEST_CASE("signature strings") {
  CHECK(SignatureString::of(from_signature("42^31^4")).render() == "42^31^4");
  for (const std::string t : {"41^13", "42^31^4", "954^232^21", "(10)1^3", "1", "11", "73^22^61", "63^22^31^3"})
    CHECK(SignatureString::parse(t).render() == t);
  const auto s = SignatureString::parse("954^232^21");
  CHECK(s.x0 == 9);
  CHECK(s.parts == std::vector<std::pair<Integer, int>>{{5, 1}, {4, 2}, {3, 1}, {2, 2}, {1, 1}});
  CHECK(SignatureString::parse("(10)1^3").x0 == 10);
  CHECK_THROWS_AS(SignatureString::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(SignatureString::parse("4x"), std::invalid_argument);
  CHECK_THROWS_AS(SignatureString::parse("12^"), std::invalid_argument);
  // 2 after 2 is not strictly decreasing
  CHECK_THROWS_AS(SignatureString::parse("422"), std::invalid_argument);
}

TEST_CASE("signature strings round trip (property)") {
  std::mt19937_64 rng(1313);
  int parsed = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    SignatureString s;
    s.x0 = static_cast<long>(1 + rng() % 12);
    int support = 0;
    for (long v = 11; v >= 1; --v) {
      if (rng() % 3 != 0) continue;
      const int m = 1 + static_cast<int>(rng() % 5);
      if (support + m > 13) break;
      support += m;
      s.parts.emplace_back(v, m);
    }
    try {
      CHECK(SignatureString::parse(s.render()) == s);
      ++parsed;
    } catch (const std::invalid_argument&) {
      // only ambiguous renderings may be rejected; the original is always a reading
    }
  }
  CHECK(parsed > 1000);
}

TEST_CASE("reduction examples") {
  auto chain = [](const std::string& t) { return reduce_to_D(from_signature(t)).chain(); };
  CHECK(chain("42^31^4") == std::vector<std::string>{"42^31^4", "21^4", "11"});
  CHECK(chain("954^232^21") == std::vector<std::string>{"954^232^21", "532^21^2", "31^3"});
  CHECK(chain("1") == std::vector<std::string>{"1"});
  const auto t = reduce_to_D(from_signature("743^31^3"));
  CHECK(t.endpoint_in_D);
  CHECK(t.indices_used.count(0) == 1);
  CHECK(*t.indices_used.rbegin() <= 12);
  CHECK_THROWS_AS(reduce_to_D(LatticeVector::basis(7, 0)), DimensionMismatch);
}

TEST_CASE("reduction preserves the norm and lowers x_0 (property)") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 300; ++trial) {
    LatticeVector x(13);
    Integer sq = 0;
    for (std::size_t p = 1; p <= 13; ++p) {
      x[p] = -static_cast<long>(rng() % 6);
      sq += x[p] * x[p];
    }
    Integer x0 = 1;
    while (x0 * x0 < sq) x0 += 1;
    x[0] = x0 + static_cast<long>(rng() % 3);
    const auto t = reduce_to_D(x);
    CHECK(norm(t.endpoint) == norm(x));
    CHECK(t.endpoint[0] <= x[0]);
    Integer prev = x[0];
    for (const auto& s : t.steps) {
      CHECK(s.vector[0] < prev);
      prev = s.vector[0];
    }
    const auto sys = gamma_simple_roots(13);
    for (int i = 0; i <= 12; ++i) CHECK(inner(t.endpoint, sys.roots[static_cast<std::size_t>(i)]) <= 0);
  }
}

TEST_CASE("inclusion certificates") {
  const auto c7 = build_chamber(7);
  const auto cat7 = all_vertices(c7);
  const auto inc7 = verify_inclusion(c7, cat7, vertex_families(c7));
  CHECK(inc7.pass);
  CHECK(inc7.vertices_checked == 72);
  CHECK(inc7.d_extremals_in_P == 8);

  const auto c13 = build_chamber(13);
  const auto cat13 = all_vertices(c13);
  const auto inc13 = verify_inclusion(c13, cat13, vertex_families(c13));
  CHECK(inc13.pass);
  CHECK(inc13.table_diff.empty());
  CHECK(inc13.table.size() == 18);
  for (std::size_t i = 0; i < 18; ++i) CHECK(inc13.table[i].chain == expected_reduction_table()[i].chain);
  CHECK(*inc13.indices_used.rbegin() <= 12);
  std::set<std::string> last;
  for (const auto& row : expected_reduction_table()) last.insert(row.chain.back());
  CHECK(inc13.terminal_signatures == last);
}
