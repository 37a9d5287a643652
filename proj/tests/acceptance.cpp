// Acceptance runner: one line per criterion, exit status 1 if any fails.
//
//   hyperlat_acceptance [--criterion K]

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>

#include <CLI11.hpp>

#include "hyperlat/allcock.hpp"
#include "hyperlat/lorentz.hpp"
#include "hyperlat/verify.hpp"

using namespace hyperlat;

namespace {

using Clock = std::chrono::steady_clock;

struct SuiteRun {
  std::vector<CheckResult> results;
  double seconds = 0;
};

const SuiteRun& suite(const std::string& name) {
  static std::map<std::string, SuiteRun> runs;
  auto it = runs.find(name);
  if (it != runs.end()) return it->second;
  const auto start = Clock::now();
  SuiteRun r;
  r.results = run_suite(name);
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return runs.emplace(name, std::move(r)).first->second;
}

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
  void checks(const std::string& name, const std::vector<std::string>& ids) {
    const auto& run = suite(name);
    for (const auto& id : ids) {
      const std::string full = name + "." + id;
      bool found = false;
      for (const auto& r : run.results)
        if (r.check_id == full) {
          found = true;
          require(r.status == CheckStatus::pass, full + " failed: actual " + r.actual.dump());
        }
      require(found, full + " missing");
    }
  }
  void within(const std::string& name, double limit) {
    const double s = suite(name).seconds;
    require(s < limit, name + " took " + std::to_string(s) + " s");
  }
};

// Randomized laws; every generator has a fixed seed.
Verdict properties() {
  Verdict v;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> small(-6, 6);

  int bad_reflections = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 11);
    const int i = 1 + static_cast<int>(rng() % n);
    int j = 1 + static_cast<int>(rng() % n);
    if (j == i) j = i % n + 1;
    const LatticeVector alpha = trial % 2 ? LatticeVector::basis(n, i) : LatticeVector::basis(n, i) - LatticeVector::basis(n, j);
    LatticeVector x(n), y(n);
    for (int k = 0; k <= n; ++k) {
      x[static_cast<std::size_t>(k)] = small(rng);
      y[static_cast<std::size_t>(k)] = small(rng);
    }
    const LatticeVector sx = reflect(alpha, x);
    if (inner(sx, reflect(alpha, y)) != inner(x, y) || reflect(alpha, sx) != x) ++bad_reflections;
  }
  v.require(bad_reflections == 0, std::to_string(bad_reflections) + " reflection law failures");

  int bad_congruence = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    IntMatrix s(n, n), p = IntMatrix::identity(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) s(a, b) = s(b, a) = small(rng);
    for (int k = 0; k < 6; ++k) {
      IntMatrix e = IntMatrix::identity(n);
      const std::size_t a = rng() % n, b = rng() % n;
      if (a == b) e(a, a) = -1;
      else e(a, b) = small(rng);
      p = p * e;
    }
    if (signature((p.transpose() * s * p).to_sym()) != signature(s.to_sym())) ++bad_congruence;
  }
  v.require(bad_congruence == 0, std::to_string(bad_congruence) + " congruence failures");

  int bad_kernel = 0, solved = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    std::vector<LatticeVector> rows(static_cast<std::size_t>(n), LatticeVector(n));
    for (auto& r : rows)
      for (int k = 0; k <= n; ++k) r[static_cast<std::size_t>(k)] = small(rng) % 5;
    try {
      const LatticeVector k = solve_primitive_kernel(rows, n);
      ++solved;
      bool ok = k.is_primitive() && !k.is_zero();
      for (const auto& r : rows) ok = ok && inner(k, r) == 0;
      if (!ok) ++bad_kernel;
    } catch (const KernelDimensionError& e) {
      if (e.dimension() == 1) ++bad_kernel;
    }
  }
  v.require(bad_kernel == 0 && solved > 0, std::to_string(bad_kernel) + " kernel solver failures");

  int bad_division = 0;
  std::uniform_int_distribution<long> big(-1000, 1000), mid(-40, 40);
  for (int trial = 0; trial < 10000; ++trial) {
    const EisInt a(big(rng), big(rng));
    EisInt b(mid(rng), mid(rng));
    if (b.is_zero()) b = 1;
    const auto [q, r] = eis_divmod(a, b);
    bool ok = q * b + r == a && r.norm() < b.norm();
    for (const auto& u : eis_units()) ok = ok && r.norm() <= (r - u * b).norm();
    if (!ok) ++bad_division;
  }
  v.require(bad_division == 0, std::to_string(bad_division) + " of 10000 divisions failed");

  for (const std::string name : {"fano", "e7", "allcock"}) {
    SuiteOptions four;
    four.threads = 4;
    v.require(report_json(name, run_suite(name)).dump() == report_json(name, run_suite(name, four)).dump(),
              name + " report differs between 1 and 4 threads");
  }
  return v;
}

struct Criterion {
  std::string title;
  std::function<Verdict()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {"Fano chamber: finite volume, 58 actual and 14 ideal vertices, catalog match",
       [] {
         Verdict v;
         v.checks("fano", {"plane_axioms", "gram_relations", "finite_volume", "vertex_counts", "vertex_catalog"});
         v.within("fano", 10);
         return v;
       }},
      {"Gosset walls, value table, P inside G, D inside P",
       [] {
         Verdict v;
         v.checks("fano", {"gosset_walls", "value_table", "P_subset_G", "D_subset_P"});
         return v;
       }},
      {"PG(2,3) census and automorphism groups",
       [] {
         Verdict v;
         v.checks("pg3", {"elliptic_census", "parabolic_census", "automorphisms"});
         v.checks("fano", {"automorphisms"});
         v.checks("e7", {"symmetry"});
         v.within("pg3", 300);
         return v;
       }},
      {"n = 13 reduction into D and the 18 row table",
       [] {
         Verdict v;
         v.checks("pg3", {"finite_volume", "vertex_counts", "vertex_catalog", "reduction_into_D", "reduction_table"});
         return v;
       }},
      {"duality for q = 2 and q = 3",
       [] {
         Verdict v;
         v.checks("fano", {"duality"});
         v.checks("pg3", {"duality"});
         return v;
       }},
      {"E7 presentation",
       [] {
         Verdict v;
         v.checks("e7", {"roots", "gram_pattern", "free_octagons", "deflation_relations", "group_orders", "t13_gram",
                         "t13_finite_volume"});
         v.within("e7", 60);
         return v;
       }},
      {"Eisenstein lattice and its real form",
       [] {
         Verdict v;
         v.checks("allcock", {"gram", "rank", "discriminant", "signature", "sigma", "real_form", "triflections"});
         v.within("allcock", 60);
         return v;
       }},
      {"property suites", properties},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-8)")->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);

  bool all = true;
  for (std::size_t k = 0; k < criteria().size(); ++k) {
    if (only != 0 && static_cast<std::size_t>(only) != k + 1) continue;
    const auto start = Clock::now();
    Verdict v;
    try {
      v = criteria()[k].run();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    std::cout << "criterion " << k + 1 << ": " << (v.pass ? "PASS" : "FAIL") << "  " << criteria()[k].title << "  ("
              << static_cast<long>(s * 1000) << " ms)\n";
    for (const auto& n : v.notes) std::cout << "    " << n << "\n";
    all = all && v.pass;
  }
  return all ? 0 : 1;
}
