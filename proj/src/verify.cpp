#include "hyperlat/verify.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <sstream>

#include "hyperlat/allcock.hpp"
#include "hyperlat/chambers.hpp"
#include "hyperlat/coxdiag.hpp"
#include "hyperlat/e7.hpp"
#include "hyperlat/polytope.hpp"

namespace hyperlat {

using json = nlohmann::json;

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "unknown";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"fano", "pg3", "e7", "allcock", "all"};
  return names;
}

namespace {

struct Outcome {
  json actual;
  json certificate;
};

class Runner {
 public:
  explicit Runner(const SuiteOptions& o) : opt_(o) {}

  void check(const std::string& id, json expected, const std::function<Outcome()>& body) {
    CheckResult r;
    r.check_id = id;
    r.expected = std::move(expected);
    const auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = body();
      r.actual = std::move(o.actual);
      r.certificate = std::move(o.certificate);
      r.status = r.actual == r.expected ? CheckStatus::pass : CheckStatus::fail;
    } catch (const std::exception& ex) {
      r.actual = json{{"error", ex.what()}};
      r.status = CheckStatus::fail;
    }
    if (opt_.timing)
      r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  const SuiteOptions& opt_;
  std::vector<CheckResult> results_;
};

// Computed once on first use; a throwing computation is retried (and fails
// again) in every dependent check.
template <typename T>
class Lazy {
 public:
  explicit Lazy(std::function<T()> make) : make_(std::move(make)) {}
  const T& get() {
    if (!value_) value_.emplace(make_());
    return *value_;
  }

 private:
  std::function<T()> make_;
  std::optional<T> value_;
};

json strings(const std::vector<std::string>& v) { return json(v); }

json family_counts(const CatalogMatch& m) {
  json fams = json::object();
  for (const auto& f : m.families) fams[f.name] = {{"generated", f.generated}, {"matched", f.matched}};
  return fams;
}

json type_counts(const VertexCatalog& cat) {
  std::map<std::string, std::size_t> counts;
  for (const auto& v : cat.vertices) ++counts[v.type_label];
  return json(counts);
}

json duality_json(const DualityReport& d) {
  return {{"form_scaled", d.form_scaled},
          {"square_scalar", d.square_scalar},
          {"permutes_vertices", d.permutes_vertices},
          {"swaps_families", d.swaps_families}};
}

json finite_volume_json(const FiniteVolumeCertificate& fv) {
  return {{"pass", fv.pass}, {"lanner", fv.lanner.size()}, {"maximal_parabolic", fv.maximal_parabolic}};
}

struct PlaneContext {
  ProjectivePlane plane;
  Lazy<ChamberP> chamber;
  Lazy<VertexCatalog> catalog;
  Lazy<std::vector<CatalogFamily>> families;
  Lazy<CatalogMatch> match;

  PlaneContext(ProjectivePlane p, const SuiteOptions& opt)
      : plane(std::move(p)),
        chamber([this] { return build_chamber(plane); }),
        catalog([this, &opt] { return cached_vertices(chamber.get(), opt.cache_dir, opt.threads); }),
        families([this] { return vertex_families(chamber.get()); }),
        match([this] { return match_catalog(catalog.get(), families.get()); }) {}
};

void common_plane_checks(Runner& run, const std::string& prefix, PlaneContext& ctx, const SuiteOptions& opt) {
  run.check(prefix + ".plane_axioms", {{"violations", json::array()}},
            [&] { return Outcome{{{"violations", strings(ctx.plane.axiom_violations())}}, nullptr}; });
  run.check(prefix + ".gram_relations", {{"violations", json::array()}},
            [&] { return Outcome{{{"violations", strings(gram_relation_violations(ctx.chamber.get()))}}, nullptr}; });
  const json fv_expected = prefix == "fano" ? json{{"pass", true}, {"lanner", 0}, {"maximal_parabolic", 14}}
                                            : json{{"pass", true}, {"lanner", 0}, {"maximal_parabolic", 494}};
  run.check(prefix + ".finite_volume", fv_expected, [&] {
    const auto fv = vinberg_finite_volume(ctx.chamber.get().diagram, opt.threads);
    return Outcome{finite_volume_json(fv), {{"connected_parabolic", fv.connected_parabolic}, {"unextended", fv.unextended.size()}}};
  });
}

std::vector<CheckResult> fano_suite(const SuiteOptions& opt) {
  Runner run(opt);
  PlaneContext ctx(opt.plane2 ? *opt.plane2 : build_plane(2), opt);
  common_plane_checks(run, "fano", ctx, opt);

  run.check("fano.vertex_counts",
            {{"actual", 58}, {"ideal", 14}, {"anomalies", 0}, {"types", {{"7A_1", 2}, {"A_1+3A_2", 56}, {"3A_3", 14}}}},
            [&] {
              const auto& cat = ctx.catalog.get();
              return Outcome{{{"actual", cat.count(VertexStatus::actual)},
                              {"ideal", cat.count(VertexStatus::ideal)},
                              {"anomalies", cat.anomalies.size()},
                              {"types", type_counts(cat)}},
                             nullptr};
            });

  json fam_expected = json::object();
  for (auto [name, size] : std::vector<std::pair<std::string, int>>{
           {"v_P", 1}, {"v_L", 1}, {"v_{p,l}", 28}, {"v_{l,p}", 28}, {"u_p", 7}, {"u_l", 7}})
    fam_expected[name] = {{"generated", size}, {"matched", size}};
  run.check("fano.vertex_catalog", {{"families", fam_expected}, {"uncovered", 0}}, [&] {
    const auto& m = ctx.match.get();
    return Outcome{{{"families", family_counts(m)}, {"uncovered", m.uncovered.size()}}, nullptr};
  });

  const auto gosset = gosset_walls_n7();
  run.check("fano.gosset_walls", {{"count", 56}, {"norms", {1}}, {"weyl_products", {-1}}}, [&] {
    std::set<long> norms, products;
    const LatticeVector v7 = weyl_vector_n7();
    for (const auto& w : gosset) {
      norms.insert(norm(w).get_si());
      products.insert(inner(w, v7).get_si());
    }
    return Outcome{{{"count", gosset.size()}, {"norms", norms}, {"weyl_products", products}}, nullptr};
  });

  const json value_expected = {
      {"rows",
       {{{"wall_family", "e_p"}, {"actual", {-2, -1, 0}}, {"ideal", {-1, 0}}},
        {{"wall_family", "e_0-e_p-e_q"}, {"actual", {-3, -2, -1, 0}}, {"ideal", {-2, -1, 0}}},
        {{"wall_family", "2e_0-e_1-...-e_7+e_p+e_q"}, {"actual", {-4, -3, -2, -1}}, {"ideal", {-2, -1, 0}}},
        {{"wall_family", "3e_0-e_1-...-e_7-e_p"}, {"actual", {-4, -3, -2}}, {"ideal", {-2, -1}}}}},
      {"weyl_values", {-1}}};
  run.check("fano.value_table", value_expected, [&] {
    const auto t = value_table_n7(ctx.chamber.get(), gosset);
    json rows = json::array();
    for (const auto& r : t.rows)
      rows.push_back({{"wall_family", r.wall_family}, {"actual", r.actual_values}, {"ideal", r.ideal_values}});
    return Outcome{{{"rows", rows}, {"weyl_values", t.weyl_values}}, nullptr};
  });

  Lazy<InclusionCertificate> inclusion(
      [&] { return verify_inclusion(ctx.chamber.get(), ctx.catalog.get(), ctx.families.get(), opt.verbose); });
  run.check("fano.P_subset_G", {{"vertices_in_G", 72}, {"failures", json::array()}}, [&] {
    const auto& inc = inclusion.get();
    return Outcome{{{"vertices_in_G", inc.vertices_checked - inc.failures.size()}, {"failures", strings(inc.failures)}},
                   opt.verbose ? json(inc.per_vertex) : json(nullptr)};
  });
  run.check("fano.D_subset_P", {{"extremals_in_P", 8}},
            [&] { return Outcome{{{"extremals_in_P", inclusion.get().d_extremals_in_P}}, nullptr}; });

  run.check("fano.duality", duality_json(DualityReport{true, true, true, true, {}}), [&] {
    const auto d = check_duality(ctx.chamber.get(), standard_polarity(ctx.plane), ctx.catalog.get(), ctx.families.get());
    return Outcome{duality_json(d), {{"problems", d.problems}}};
  });

  run.check("fano.automorphisms", {{"I_14", 336}}, [&] {
    const auto g = graph_automorphism_group(incidence_graph(ctx.plane).graph);
    return Outcome{{{"I_14", integer_to_json(g.order)}}, nullptr};
  });
  return run.take();
}

std::vector<CheckResult> pg3_suite(const SuiteOptions& opt) {
  Runner run(opt);
  PlaneContext ctx(opt.plane3 ? *opt.plane3 : build_plane(3), opt);
  common_plane_checks(run, "pg3", ctx, opt);

  run.check("pg3.vertex_counts", json{{"from_families", true}, {"ideal", 494}, {"anomalies", 0}}, [&] {
    const auto& cat = ctx.catalog.get();
    std::size_t generated_actual = 0;
    for (const auto& f : ctx.families.get())
      if (f.status == VertexStatus::actual) generated_actual += f.members.size();
    return Outcome{{{"from_families", cat.count(VertexStatus::actual) == generated_actual},
                    {"ideal", cat.count(VertexStatus::ideal)},
                    {"anomalies", cat.anomalies.size()}},
                   {{"actual", cat.count(VertexStatus::actual)}, {"types", type_counts(cat)}}};
  });

  Lazy<AutomorphismGroup> aut([&] { return graph_automorphism_group(incidence_graph(ctx.plane).graph); });
  json census_expected = json::object();
  for (const char* label :
       {"13A_1", "4A_1+3A_3", "A_1+4A_3", "2A_1+A_2+3A_3", "A_1+3A_4", "A_2+A_3+2A_4", "3A_3+A_4"})
    census_expected[label] = 1;
  run.check("pg3.elliptic_census", census_expected, [&] {
    std::vector<NodeSet> subsets;
    for (const auto& v : ctx.catalog.get().vertices)
      if (v.status == VertexStatus::actual) subsets.push_back(v.subset);
    const auto census = orbit_census(ctx.chamber.get().diagram, subsets, aut.get().generators);
    json actual = json::object(), cert = json::array();
    for (const auto& e : census) {
      actual[e.type_label] = e.orbit_count;
      cert.push_back(to_json(e));
    }
    return Outcome{actual, cert};
  });
  run.check("pg3.parabolic_census", {{"3A_5", 468}, {"4D_4", 26}}, [&] {
    std::map<std::string, std::size_t> counts;
    for (const auto& v : ctx.catalog.get().vertices)
      if (v.status == VertexStatus::ideal) ++counts[v.type_label];
    return Outcome{json(counts), nullptr};
  });

  run.check("pg3.vertex_catalog", json{{"families", 18}, {"all_matched", true}, {"uncovered", 0},
                                        {"ideal_families", {{"u_p", 13}, {"u_l", 13}, {"u_pqrs", 234}, {"u_klmn", 234}}}},
            [&] {
              const auto& m = ctx.match.get();
              bool all = true;
              json ideal = json::object();
              for (const auto& f : m.families) {
                if (f.matched != f.generated || !f.unmatched.empty()) all = false;
                if (f.name.front() == 'u') ideal[f.name] = f.matched;
              }
              return Outcome{{{"families", m.families.size()},
                              {"all_matched", all},
                              {"uncovered", m.uncovered.size()},
                              {"ideal_families", ideal}},
                             family_counts(m)};
            });

  run.check("pg3.duality", duality_json(DualityReport{true, true, true, true, {}}), [&] {
    const auto d = check_duality(ctx.chamber.get(), standard_polarity(ctx.plane), ctx.catalog.get(), ctx.families.get());
    return Outcome{duality_json(d), {{"problems", d.problems}}};
  });

  Lazy<InclusionCertificate> inclusion(
      [&] { return verify_inclusion(ctx.chamber.get(), ctx.catalog.get(), ctx.families.get(), opt.verbose); });
  run.check("pg3.reduction_into_D", {{"all_reach_D", true}, {"indices_within_0_12", true}, {"failures", json::array()}},
            [&] {
              const auto& inc = inclusion.get();
              const bool within = inc.indices_used.empty() || (*inc.indices_used.begin() >= 0 && *inc.indices_used.rbegin() <= 12);
              json cert{{"vertices_checked", inc.vertices_checked},
                        {"indices_used", inc.indices_used},
                        {"terminal_signatures", inc.terminal_signatures}};
              if (opt.verbose) cert["per_vertex"] = inc.per_vertex;
              return Outcome{{{"all_reach_D", inc.failures.empty() && inc.vertices_checked > 0},
                              {"indices_within_0_12", within},
                              {"failures", strings(inc.failures)}},
                             cert};
            });
  json table_expected = json::array();
  for (const auto& r : expected_reduction_table()) table_expected.push_back(to_json(r));
  run.check("pg3.reduction_table", {{"rows", table_expected}}, [&] {
    json rows = json::array();
    for (const auto& r : inclusion.get().table) rows.push_back(to_json(r));
    return Outcome{{{"rows", rows}}, {{"diff", inclusion.get().table_diff}}};
  });

  run.check("pg3.automorphisms", {{"I_26", 11232}},
            [&] { return Outcome{{{"I_26", integer_to_json(aut.get().order)}}, nullptr}; });
  return run.take();
}

json words_json(const std::vector<EliminatedWord>& words) {
  json out = json::array();
  for (const auto& w : words) out.push_back({{"generator", w.generator}, {"word", w.word}, {"holds", w.holds}});
  return out;
}

std::vector<CheckResult> e7_suite(const SuiteOptions& opt) {
  Runner run(opt);
  Lazy<RootSystemE7> e7([] { return e7_roots(); });
  Lazy<std::vector<LatticeVector>> vectors([&] { return t10_vectors(e7.get()); });
  const Graph graph = t10_graph();
  Lazy<std::vector<std::vector<int>>> octagons([&] { return free_octagons(graph); });
  Lazy<DeflationReport> deflation([&] { return deflation_check(vectors.get(), octagons.get()); });

  run.check("e7.roots", {{"count", 126}}, [&] { return Outcome{{{"count", e7.get().roots.size()}}, nullptr}; });
  run.check("e7.gram_pattern", {{"holds", true}, {"positive_pairs", {{5, 9}, {7, 8}}}}, [&] {
    const auto p = t10_gram_pattern(vectors.get(), graph);
    json pairs = json::array();
    for (auto [a, b] : p.positive_pairs) pairs.push_back({a, b});
    return Outcome{{{"holds", p.pattern_holds}, {"positive_pairs", pairs}},
                   {{"vectors", vectors.get()}, {"violations", p.violations}}};
  });
  run.check("e7.free_octagons", {{"count", 3}},
            [&] { return Outcome{{{"count", octagons.get().size()}}, {{"octagons", octagons.get()}}}; });

  json relations_expected = json::array();
  for (const auto& w : deflation_words()) relations_expected.push_back({{"word", w}, {"identity", true}});
  run.check("e7.deflation_relations", {{"relations", relations_expected}}, [&] {
    json rel = json::array(), orders = json::array();
    for (const auto& r : deflation.get().relations) {
      rel.push_back({{"word", r.word}, {"identity", r.identity}});
      orders.push_back(r.order);
    }
    return Outcome{{{"relations", rel}},
                   {{"orders", orders}, {"all_rotations_identity", deflation.get().all_rotations_identity}}};
  });
  run.check("e7.deflation_translation_form", {{"identity", true}},
            [&] { return Outcome{{{"identity", deflation.get().translation_form_identity}}, nullptr}; });

  run.check("e7.word_elimination", {{"holds", {true, true, true}}}, [&] {
    const auto words = word_elimination(vectors.get());
    json holds = json::array();
    for (const auto& w : words) holds.push_back(w.holds);
    return Outcome{{{"holds", holds}}, words_json(words)};
  });
  run.check("e7.conjugation_words", {{"holds", {true, true, true}}}, [&] {
    const auto words = conjugation_words(e7.get(), vectors.get());
    json holds = json::array();
    for (const auto& w : words) holds.push_back(w.holds);
    return Outcome{{{"holds", holds}}, words_json(words)};
  });

  run.check("e7.group_orders", {{"simple", 2903040}, {"all", 2903040}, {"faithful", true}, {"matrices_agree", true}}, [&] {
    const auto o = e7_group_orders(e7.get(), vectors.get());
    return Outcome{{{"simple", integer_to_json(o.simple_order)},
                    {"all", integer_to_json(o.all_order)},
                    {"faithful", o.faithful},
                    {"matrices_agree", o.matrices_agree}},
                   nullptr};
  });

  Lazy<T13Construction> t13([] { return t13_construction(); });
  run.check("e7.t13_gram", {{"violations", json::array()}},
            [&] { return Outcome{{{"violations", strings(t13.get().gram_violations)}}, {{"roots", t13.get().roots}, {"names", t13.get().names}}}; });
  run.check("e7.t13_finite_volume", {{"pass", true}, {"lanner", 0}}, [&] {
    const auto fv = vinberg_finite_volume(t13.get().diagram, opt.threads);
    return Outcome{{{"pass", fv.pass}, {"lanner", fv.lanner.size()}},
                   {{"connected_parabolic", fv.connected_parabolic}, {"maximal_parabolic", fv.maximal_parabolic}}};
  });
  run.check("e7.symmetry", {{"T_10", 24}, {"T_13", 24}, {"octagons_invariant", true}}, [&] {
    const auto s = s4_symmetry_check();
    return Outcome{{{"T_10", integer_to_json(s.t10_order)}, {"T_13", integer_to_json(s.t13_order)}, {"octagons_invariant", s.octagons_invariant}},
                   nullptr};
  });
  return run.take();
}

std::vector<CheckResult> allcock_suite(const SuiteOptions& opt) {
  Runner run(opt);
  const ProjectivePlane plane = opt.plane3 ? *opt.plane3 : build_plane(3);
  Lazy<EisMatrix> gram([&] { return allcock_gram(plane); });
  Lazy<EisLattice> lattice([&] { return kernel_and_basis(gram.get(), static_cast<std::size_t>(plane.size())); });

  run.check("allcock.gram", {{"hermitian", true}, {"theta_entries_per_row", {4}}, {"entries_in_E_theta", true}}, [&] {
    const auto& g = gram.get();
    std::set<int> per_row;
    bool in_e_theta = true;
    for (std::size_t i = 0; i < g.rows(); ++i) {
      int count = 0;
      for (std::size_t j = 0; j < g.cols(); ++j) {
        if (g(i, j) == EisInt::theta() || g(i, j) == -EisInt::theta()) ++count;
        if (!eis_divmod(g(i, j), EisInt::theta()).r.is_zero()) in_e_theta = false;
      }
      per_row.insert(count);
    }
    return Outcome{{{"hermitian", g.is_hermitian()}, {"theta_entries_per_row", per_row}, {"entries_in_E_theta", in_e_theta}}, nullptr};
  });
  run.check("allcock.rank", {{"rank", 14}, {"kernel_rank", 12}}, [&] {
    const auto& l = lattice.get();
    return Outcome{{{"rank", l.rank()}, {"kernel_rank", l.relations.rows()}}, {{"relations", to_json(l.relations)}}};
  });
  Lazy<DiscriminantSignature> ds([&] { return discriminant_and_signature(lattice.get()); });
  run.check("allcock.discriminant", {{"abs_det", 2187}}, [&] {
    return Outcome{{{"abs_det", integer_to_json(abs(ds.get().det))}}, {{"det", integer_to_json(ds.get().det)}}};
  });
  run.check("allcock.signature", {{"signature", {13, 1}}, {"realified_inertia", {26, 0, 2}}}, [&] {
    const auto& d = ds.get();
    return Outcome{{{"signature", {d.positive, d.negative}},
                    {"realified_inertia", {d.realified.positive, d.realified.zero, d.realified.negative}}},
                   nullptr};
  });
  Lazy<RealForm> rf([&] { return real_form(lattice.get()); });
  run.check("allcock.sigma", {{"preserves_kernel", true}, {"anti_isometry", true}, {"involution", true}}, [&] {
    const auto& r = rf.get();
    return Outcome{{{"preserves_kernel", r.preserves_kernel}, {"anti_isometry", r.anti_isometry}, {"involution", r.involution}}, nullptr};
  });
  run.check("allcock.real_form",
            {{"rank", 14}, {"inner_in_3Z", true}, {"det", -1}, {"odd", true}, {"inertia", {13, 0, 1}},
             {"eps_p_norm1", true}, {"theta_eps_l_norm3", true}},
            [&] {
              const auto& r = rf.get();
              return Outcome{{{"rank", r.rank},
                              {"inner_in_3Z", r.inner_real && r.inner_in_3z},
                              {"det", integer_to_json(r.det)},
                              {"odd", r.odd},
                              {"inertia", {r.inertia.positive, r.inertia.zero, r.inertia.negative}},
                              {"eps_p_norm1", r.eps_p_norm1},
                              {"theta_eps_l_norm3", r.theta_eps_l_norm3}},
                             {{"gram", r.gram}}};
            });
  run.check("allcock.triflections",
            {{"roots", 26}, {"preserves_lattice", true}, {"eps_to_omega_eps", true}, {"preserves_form", true}, {"order_three", true}},
            [&] {
              const auto t = triflection_check(lattice.get());
              return Outcome{{{"roots", t.roots},
                              {"preserves_lattice", t.preserves_lattice},
                              {"eps_to_omega_eps", t.eps_to_omega_eps},
                              {"preserves_form", t.preserves_form},
                              {"order_three", t.order_three}},
                             {{"failures", t.failures}}};
            });
  return run.take();
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "fano") return fano_suite(options);
  if (name == "pg3") return pg3_suite(options);
  if (name == "e7") return e7_suite(options);
  if (name == "allcock") return allcock_suite(options);
  if (name == "all") {
    const std::vector<std::string> parts{"fano", "pg3", "e7", "allcock"};
    std::vector<std::vector<CheckResult>> chunks(parts.size());
    if (options.threads > 1) {
      std::vector<std::future<std::vector<CheckResult>>> futures;
      for (const auto& p : parts) futures.push_back(std::async(std::launch::async, [&options, p] { return run_suite(p, options); }));
      for (std::size_t i = 0; i < parts.size(); ++i) chunks[i] = futures[i].get();
    } else {
      for (std::size_t i = 0; i < parts.size(); ++i) chunks[i] = run_suite(parts[i], options);
    }
    std::vector<CheckResult> out;
    for (auto& c : chunks) std::move(c.begin(), c.end(), std::back_inserter(out));
    return out;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

json to_json(const CheckResult& r) {
  json j{{"check_id", r.check_id},
         {"status", status_name(r.status)},
         {"expected", r.expected},
         {"actual", r.actual},
         {"elapsed_ms", r.elapsed_ms}};
  if (!r.certificate.is_null()) j["certificate"] = r.certificate;
  return j;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.status != CheckStatus::fail; });
}

json report_json(const std::string& suite, const std::vector<CheckResult>& results) {
  int pass = 0, fail = 0, skipped = 0;
  json list = json::array();
  for (const auto& r : results) {
    (r.status == CheckStatus::pass ? pass : r.status == CheckStatus::fail ? fail : skipped)++;
    list.push_back(to_json(r));
  }
  return {{"suite", suite},
          {"results", list},
          {"summary", {{"pass", pass}, {"fail", fail}, {"skipped", skipped}}},
          {"toolkit_version", kToolkitVersion}};
}

namespace {

std::string set_text(const json& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + values[i].dump();
  return out + "}";
}

}  // namespace

std::string report_markdown(const std::string& suite, const std::vector<CheckResult>& results) {
  const json summary = report_json(suite, results)["summary"];
  std::ostringstream md;
  md << "# hyperlat report: " << suite << "\n\n";
  md << "toolkit " << kToolkitVersion << "; pass " << summary["pass"] << ", fail " << summary["fail"] << ", skipped "
     << summary["skipped"] << "\n\n";
  md << "| check | status | ms |\n|---|---|---|\n";
  for (const auto& r : results) md << "| " << r.check_id << " | " << status_name(r.status) << " | " << r.elapsed_ms << " |\n";

  for (const auto& r : results) {
    if (r.check_id == "fano.value_table" && r.actual.contains("rows")) {
      md << "\n## Gosset wall values on the vertices of P (n = 7)\n\n";
      md << "| wall family | actual vertices | ideal vertices |\n|---|---|---|\n";
      for (const auto& row : r.actual["rows"])
        md << "| " << row["wall_family"].get<std::string>() << " | " << set_text(row["actual"]) << " | "
           << set_text(row["ideal"]) << " |\n";
    }
    if (r.check_id == "pg3.reduction_table" && r.actual.contains("rows")) {
      md << "\n## Reduction of the vertices of P into D (n = 13)\n\n";
      md << "| type | family | chain |\n|---|---|---|\n";
      for (const auto& row : r.actual["rows"]) {
        std::string chain;
        for (const auto& s : row["chain"]) chain += (chain.empty() ? "" : " -> ") + s.get<std::string>();
        md << "| " << row["type_label"].get<std::string>() << " | " << row["family"].get<std::string>() << " | " << chain << " |\n";
      }
    }
  }

  bool header = false;
  for (const auto& r : results) {
    if (r.status != CheckStatus::fail) continue;
    if (!header) md << "\n## Failures\n";
    header = true;
    md << "\n### " << r.check_id << "\n\nexpected: `" << r.expected.dump() << "`\n\nactual: `" << r.actual.dump() << "`\n";
  }
  return md.str();
}

}  // namespace hyperlat
