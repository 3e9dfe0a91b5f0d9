#include "app.hpp"

#include "ncp/classify.hpp"
#include "ncp/deformed_cube.hpp"
#include "ncp/errors.hpp"
#include "ncp/gale.hpp"
#include "ncp/hull.hpp"
#include "ncp/io.hpp"
#include "ncp/skeleton.hpp"
#include "ncp/surgery.hpp"

#include "json.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace ncp::cli {

namespace {

using nlohmann::ordered_json;

struct Result {
  std::string text;
  bool passed = true;
};

ordered_json fvector_json(const FVector& f) {
  ordered_json a = ordered_json::array();
  for (auto x : f) a.push_back(x);
  return a;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

void require_nd(const RunConfig& c) {
  if (c.d < 2 || c.n < c.d) throw InputError("need n >= d >= 2");
}

Rational epsilon_of(const RunConfig& c) {
  const Rational eps = parse_rational(*c.epsilon);
  if (eps <= 0 || eps > 1) throw InputError("epsilon must lie in (0, 1]");
  return eps;
}

Result construct(const RunConfig& c) {
  require_nd(c);
  const Rational eps = c.epsilon ? epsilon_of(c) : choose_epsilon(c.n, c.d);
  const bool certified = certify_epsilon(c.n, c.d, eps);
  const HPolytope h = build_deformed_cube(c.n, eps);
  const VPolytope v = projected_cube(c.n, c.d, eps);

  if (c.format == Format::Off) {
    if (c.d > 3) throw InputError("OFF output needs d <= 3");
    return {to_off(v, facets_from_vrep(v)), certified};
  }
  if (c.format == Format::SignVector) {
    std::ostringstream s;
    s << "# epsilon " << to_string(eps) << (certified ? " certified" : " NOT certified") << "\n";
    for (std::size_t i = 0; i < v.points.size(); ++i) {
      s << v.labels[i].to_string();
      for (const auto& x : v.points[i]) s << ' ' << to_string(x);
      s << "\n";
    }
    return {s.str(), certified};
  }
  ordered_json j;
  j["n"] = c.n;
  j["d"] = c.d;
  j["epsilon"] = to_string(eps);
  j["certified"] = certified;
  j["deformed_cube"] = ordered_json::parse(to_json(h));
  j["projection"] = ordered_json::parse(to_json(v));
  return {dump(j), certified};
}

Result facets(const RunConfig& c) {
  require_nd(c);
  const auto labels = facets_gale(c.n, c.d);
  std::ostringstream s;
  switch (c.format) {
    case Format::Signed:
      for (const auto& a : labels) s << a.to_string() << "\n";
      return {s.str(), true};
    case Format::SignVector:
      for (const auto& a : labels) s << to_sign_vector(a).to_string() << "\n";
      return {s.str(), true};
    case Format::Json: {
      ordered_json records = ordered_json::array();
      for (const auto& a : labels) {
        ordered_json r;
        r["alpha"] = a.to_string();
        r["sign_vector"] = to_sign_vector(a).to_string();
        records.push_back(std::move(r));
      }
      ordered_json j;
      j["n"] = c.n;
      j["d"] = c.d;
      j["count"] = labels.size();
      j["facets"] = std::move(records);
      return {dump(j), true};
    }
    case Format::Off:
      break;
  }
  throw InputError("facets supports --format signed|signvector|json");
}

Result fvector(const RunConfig& c) {
  require_nd(c);
  const FVector f = gale_fvector(c.n, c.d);
  const std::int64_t formula = f_formula(c.n, c.d);
  const bool ds = dehn_sommerville_check(f, c.d);
  const bool passed = ds && f.back() == formula;
  if (c.format == Format::SignVector || c.format == Format::Signed) {
    std::ostringstream s;
    for (std::size_t i = 0; i < f.size(); ++i) s << (i ? " " : "") << f[i];
    s << "\n";
    return {s.str(), passed};
  }
  ordered_json j;
  j["n"] = c.n;
  j["d"] = c.d;
  j["f_vector"] = fvector_json(f);
  j["facet_formula"] = formula;
  j["dehn_sommerville"] = ds;
  return {dump(j), passed};
}

ordered_json check(bool pass) { return pass ? "pass" : "fail"; }

Result verify(const RunConfig& c) {
  require_nd(c);
  std::optional<Rational> eps;
  if (c.epsilon) eps = epsilon_of(c);
  const auto rep = verify_neighborly(c.n, c.d, c.r, eps, c.oracle);
  ordered_json checks;
  checks["epsilon_certified"] = check(rep.epsilon_certified);
  checks["facet_count_matches_formula"] = check(rep.gale_count == rep.formula_count);
  if (rep.oracle_run) checks["oracle_matches_criterion"] = check(rep.oracle_matches_gale);
  checks["cubical"] = check(rep.cubical);
  checks["skeleton_equivalent_at_r"] = check(rep.skeleton_at_r);
  if (rep.skeleton_above_bound) checks["skeleton_differs_at_floor_d_half"] = check(!*rep.skeleton_above_bound);
  if (rep.cube_graph) checks["graph_is_n_cube_graph"] = check(*rep.cube_graph);
  checks["dehn_sommerville"] = check(rep.dehn_sommerville);
  if (rep.ds_determines_facets) checks["dehn_sommerville_determines_facets"] = check(*rep.ds_determines_facets);

  ordered_json j;
  j["n"] = rep.n;
  j["d"] = rep.d;
  j["r"] = rep.r;
  j["epsilon"] = to_string(rep.epsilon);
  j["oracle"] = rep.oracle_run;
  j["facets"] = rep.gale_count;
  j["f_vector"] = fvector_json(rep.f_vector);
  j["checks"] = std::move(checks);
  j["result"] = check(rep.ok());
  return {dump(j), rep.ok()};
}

ordered_json triple_json(const KLMTriple& t) { return ordered_json::array({t.k, t.l, t.m}); }

Result classify(const RunConfig& c) {
  if (c.d < 4) throw InputError("classify needs d >= 4");
  const auto rep = ubc_polytope_report(c.d);
  bool counts_ok = true;
  ordered_json triples = ordered_json::array();
  for (const auto& t : valid_triples(c.d)) {
    ordered_json r;
    r["triple"] = triple_json(t);
    r["f_vector"] = fvector_json(pklm_fvector(t));
    // Direct face counting is exponential in d; only done at small d.
    if (c.d <= 5) {
      const FVector counted = pklm_sphere(t).f_vector();
      r["counted_f_vector"] = fvector_json(counted);
      counts_ok = counts_ok && counted == pklm_fvector(t);
    }
    triples.push_back(std::move(r));
  }
  ordered_json neighborly = ordered_json::array();
  for (const auto& t : rep.neighborly) neighborly.push_back(triple_json(t));

  ordered_json ubc;
  ubc["checks"] = rep.checks;
  ubc["failures"] = rep.failures;
  ubc["neighborly_maximizes"] = rep.neighborly_maximizes;
  ubc["max_f_vector"] = fvector_json(rep.max_fvector);
  ubc["result"] = check(rep.ok());

  ordered_json j;
  j["d"] = c.d;
  j["triple_count"] = rep.triples;
  j["triples"] = std::move(triples);
  j["neighborly"] = std::move(neighborly);
  j["upper_bound"] = std::move(ubc);
  j["result"] = check(rep.ok() && counts_ok);
  return {dump(j), rep.ok() && counts_ok};
}

Result surgery(const RunConfig&) {
  const auto before = c46_complex();
  const auto lemma = intersection_lemma_report();
  const Psi psi = build_psi();
  const auto sphere = verify_sphere_like(psi.sphere);
  const FVector f = psi.sphere.f_vector();
  const bool ds = dehn_sommerville_check(f, 4);
  const std::int64_t bound = f_formula(6, 4);

  ordered_json degrees = ordered_json::array();
  bool degrees_ok = true;
  std::size_t fives = 0;
  const auto edges = shared_edge_degrees();
  for (const auto& [e, deg] : edges) {
    degrees.push_back({{"edge", e.to_string()}, {"facets", deg}});
    degrees_ok = degrees_ok && deg >= 4;
    fives += deg == 5 ? 1 : 0;
  }
  degrees_ok = degrees_ok && 2 * fives == edges.size();

  ordered_json facet_list = ordered_json::array();
  for (const auto& facet : psi.sphere.facets()) facet_list.push_back(facet.indices());
  ordered_json new_edges = ordered_json::array();
  for (const auto& [a, b] : psi.new_edges) new_edges.push_back({a, b});

  ordered_json report;
  report["intersection_lemma"] = check(lemma.ok());
  report["facets_checked"] = lemma.facets_checked;
  report["ridges_in_two_facets"] = check(sphere.ridges_in_two_facets);
  report["connected"] = check(sphere.connected);
  report["euler_characteristic"] = sphere.euler_characteristic;
  report["vertex_links"] = check(sphere.vertex_links_ok);
  report["cubical"] = check(psi.sphere.is_cubical());
  report["dehn_sommerville"] = check(ds);
  report["edge_degrees"] = std::move(degrees);
  report["edge_degrees_ok"] = check(degrees_ok);
  report["facets_exceed_neighborly"] = check(f.back() > bound);

  const bool passed = lemma.ok() && sphere.ok() && psi.sphere.is_cubical() && ds && degrees_ok &&
                      f.back() > bound;
  ordered_json j;
  j["f_vector_before"] = fvector_json(before.f_vector());
  j["f_vector"] = fvector_json(f);
  j["neighborly_facets"] = bound;
  j["new_edges"] = std::move(new_edges);
  j["facets"] = std::move(facet_list);
  j["report"] = std::move(report);
  j["result"] = check(passed);
  return {dump(j), passed};
}

Result examples(const RunConfig&) {
  const auto rep = q5_graph_examples_report();
  ordered_json p;
  p["all_points_vertices"] = check(rep.p_all_vertices);
  p["cube_facet_x4_zero"] = check(rep.p_cube_facet);
  p["graph_is_q5"] = check(rep.p_q5_graph);
  p["cubical"] = check(rep.p_cubical);
  p["f_vector"] = fvector_json(rep.p_fvector);
  ordered_json q;
  q["all_points_vertices"] = check(rep.q_all_vertices);
  q["graph_is_q5"] = check(rep.q_q5_graph);
  q["one_12_vertex_facet"] = check(rep.q_one_big_facet);
  q["cubical"] = rep.q_cubical;
  q["two_faces_quadrilaterals"] = check(rep.q_double_cubical);
  q["f_vector"] = fvector_json(rep.q_fvector);
  ordered_json j;
  j["cubical_example"] = std::move(p);
  j["noncubical_example"] = std::move(q);
  j["result"] = check(rep.ok());
  return {dump(j), rep.ok()};
}

Result dispatch(const RunConfig& c) {
  if (c.command == "construct") return construct(c);
  if (c.command == "facets") return facets(c);
  if (c.command == "fvector") return fvector(c);
  if (c.command == "verify") return verify(c);
  if (c.command == "classify") return classify(c);
  if (c.command == "surgery") return surgery(c);
  if (c.command == "examples") return examples(c);
  throw InputError("unknown command '" + c.command + "'");
}

const char* kind_of(const Error& e) {
  if (dynamic_cast<const TheoremViolation*>(&e)) return "theorem_violation";
  if (dynamic_cast<const FormulaError*>(&e)) return "formula_error";
  if (dynamic_cast<const ConstructionError*>(&e)) return "construction_error";
  if (dynamic_cast<const TranscriptionError*>(&e)) return "transcription_error";
  if (dynamic_cast<const SkeletonViolation*>(&e)) return "skeleton_violation";
  return "error";
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file) throw InputError("cannot open '" + c.output + "' for writing");
  file << text;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Result r = dispatch(config);
    emit(config, r.text, out);
    return r.passed ? kOk : kCheckFailed;
  } catch (const InputError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    ordered_json j;
    j["command"] = config.command;
    j["error"] = kind_of(e);
    j["message"] = e.what();
    out << dump(j);
    return kError;
  }
}

}  // namespace ncp::cli
