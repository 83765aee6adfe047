#include "kl/jsonio.hpp"

namespace kl {

json json_boxes(const std::vector<Box>& boxes) {
  json a = json::array();
  for (const Box& b : boxes) a.push_back({b.row, b.col});
  return a;
}

json json_perm(const Permutation& p) { return p.str(); }

json json_poly(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json mono = json::array();
    for (const auto& [v, e] : m.factors()) mono.push_back({v.str(), e});
    terms.push_back({{"coeff", c.get_str()}, {"monomial", mono}});
  }
  return {{"render", p.str()}, {"terms", terms}};
}

json json_dream(const PipeDream& p) {
  return {{"v", p.owner.str()}, {"crosses", json_boxes(p.crosses)}};
}

json cmd_diagram(const Permutation& v) {
  json labels = json::array();
  for (const LabeledBox& lb : canonical_labeling(v))
    labels.push_back({lb.box.row, lb.box.col, lb.label});
  return {{"command", "diagram"},
          {"v", v.str()},
          {"boxes", json_boxes(rothe_diagram(v))},
          {"essential", json_boxes(essential_set(v))},
          {"labels", labels},
          {"size", rothe_diagram(v).size()}};
}

json cmd_rank_matrix(const Permutation& w) {
  RankMatrix r(w);
  json rows = json::array();  // top row first, as displayed
  for (int i = w.n(); i >= 1; --i) {
    json row = json::array();
    for (int j = 1; j <= w.n(); ++j) row.push_back(r.at(i, j));
    rows.push_back(row);
  }
  return {{"command", "matrix"}, {"w", w.str()}, {"rank_matrix", rows}};
}

json cmd_zmatrix(const Permutation& v) {
  SpecializedMatrix z(v);
  json rows = json::array();
  for (int i = v.n(); i >= 1; --i) {
    json row = json::array();
    for (int j = 1; j <= v.n(); ++j) row.push_back(z.at(i, j).str());
    rows.push_back(row);
  }
  return {{"command", "matrix"}, {"v", v.str()}, {"specialized_matrix", rows}};
}

json cmd_minors(const GeneratorSet& g) {
  json minors = json::array();
  for (const Polynomial& p : g.minors) minors.push_back(json_poly(p));
  return {{"command", "minors"},
          {"v", g.v.str()},
          {"w", g.w.str()},
          {"minors", minors},
          {"zero_minors_dropped", g.zero_minors_dropped},
          {"duplicates_dropped", g.duplicates_dropped}};
}

json cmd_groebner(const GeneratorSet& g, const BuchbergerReport& rep) {
  json out = {{"command", "groebner"},
              {"v", g.v.str()},
              {"w", g.w.str()},
              {"is_groebner", rep.is_groebner},
              {"spairs_checked", rep.spairs_checked},
              {"spairs_skipped_coprime", rep.spairs_skipped_coprime}};
  if (rep.failing_pair)
    out["failing_pair"] = {rep.failing_pair->first, rep.failing_pair->second};
  return out;
}

json cmd_initial(const Permutation& v, const Permutation& w) {
  GeneratorSet g = essential_minors(v, w);
  MonomialIdeal lt = leading_term_ideal(g);
  auto primes = monomial_ideal_primes(lt, rothe_diagram(v));

  PipeComplex c(v, w);
  MonomialIdeal sr = stanley_reisner_ideal(c);
  std::vector<std::vector<Box>> red_cross_sets;
  for (const Face& f : c.facets()) red_cross_sets.push_back(f.label.crosses);
  std::sort(red_cross_sets.begin(), red_cross_sets.end());

  json jgens = json::array();
  for (const Monomial& m : lt.generators) jgens.push_back(m.str());
  json jsr = json::array();
  for (const Monomial& m : sr.generators) jsr.push_back(m.str());
  json jprimes = json::array();
  for (const auto& p : primes) jprimes.push_back(json_boxes(p));
  json jred = json::array();
  for (const auto& p : red_cross_sets) jred.push_back(json_boxes(p));

  bool primes_match = primes == red_cross_sets;
  bool ideals_match = [&] {
    auto a = lt.generators;
    auto b = sr.generators;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }();

  return {{"command", "initial"},
          {"v", v.str()},
          {"w", w.str()},
          {"leading_term_ideal", jgens},
          {"stanley_reisner_ideal", jsr},
          {"minimal_primes", jprimes},
          {"redpipes_cross_sets", jred},
          {"primes_match_redpipes", primes_match},
          {"ideals_match", ideals_match}};
}

json cmd_complex(const PipeComplex& c, const TopologyReport& topo) {
  json facets = json::array();
  for (const Face& f : c.facets())
    facets.push_back({{"vertices", json_boxes(f.vertices)},
                      {"label_crosses", json_boxes(f.label.crosses)}});
  const char* kind = topo.kind == TopologyReport::Ball     ? "ball"
                     : topo.kind == TopologyReport::Sphere ? "sphere"
                                                           : "empty";
  return {{"command", "complex"},
          {"v", c.v().str()},
          {"w", c.w().str()},
          {"facets", facets},
          {"interior_face_count", c.interior_faces().size()},
          {"topology", kind},
          {"dimension", topo.dimension},
          {"euler_reduced", topo.euler_reduced}};
}

json cmd_pipes(const Permutation& v, const Permutation& target, bool reduced,
               const std::vector<PipeDream>& dreams) {
  json jd = json::array();
  for (const PipeDream& p : dreams) jd.push_back(json_dream(p));
  return {{"command", "pipes"},
          {"v", v.str()},
          {"target", target.str()},
          {"reduced_only", reduced},
          {"count", dreams.size()},
          {"dreams", jd}};
}

json cmd_poly_result(const std::string& name, const Permutation& v, const Permutation& w,
                     const Polynomial& p) {
  return {{"command", name}, {"v", v.str()}, {"w", w.str()}, {"polynomial", json_poly(p)}};
}

json cmd_double(const Permutation& w, bool groth, const Polynomial& p) {
  return {{"command", "double"},
          {"w", w.str()},
          {"kind", groth ? "grothendieck" : "schubert"},
          {"polynomial", json_poly(p)}};
}

json cmd_specialize(const Permutation& v, const Permutation& w, const BuchRimanyiResult& r) {
  auto triple = [](const SpecializationTriple& t) {
    return json{{"from_double", json_poly(t.from_double)},
                {"from_kpoly", json_poly(t.from_kpoly)},
                {"from_unspecialized", json_poly(t.from_unspecialized)},
                {"all_equal", t.all_equal()}};
  };
  return {{"command", "specialize"},
          {"v", v.str()},
          {"w", w.str()},
          {"grothendieck", triple(r.groth)},
          {"schubert", triple(r.schub)}};
}

json cmd_mult(const Permutation& v, const Permutation& w, const MultiplicityOutcome& o) {
  json out = {{"command", "mult"},
              {"v", v.str()},
              {"w", w.str()},
              {"route", to_string(o.route)},
              {"v_used", o.v_used.str()}};
  out["value"] = o.value ? json(o.value->get_str()) : json(nullptr);
  if (o.facet_count) out["facet_count"] = *o.facet_count;
  if (o.tableau_count) out["tableau_count"] = o.tableau_count->get_str();
  return out;
}

json cmd_vmax(const Permutation& v, const Permutation& w, const Permutation& vm) {
  return {{"command", "vmax"}, {"v", v.str()}, {"w", w.str()}, {"v_max", vm.str()}};
}

json cmd_homog(const Permutation& v, const Permutation& w, bool homog, const GeneratorSet& red) {
  json basis = json::array();
  for (const Polynomial& p : red.minors) basis.push_back(p.str());
  return {{"command", "homog"},
          {"v", v.str()},
          {"w", w.str()},
          {"standardly_homogeneous", homog},
          {"reduced_basis", basis}};
}

json cmd_gamma(const GammaReport& rep) {
  json cex = json::array();
  for (const auto& [v, w] : rep.conjecture_counterexamples)
    cex.push_back({{"v", v.str()}, {"w", w.str()}});
  return {{"command", "gamma"},
          {"n", rep.n},
          {"exhaustive", rep.exhaustive},
          {"pairs", rep.pairs},
          {"route1", rep.route1},
          {"route12", rep.route12},
          {"budget_exceeded", rep.budget_exceeded},
          {"pct_route1", rep.pct_route1},
          {"pct_route12", rep.pct_route12},
          {"conjecture_instances", rep.conjecture_instances},
          {"conjecture_counterexamples", cex}};
}

json cmd_sample(const EstimateReport& rep) {
  return {{"command", "sample"},
          {"n", rep.config.n},
          {"trials", rep.config.trials},
          {"seed", rep.config.seed},
          {"successes", rep.successes},
          {"budget_exceeded", rep.budget_exceeded},
          {"pct", rep.pct},
          {"ci", {rep.ci_lo, rep.ci_hi}},
          {"mean_rejections", rep.mean_rejections}};
}

namespace {

bool type_matches(const json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
  if (t == "number") return v.is_number();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

}  // namespace

bool validate_against_schema(const json& value, const json& schema, const json& root,
                             std::string* error) {
  auto fail = [&](const std::string& msg) {
    if (error) *error = msg;
    return false;
  };
  if (schema.contains("$ref")) {
    std::string ref = schema["$ref"].get<std::string>();
    // only local "#/definitions/..." pointers
    if (ref.rfind("#/", 0) != 0) return fail("unsupported $ref " + ref);
    json target = root;
    std::string path = ref.substr(2);
    size_t pos = 0;
    while (pos < path.size()) {
      size_t slash = path.find('/', pos);
      std::string key = path.substr(pos, slash == std::string::npos ? slash : slash - pos);
      if (!target.contains(key)) return fail("bad $ref " + ref);
      target = target[key];
      if (slash == std::string::npos) break;
      pos = slash + 1;
    }
    return validate_against_schema(value, target, root, error);
  }
  if (schema.contains("anyOf")) {
    for (const json& alt : schema["anyOf"])
      if (validate_against_schema(value, alt, root, nullptr)) return true;
    return fail("no anyOf branch matched");
  }
  if (schema.contains("enum")) {
    for (const json& e : schema["enum"])
      if (value == e) return true;
    return fail("value not in enum");
  }
  if (schema.contains("type")) {
    const json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(value, t.get<std::string>());
    } else {
      for (const json& alt : t)
        if (type_matches(value, alt.get<std::string>())) ok = true;
    }
    if (!ok) return fail("type mismatch, expected " + t.dump() + " got " + value.dump());
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const json& key : schema["required"])
        if (!value.contains(key.get<std::string>()))
          return fail("missing required key " + key.get<std::string>());
    if (schema.contains("properties"))
      for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
        if (value.contains(it.key()))
          if (!validate_against_schema(value[it.key()], it.value(), root, error)) return false;
  }
  if (value.is_array() && schema.contains("items")) {
    for (const json& el : value)
      if (!validate_against_schema(el, schema["items"], root, error)) return false;
  }
  return true;
}

bool validate_output(const json& output, const json& schema_doc, std::string* error) {
  if (!output.contains("command")) {
    if (error) *error = "output has no command key";
    return false;
  }
  std::string cmd = output["command"].get<std::string>();
  const json& commands = schema_doc["definitions"]["commands"];
  if (!commands.contains(cmd)) {
    if (error) *error = "no schema for command " + cmd;
    return false;
  }
  return validate_against_schema(output, commands[cmd], schema_doc, error);
}

}  // namespace kl
