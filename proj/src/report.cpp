#include "oddplanar/report.hpp"

namespace oddplanar {

namespace {

constexpr std::size_t kInlineWidth = 96;

void emit(const Json& j, int depth, std::string& out) {
  const std::string compact = j.dump();
  if (!j.is_structured() || j.empty() || (depth > 0 && compact.size() <= kInlineWidth)) {
    out += compact;
    return;
  }
  const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
  const bool obj = j.is_object();
  out += obj ? "{\n" : "[\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (obj) out += Json(it.key()).dump() + ": ";
    emit(*it, depth + 1, out);
  }
  out += "\n" + std::string(static_cast<std::size_t>(depth) * 2, ' ') + (obj ? "}" : "]");
}

Json opt(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

std::string json_text(const Json& j) {
  std::string out;
  emit(j, 0, out);
  out += "\n";
  return out;
}

Json to_json(const std::vector<Violation>& violations) {
  Json out = Json::array();
  for (const auto& v : violations) out.push_back({{"kind", to_string(v.kind)}, {"locus", v.locus}});
  return out;
}

Json to_json(const CrossingStats& st) {
  Json values = Json::object();
  for (Variant v : {Variant::Cr, Variant::Pcr, Variant::Ocr}) {
    Json row = Json::object();
    for (Rule r : {Rule::Plus, Rule::Zero, Rule::Minus}) row[to_string(r)] = opt(st.value(v, r));
    values[to_string(v)] = row;
  }
  Json pairs = Json::array();
  for (const auto& [ef, c] : st.pair_counts) pairs.push_back({ef.first, ef.second, c});
  Json selfs = Json::array();
  for (const auto& [e, c] : st.self_counts) selfs.push_back({e, c});
  Json odd = Json::array();
  for (const auto& [e, c] : st.odd_degree) odd.push_back({e, c});
  return {{"values", values},
          {"ocr_star", opt(st.value(Variant::Ocr, Rule::Star))},
          {"plus_admissible", st.plus_admissible},
          {"star_admissible", st.star_admissible},
          {"self_crossings", st.self_crossings},
          {"pair_counts", pairs},
          {"self_counts", selfs},
          {"odd_degree", odd}};
}

Json to_json(const BoundReport& r) {
  Json lemma = Json::array();
  for (const auto& e : r.lemma) {
    const auto c = lemma_constants(e.variant);
    lemma.push_back({{"variant", to_string(e.variant)},
                     {"reciprocal", to_string(c.reciprocal)},
                     {"threshold", to_string(c.threshold)},
                     {"value", e.value ? Json(to_string(*e.value)) : Json(nullptr)},
                     {"ceil", e.value ? Json(ceil_to_int(*e.value)) : Json(nullptr)}});
  }
  Json out = {{"k", r.k},
              {"n", r.n},
              {"m", r.m},
              {"mk_upper", r.mk_upper},
              {"mk_exact", r.mk_exact},
              {"modd_upper", r.modd_upper},
              {"ocr_linear_lower", r.ocr_linear_lower},
              {"lemma", lemma},
              {"ok", r.ok()},
              {"alerts", r.alerts}};
  if (r.has_drawing) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      checks.push_back({{"name", c.name}, {"applicable", c.applicable}, {"passed", c.passed}, {"detail", c.detail}});
    }
    out["drawing"] = {{"crossings", r.crossings},
                      {"odd_pairs", r.odd_pairs},
                      {"k_plane", r.k_plane},
                      {"k_odd_plane", r.k_odd_plane},
                      {"star_admissible", r.star_admissible}};
    out["checks"] = checks;
  }
  return out;
}

Json to_json(const SampleStats& s) {
  return {{"p", s.p},
          {"trials", s.trials},
          {"seed", s.seed},
          {"n", s.n},
          {"m", s.m},
          {"odd_pairs", s.odd_pairs},
          {"mean", {{"n", s.mean_n}, {"m", s.mean_m}, {"x", s.mean_x}}},
          {"standard_error", {{"n", s.se_n}, {"m", s.se_m}, {"x", s.se_x}}},
          {"expected", {{"n", s.expected_n}, {"m", s.expected_m}, {"x", s.expected_x}}},
          {"law_violations", s.law_violations}};
}

Json to_json(const SearchResult& r) {
  return {{"edges", r.edges},
          {"modd_upper", r.modd_upper},
          {"mk_upper", r.mk_upper},
          {"gap_to_mk", r.gap_to_mk},
          {"audit", to_json(r.audit)},
          {"stats",
           {{"iterations", r.stats.iterations},
            {"adds", r.stats.adds},
            {"removals", r.stats.removals},
            {"reroutes", r.stats.reroutes},
            {"toggles", r.stats.toggles},
            {"best_iteration", r.stats.best_iteration},
            {"time_limit_hit", r.stats.time_limit_hit}}},
          {"drawing", drawing_json(r.best)}};
}

Json to_json(const PipelineTrace& t) {
  Json comps = Json::array();
  for (const auto& c : t.components) {
    Json splits = Json::array();
    for (const auto& s : c.splits) {
      splits.push_back({{"merged", s.merged}, {"u", s.u}, {"v", s.v}, {"edge", s.contracted.id}});
    }
    comps.push_back({{"vertices", c.vertices},
                     {"edge_count", c.edge_count},
                     {"root", c.root},
                     {"tree_edges", c.tree_edges},
                     {"splits", splits},
                     {"loops", c.contracted.loops},
                     {"parity_matches_rotation", c.parity_matches_rotation},
                     {"redrawn_crossings", c.redrawn.crossing_node_count()}});
  }
  return {{"k", t.k},
          {"forest", t.forest},
          {"removed", t.removed},
          {"reduced_edges", t.reduced.graph().edge_count()},
          {"reduced_odd_pairs", t.reduced_sketch.parity.odd_pairs()},
          {"components", comps},
          {"result_crossings", t.result.crossing_node_count()}};
}

Json to_json(const CrossingValue& v) {
  Json out = {{"exact", v.exact}, {"value", v.value}, {"candidates", v.candidates}};
  out["witness"] = v.witness ? drawing_json(*v.witness) : Json(nullptr);
  return out;
}

}  // namespace oddplanar
