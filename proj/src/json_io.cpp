#include "thompson/json_io.hpp"

namespace thompson {

using nlohmann::json;

json length_json(const LengthBreakdown& b, const SpaceLabeling& s) {
  return json{{"l1", b.caret_count},
              {"l0", b.x0_count},
              {"total", b.total},
              {"top_carets", b.top_carets},
              {"bottom_carets", b.bottom_carets},
              {"top_labels", s.top_string()},
              {"bottom_labels", s.bottom_string()},
              {"weights", s.weights}};
}

json plmap_json(const PLMap& m) {
  json breaks = json::array();
  for (const auto& p : m.points)
    breaks.push_back({p.x.num(), p.x.exp(), p.y.num(), p.y.exp()});
  return json{{"breakpoints", breaks},
              {"k_minus", m.k_minus},
              {"k_plus", m.k_plus}};
}

json witness_report_json(const WitnessReport& r) {
  json j{{"n", r.n},
         {"l", r.l_key},
         {"r", r.r_key},
         {"len_l", r.len_l},
         {"len_r", r.len_r},
         {"carets_l", r.carets_l},
         {"carets_r", r.carets_r},
         {"dist_lr", r.dist_lr},
         {"len_x0l", r.len_x0l},
         {"same_forests_pointer_shift", r.same_forests_pointer_shift},
         {"weights_l", r.weights_l},
         {"weights_r", r.weights_r},
         {"weights_x0l", r.weights_x0l},
         {"restricted_ran", r.restricted_ran},
         {"restricted_complete", r.restricted_complete},
         {"failures", r.failures},
         {"passed", r.passed()}};
  if (r.restricted) j["restricted_distance"] = *r.restricted;
  if (r.restricted_ran) j["restricted_explored"] = r.restricted_explored;
  return j;
}

json detour_report_json(const DetourReport& r) {
  json paths = json::array();
  for (const PathCheck& p : r.paths)
    paths.push_back({{"name", p.name},
                     {"word", p.word},
                     {"letters", p.letters},
                     {"reaches_r", p.reaches_r},
                     {"stays_in_ball", p.stays_in_ball},
                     {"max_length_seen", p.max_length_seen},
                     {"visits_identity", p.visits_identity}});
  json mirror{{"l", r.mirror.l_key},
              {"r", r.mirror.r_key},
              {"len_l", r.mirror.len_l},
              {"len_r", r.mirror.len_r},
              {"len_x0l", r.mirror.len_x0l},
              {"dist", r.mirror.dist}};
  if (r.mirror.restricted) mirror["restricted_distance"] = *r.mirror.restricted;
  return json{{"n", r.n},
              {"paths", paths},
              {"mirror_pair", mirror},
              {"failures", r.failures},
              {"passed", r.passed()}};
}

json tail_report_json(const TailReport& r) {
  json triples = json::array();
  for (const TailTriple& t : r.triples) {
    const char* status = nullptr;
    switch (t.status) {
      case TailTriple::Status::VisitsFunnel: status = "visits_funnel"; break;
      case TailTriple::Status::LeavesBall: status = "leaves_ball"; break;
      case TailTriple::Status::Backtracks: status = "backtracks"; break;
      case TailTriple::Status::Violation: status = "violation"; break;
    }
    triples.push_back({{"letters", t.letters}, {"status", status}});
  }
  return json{{"n", r.n},
              {"funnel", r.funnel_key},
              {"visits", r.visits},
              {"leaves", r.leaves},
              {"backtracks", r.backtracks},
              {"violations", r.violations},
              {"funnel_tail_in_ball", r.funnel_tail_in_ball},
              {"passed", r.passed()},
              {"triples", triples}};
}

json path_trace_json(const PathTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"letter", s.letter},
                     {"element", s.key},
                     {"len", s.len},
                     {"in_ball", s.in_ball},
                     {"right_foot", s.right_foot},
                     {"critical_leaf", s.critical_leaf},
                     {"foot_on_critical", s.foot_on_critical},
                     {"foot_jump", s.foot_jump}});
  json j{{"radius", t.radius}, {"steps", steps}};
  if (t.first_on_critical) j["first_on_critical"] = *t.first_on_critical;
  if (t.last_on_critical) j["last_on_critical"] = *t.last_on_critical;
  return j;
}

json convexity_json(const ConvexityResult& c) {
  return json{{"n", c.n},
              {"c", c.c},
              {"c_left_convention", c.c_left_convention},
              {"c_right_convention", c.c_right_convention},
              {"witness_g", c.witness_g},
              {"witness_h", c.witness_h},
              {"pairs_checked", c.pairs_checked}};
}

json ball_stats_json(const Ball& b) {
  json layers = json::array();
  for (const auto& layer : b.layers) layers.push_back(layer.size());
  return json{
      {"radius", b.radius}, {"size", b.size()}, {"layer_sizes", layers}};
}

}  // namespace thompson
