#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nashtoric/classify.hpp"

namespace nashtoric {

using Json = nlohmann::json;

// All unbounded integers serialize as decimal strings so downstream JSON
// consumers cannot lose precision; small structural counts stay numeric.

inline Json json_int(const Int& v) { return v.str(); }

inline Json json_vec(const LatticeVector& v) { return Json::array({v.x.str(), v.y.str()}); }

inline Json json_terms(const std::vector<Int>& terms) {
  Json arr = Json::array();
  for (const auto& t : terms) arr.push_back(t.str());
  return arr;
}

inline Json json_vectors(const std::vector<LatticeVector>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back(json_vec(v));
  return arr;
}

template <typename Set>
inline Json json_vector_set(const Set& vs) {
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back(json_vec(v));
  return arr;
}

inline Json json_vertex(const VertexReport& vr) {
  Json j;
  j["index"] = vr.cone.vertex_index;
  j["generators"] = Json::array({json_vec(vr.cone.gen1), json_vec(vr.cone.gen2)});
  j["det"] = json_int(det2(vr.cone.gen1, vr.cone.gen2));
  j["smooth"] = vr.smooth;
  if (vr.chart) {
    j["raw_generators"] = json_vector_set(vr.chart->raw_generators);
    j["minimal_generators"] = json_vector_set(vr.chart->minimal_generators);
  }
  if (vr.saturation) {
    j["saturated"] = vr.saturation->saturated;
    if (vr.saturation->witness) j["witness"] = json_vec(*vr.saturation->witness);
    if (vr.saturation->witness_multiple)
      j["witness_multiple"] = json_int(*vr.saturation->witness_multiple);
  }
  return j;
}

inline Json json_analysis(const AnalysisReport& report) {
  Json j;
  j["p"] = json_int(report.p);
  j["q"] = json_int(report.q);
  if (report.cf) j["cf"] = json_terms(report.cf->terms());
  j["mode"] = to_string(report.mode);
  j["char_p"] = json_int(report.char_p);
  Json verts = Json::array();
  for (const auto& vr : report.vertices) verts.push_back(json_vertex(vr));
  j["vertices"] = verts;
  j["all_smooth"] = report.all_smooth;
  j["predicate_verdict"] = report.predicate_verdict;
  j["consistent"] = report.consistent;
  if (!report.cf) j["note"] = "already smooth";
  return j;
}

inline Json json_verification(const VerificationSummary& summary) {
  Json j;
  j["max_r"] = summary.max_r;
  j["max_a"] = summary.max_a;
  j["mode"] = to_string(summary.mode);
  j["total_checked"] = summary.total_checked;
  Json mm = Json::array();
  for (const auto& terms : summary.mismatches) mm.push_back(json_terms(terms));
  j["mismatches"] = mm;
  j["all_consistent"] = summary.mismatches.empty();
  return j;
}

inline Json json_resolution_node(const ResolutionNode& node) {
  Json j;
  j["p"] = json_int(node.p);
  j["q"] = json_int(node.q);
  j["smooth"] = node.smooth;
  Json kids = Json::array();
  for (const auto& c : node.children) kids.push_back(json_resolution_node(c));
  j["children"] = kids;
  return j;
}

inline Json json_resolution(const ResolutionTrace& trace, int max_steps) {
  Json j;
  j["p"] = json_int(trace.root.p);
  j["q"] = json_int(trace.root.q);
  j["depth"] = trace.depth;
  j["complete"] = trace.complete;
  j["max_steps"] = max_steps;
  j["tree"] = json_resolution_node(trace.root);
  return j;
}

}  // namespace nashtoric
