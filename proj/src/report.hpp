#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "duval/reproduce.hpp"

namespace duval::report {

using Json = nlohmann::ordered_json;

inline Json weight_json(const std::array<long, 3>& w) { return Json::array({w[0], w[1], w[2]}); }

inline Json weight_set_json(const WeightSet& s) {
  Json a = Json::array();
  for (const auto& w : s) a.push_back(weight_json(w));
  return a;
}

inline Json quartic_json(const NormalizedQuartic& q) {
  Json j;
  j["F"] = format(q.F());
  j["A"] = format(q.A);
  j["B"] = format(q.B);
  j["C"] = format(q.C);
  j["scale"] = q.scale.to_string();
  Json m = Json::array();
  for (std::size_t i = 0; i < q.change.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < q.change.cols(); ++k) row.push_back(q.change(i, k).to_string());
    m.push_back(row);
  }
  j["change"] = m;
  return j;
}

inline Json classification_json(const Classification& c, const NormalizedQuartic& normal) {
  Json j;
  j["type"] = c.tag.to_string();
  j["family"] = std::string(1, c.tag.family_char());
  j["index"] = c.tag.index;
  j["exact"] = c.tag.exact;
  Json cert = Json::array();
  for (const auto& e : c.cert.entries) cert.push_back({{"criterion", e.name}, {"value", e.value.to_string()}, {"verdict", e.verdict}});
  j["certificate"] = cert;
  if (c.tag.family == Family::A) j["steps"] = c.cert.steps;
  if (!c.cert.descent.empty()) j["descent"] = c.cert.descent;
  j["normal_form"] = quartic_json(normal);
  return j;
}

inline Json trace_json(const VpTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"ray", weight_json(s.step.ray)},
                     {"center", kind_name(s.step.kind)},
                     {"order", s.verdict.order},
                     {"discrepancy", s.verdict.discrepancy},
                     {"vp", s.verdict.vp}});
  return steps;
}

inline Json verdict_json(const WeightVerdict& v, bool with_traces) {
  Json j;
  j["weight"] = weight_json(v.weights());
  j["vp"] = v.vp;
  j["initiates_link"] = v.initiates_link;
  Json as = Json::array();
  for (const auto& r : v.results) {
    Json a;
    a["assignment"] = weight_json(r.assignment.w);
    a["discrepancy"] = r.discrepancy;
    a["stepwise_vp"] = r.stepwise_vp;
    if (with_traces) a["steps"] = trace_json(r.trace);
    as.push_back(a);
  }
  j["assignments"] = as;
  return j;
}

inline Json spec_json(const GenSpec& s) {
  Json j;
  j["target"] = s.target.to_string();
  j["mode"] = s.specialize ? "specialize" : "generic";
  if (s.specialize) j["weight"] = weight_json(s.weight);
  j["seed"] = s.seed;
  return j;
}

inline Json corpus_line(const CorpusEntry& e) {
  Json j;
  j["spec"] = spec_json(e.spec);
  j["source"] = e.source;
  j["quartic"] = quartic_json(e.quartic);
  return j;
}

}  // namespace duval::report
