#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "duval/generator.hpp"

namespace duval {

// ---------------------------------------------------------------------------
// result tables from a corpus

struct TableText {
  std::string name;
  std::vector<std::string> lines;
};

inline std::string weight_list(const std::vector<Weight>& ws) {
  WeightSet s(ws.begin(), ws.end());
  return format_weight_set(s);
}

struct CorpusAnalysis {
  const CorpusEntry* entry = nullptr;
  Classification classification;
  WeightSet vp;
};

inline std::vector<CorpusAnalysis> analyze_corpus(const Corpus& c, const Bounds& bounds = {}) {
  std::vector<CorpusAnalysis> out;
  for (const auto& e : c.entries) {
    CorpusAnalysis a;
    a.entry = &e;
    a.classification = classify(e.quartic);
    a.vp = vp_set(enumerate_vp(e.quartic, bounds));
    out.push_back(std::move(a));
  }
  return out;
}

inline std::string row_prefix(const std::string& label) { return label + " |"; }

inline TableText expected_table1() {
  TableText t{"table1", {}};
  for (const auto& r : table_vp_weights())
    t.lines.push_back(row_prefix(r.type.to_string()) + " black " + weight_list(r.black) + " | colored " + weight_list(r.colored));
  return t;
}

// Black weights from generic members (all seeds must agree); colored weights realized by every specialized seed.
inline TableText reproduce_table1(const std::vector<CorpusAnalysis>& an) {
  TableText t{"table1", {}};
  for (const auto& r : table_vp_weights()) {
    std::vector<WeightSet> generic;
    for (const auto& a : an)
      if (a.entry->source == "generated" && a.entry->spec.target == r.type && !a.entry->spec.specialize) generic.push_back(a.vp);
    std::string black = "none";
    if (!generic.empty()) {
      bool agree = std::all_of(generic.begin(), generic.end(), [&](const WeightSet& s) { return s == generic.front(); });
      black = agree ? format_weight_set(generic.front()) : "disagreeing seeds";
    }
    std::vector<Weight> colored;
    for (const Weight& w : r.colored) {
      int seen = 0;
      bool all = true;
      for (const auto& a : an) {
        const GenSpec& s = a.entry->spec;
        if (s.target != r.type || !s.specialize || s.weight != w) continue;
        ++seen;
        all = all && a.vp.count(w) > 0;
      }
      if (seen > 0 && all) colored.push_back(w);
    }
    t.lines.push_back(row_prefix(r.type.to_string()) + " black " + black + " | colored " + weight_list(colored));
  }
  return t;
}

inline TableText expected_table2() {
  TableText t{"table2", {}};
  for (const auto& r : table_link_weights()) t.lines.push_back(row_prefix(r.label) + " " + weight_list(r.weights));
  return t;
}

inline TableText reproduce_table2(const std::vector<CorpusAnalysis>& an) {
  TableText t{"table2", {}};
  for (const auto& r : table_link_weights()) {
    WeightSet s;
    for (const auto& a : an)
      if (link_row_label(a.classification.tag) == r.label) {
        WeightSet l = link_filter(a.vp);
        s.insert(l.begin(), l.end());
      }
    t.lines.push_back(row_prefix(r.label) + " " + format_weight_set(s));
  }
  return t;
}

inline TableText expected_table3() {
  TableText t{"table3", {}};
  for (const auto& r : table_vp_weights())
    t.lines.push_back(row_prefix(r.type.to_string()) + " " + std::to_string(table_resolution_count(r.type)));
  return t;
}

// A rows count the criteria steps the classifier consumed.
inline TableText reproduce_table3(const std::vector<CorpusAnalysis>& an) {
  TableText t{"table3", {}};
  for (const auto& r : table_vp_weights()) {
    std::vector<long> counts;
    for (const auto& a : an) {
      if (a.entry->source != "generated" || a.entry->spec.target != r.type || a.entry->spec.specialize) continue;
      const auto& c = a.classification;
      counts.push_back(c.tag.family == Family::A ? c.cert.steps : resolution_count(c.tag));
    }
    std::string v = counts.empty() ? "none" : std::to_string(counts.front());
    if (std::any_of(counts.begin(), counts.end(), [&](long k) { return k != counts.front(); })) v = "disagreeing seeds";
    t.lines.push_back(row_prefix(r.type.to_string()) + " " + v);
  }
  return t;
}

inline std::vector<TypeTag> descent_rows() {
  std::vector<TypeTag> out;
  for (int n = 5; n <= 10; ++n) out.push_back(TypeTag::D(n));
  for (int n = 6; n <= 8; ++n) out.push_back(TypeTag::E(n));
  return out;
}

inline TableText expected_table4() {
  TableText t{"table4", {}};
  for (const auto& T : descent_rows()) t.lines.push_back(row_prefix(T.to_string()) + " " + table_first_descendant(T));
  return t;
}

inline TableText reproduce_table4(const std::vector<CorpusAnalysis>& an) {
  TableText t{"table4", {}};
  for (const auto& T : descent_rows()) {
    std::vector<std::string> kids;
    for (const auto& a : an) {
      if (a.entry->spec.target != T || a.entry->spec.specialize) continue;
      const auto& d = a.classification.cert.descent;
      kids.push_back(d.size() >= 2 ? d[1] : "none");
    }
    std::string v = kids.empty() ? "none" : kids.front();
    if (std::any_of(kids.begin(), kids.end(), [&](const std::string& k) { return k != kids.front(); })) v = "disagreeing seeds";
    t.lines.push_back(row_prefix(T.to_string()) + " " + v);
  }
  return t;
}

// ---------------------------------------------------------------------------
// condition tables by toggling coefficients

enum class RayVerdict { Vp, NotVp, Reducible, Invalid };

inline const char* verdict_name(RayVerdict v) {
  switch (v) {
    case RayVerdict::Vp: return "vp";
    case RayVerdict::NotVp: return "not vp";
    case RayVerdict::Reducible: return "reducible";
    case RayVerdict::Invalid: return "invalid";
  }
  return "";
}

// Smallest coprime weight whose toric description inserts the ray.
inline WeightVector weight_through(const Weight& ray) {
  long c = ray[1], d = ray[2];
  while (std::gcd(c, d) != 1) ++d;
  return WeightVector(1, c, d);
}

inline RayVerdict ray_verdict(const NormalizedQuartic& q, const Weight& ray) {
  try {
    VpTrace tr = run_toric_description(q, weight_through(ray));
    for (const auto& s : tr.steps)
      if (s.step.ray == ray) return s.verdict.vp ? RayVerdict::Vp : RayVerdict::NotVp;
  } catch (const ReducibleInput&) {
    return RayVerdict::Reducible;
  } catch (const Error&) {
  }
  return RayVerdict::Invalid;
}

inline Polynomial condition_cone(bool de) { return de ? x(3) * x(3) : x(2) * x(3); }

// Random table with the prior rays' equalities and open conditions in place.
inline CoefficientTable prior_instance(const std::vector<ConditionRow>& rows, const ConditionRow& row, SmallRationals& rnd) {
  CoefficientTable t;
  for (int k = 0; k < kCoefCount; ++k) t[k] = rnd.nonzero();
  for (int k : cumulative_zeros(rows, row.ray, false)) t[k] = GR();
  return t;
}

inline bool contains(const std::vector<int>& v, int k) { return std::find(v.begin(), v.end(), k) != v.end(); }

struct DerivedCondition {
  Weight ray;
  std::vector<int> zero;
  std::vector<int> nonzero;
  bool reducible = false;
  bool sufficient = false;  // the listed equalities make the step vp (or force reducibility)
};

// Equalities: listed coefficients whose revival breaks the step. Listed open conditions are kept when
// killing them breaks the step.
inline DerivedCondition derive_condition(const std::vector<ConditionRow>& rows, const ConditionRow& row, bool de,
                                         SmallRationals& rnd) {
  DerivedCondition d;
  d.ray = row.ray;
  const Polynomial A = condition_cone(de);
  CoefficientTable t = prior_instance(rows, row, rnd);
  std::vector<int> prior = cumulative_zeros(rows, row.ray, false);
  std::vector<int> candidates;
  for (int k = 0; k < kCoefCount; ++k)
    if (!contains(prior, k)) candidates.push_back(k);
  CoefficientTable full = t;
  for (int k : row.zero) full[k] = GR();
  RayVerdict base = ray_verdict(quartic_from_table(A, full), row.ray);
  d.reducible = base == RayVerdict::Reducible;
  d.sufficient = base == RayVerdict::Vp || d.reducible;
  for (int k : candidates) {
    if (!full[k].is_zero()) continue;
    CoefficientTable u = full;
    u[k] = rnd.nonzero();
    RayVerdict v = ray_verdict(quartic_from_table(A, u), row.ray);
    if (d.reducible ? v != RayVerdict::Reducible : v != RayVerdict::Vp) d.zero.push_back(k);
  }
  for (int k : candidates) {
    if (full[k].is_zero() || d.reducible) continue;
    CoefficientTable u = full;
    u[k] = GR();
    RayVerdict v = ray_verdict(quartic_from_table(A, u), row.ray);
    if (contains(row.nonzero, k) && v != RayVerdict::Vp) d.nonzero.push_back(k);
  }
  return d;
}

inline std::string ray_label(const Weight& w) {
  return "(" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + ")";
}

inline std::string condition_line(const Weight& ray, std::vector<int> zero, std::vector<int> nonzero, bool reducible) {
  std::sort(zero.begin(), zero.end());
  std::sort(nonzero.begin(), nonzero.end());
  ConditionRow r{ray, zero, nonzero, reducible, ""};
  return row_prefix(ray_label(ray)) + " " + condition_text(r) + (reducible ? " | reducible" : "");
}

inline TableText expected_conditions(bool de) {
  TableText t{de ? "table6" : "table5", {}};
  for (const auto& r : de ? table_conditions_de() : table_conditions_a())
    t.lines.push_back(condition_line(r.ray, r.zero, r.nonzero, r.reducible));
  return t;
}

inline TableText reproduce_conditions(bool de, std::uint64_t seed) {
  TableText t{de ? "table6" : "table5", {}};
  SmallRationals rnd(seed * 7919 + (de ? 1 : 0));
  const auto rows = de ? table_conditions_de() : table_conditions_a();
  for (const auto& r : rows) {
    DerivedCondition d = derive_condition(rows, r, de, rnd);
    std::string line = condition_line(d.ray, d.zero, d.nonzero, d.reducible);
    if (!d.sufficient) line += " | insufficient";
    t.lines.push_back(line);
  }
  return t;
}

// One randomized check of a condition row: vp exactly when its equalities hold, and each listed
// coefficient flips the verdict on its own. Reducible rows must stay reducible only with all equalities.
struct ToggleOutcome {
  bool ok = true;
  std::string detail;
};

inline ToggleOutcome toggle_trial(const std::vector<ConditionRow>& rows, const ConditionRow& row, bool de, SmallRationals& rnd) {
  ToggleOutcome out;
  const Polynomial A = condition_cone(de);
  CoefficientTable t = prior_instance(rows, row, rnd);
  CoefficientTable held = t;
  for (int k : row.zero) held[k] = GR();
  const RayVerdict want = row.reducible ? RayVerdict::Reducible : RayVerdict::Vp;
  auto fail = [&](const std::string& what, RayVerdict got) {
    out.ok = false;
    out.detail = ray_label(row.ray) + ": " + what + " gave " + verdict_name(got);
  };
  RayVerdict v = ray_verdict(quartic_from_table(A, held), row.ray);
  if (v != want) {
    fail("equalities imposed", v);
    return out;
  }
  if (row.zero.empty()) return out;
  v = ray_verdict(quartic_from_table(A, t), row.ray);
  if (v == want) {
    fail("equalities absent", v);
    return out;
  }
  for (int k : row.zero) {
    CoefficientTable u = held;
    u[k] = rnd.nonzero();
    v = ray_verdict(quartic_from_table(A, u), row.ray);
    if (v == want || v == RayVerdict::Invalid) {
      fail(std::string(kCoefNames[k]) + " flipped", v);
      return out;
    }
  }
  return out;
}

}  // namespace duval
