#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "duval/blowup.hpp"
#include "duval/singclass.hpp"

namespace duval {

inline long direct_vp(const NormalizedQuartic& q, const WeightVector& w) {
  return (w.sum() - 1) - weighted_order(dehomogenize(q.F(), 0), w);
}

struct AssignmentResult {
  WeightVector assignment;
  long discrepancy = 0;
  bool stepwise_vp = false;
  VpTrace trace;
};

struct WeightVerdict {
  long a = 1, b = 1;
  std::vector<AssignmentResult> results;
  bool vp = false;
  bool initiates_link = false;

  std::array<long, 3> weights() const { return {1, a, b}; }
};

inline bool is_link_weight(long a, long b) {
  return (a == 1 && b == 1) || (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 2 && b == 5);
}

// Distinct placements of {1, a, b} on (x1, x2, x3) in lexicographic order.
inline std::vector<WeightVector> assignments(long a, long b) {
  std::array<long, 3> w{1, a, b};
  std::sort(w.begin(), w.end());
  std::vector<WeightVector> out;
  do out.emplace_back(w[0], w[1], w[2]);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline WeightVerdict analyze_weight(const NormalizedQuartic& q, long a, long b) {
  if (a > b) std::swap(a, b);
  if (a < 1 || std::gcd(a, b) != 1) throw ArithmeticError("analyze_weight expects coprime positive a, b");
  WeightVerdict v;
  v.a = a;
  v.b = b;
  for (const WeightVector& w : assignments(a, b)) {
    AssignmentResult r;
    r.assignment = w;
    r.discrepancy = direct_vp(q, w);
    r.trace = run_toric_description(q, w);
    r.stepwise_vp = r.trace.overall_vp;
    if ((r.discrepancy == 0) != r.stepwise_vp)
      throw ConsistencyViolation("direct discrepancy " + std::to_string(r.discrepancy) + " disagrees with stepwise verdict for weights (" +
                                 std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + ") on " +
                                 format(q.F()));
    v.vp = v.vp || r.discrepancy == 0;
    v.results.push_back(std::move(r));
  }
  v.initiates_link = v.vp && is_link_weight(a, b);
  return v;
}

struct Bounds {
  long max_a = 0;  // 0 means no bound beyond a <= b
  long max_b = 12;  // bound on a + b
};

inline long ceil_half(long n) { return (n + 1) / 2; }

// Point blowups needed to resolve the type; 0 when unknown.
inline long resolution_count(const TypeTag& t) {
  if (!t.exact) return 0;
  switch (t.family) {
    case Family::A: return ceil_half(t.index);
    case Family::D: return 2 * ceil_half(t.index - 2);
    case Family::E: return t.index == 6 ? 4 : t.index;
  }
  return 0;
}

inline std::vector<std::pair<long, long>> weight_pairs(const Bounds& bounds) {
  std::vector<std::pair<long, long>> out;
  for (long a = 1; 2 * a <= bounds.max_b; ++a) {
    if (bounds.max_a > 0 && a > bounds.max_a) break;
    for (long b = a; a + b <= bounds.max_b; ++b)
      if (std::gcd(a, b) == 1) out.emplace_back(a, b);
  }
  return out;
}

inline std::vector<WeightVerdict> enumerate_vp(const NormalizedQuartic& q, const Bounds& bounds) {
  std::vector<WeightVerdict> out;
  for (auto [a, b] : weight_pairs(bounds)) out.push_back(analyze_weight(q, a, b));
  return out;
}

inline std::vector<WeightVerdict> sarkisov_filter(const std::vector<WeightVerdict>& verdicts) {
  std::vector<WeightVerdict> out;
  for (const auto& v : verdicts)
    if (v.vp && is_link_weight(v.a, v.b)) out.push_back(v);
  return out;
}

using WeightSet = std::set<std::array<long, 3>>;

inline WeightSet vp_set(const std::vector<WeightVerdict>& verdicts) {
  WeightSet s;
  for (const auto& v : verdicts)
    if (v.vp) s.insert(v.weights());
  return s;
}

inline WeightSet link_filter(const WeightSet& s) {
  WeightSet out;
  for (const auto& w : s)
    if (is_link_weight(w[1], w[2])) out.insert(w);
  return out;
}

inline std::string format_weight_set(const WeightSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& w : s) {
    if (!first) out += ", ";
    out += "(" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + ")";
    first = false;
  }
  return out + "}";
}

}  // namespace duval
