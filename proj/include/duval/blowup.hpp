#pragma once

#include <array>
#include <numeric>
#include <vector>

#include "duval/quartic.hpp"

namespace duval {

enum class StepKind { Point, Curve };

inline const char* kind_name(StepKind k) { return k == StepKind::Point ? "point" : "curve"; }

struct RayStep {
  std::array<long, 3> ray{1, 1, 1};
  StepKind kind = StepKind::Point;
  int index = 1;
  friend bool operator==(const RayStep&, const RayStep&) = default;
};

inline std::vector<RayStep> ray_sequence(long a, long b) {
  if (a < 1 || b < a) throw ArithmeticError("ray_sequence expects 1 <= a <= b");
  if (std::gcd(a, b) != 1) throw ArithmeticError("ray_sequence expects gcd(a, b) = 1");
  std::vector<RayStep> seq;
  for (long i = 1; i <= b; ++i) {
    RayStep s;
    s.index = static_cast<int>(i);
    if (i <= a) s.ray = {1, i, i};
    else {
      s.ray = {1, a, i};
      s.kind = StepKind::Curve;
    }
    seq.push_back(s);
  }
  return seq;
}

inline constexpr VarSet kCurveVars{false, true, false, true};

inline Polynomial step_transform(const Polynomial& f, StepKind kind) {
  if (f.is_zero()) throw ArithmeticError("step_transform of the zero polynomial");
  Images im = identity_images();
  if (kind == StepKind::Point) im[2] = x(1) * x(2);
  im[3] = x(1) * x(3);
  Polynomial g = substitute(f, im);
  if (g.is_zero()) throw ReducibleInput("strict transform vanished");
  return divide_var_power(g, 1, var_power_content(g, 1));
}

struct StepVerdict {
  unsigned order = 0;
  long discrepancy = 0;
  bool vp = false;
  bool non_canonical = false;
};

inline StepVerdict step_vp(const Polynomial& f, StepKind kind) {
  StepVerdict v;
  if (kind == StepKind::Point) {
    v.order = order_at_origin(f);
    v.discrepancy = 2 - static_cast<long>(v.order);
    v.vp = v.order == 2;
    v.non_canonical = v.order > 2;
  } else {
    v.order = order_along(f, kCurveVars);
    v.discrepancy = 1 - static_cast<long>(v.order);
    v.vp = v.order == 1;
    v.non_canonical = v.order > 1;
  }
  return v;
}

struct TraceStep {
  RayStep step;
  StepVerdict verdict;
};

struct VpTrace {
  long a = 1, b = 1;
  WeightVector assignment;
  std::array<int, 3> relabel{1, 2, 3};  // old variable x_k becomes x_relabel[k-1]
  std::vector<TraceStep> steps;
  std::vector<Polynomial> strict_transforms;
  bool overall_vp = false;
  bool non_canonical = false;
};

inline std::array<int, 3> weight_relabeling(const WeightVector& w) {
  std::array<int, 3> slots{0, 1, 2};
  std::stable_sort(slots.begin(), slots.end(), [&](int p, int q) { return w[p] < w[q]; });
  std::array<int, 3> relabel{};
  for (int k = 0; k < 3; ++k) relabel[slots[k]] = k + 1;
  return relabel;
}

inline Polynomial relabel_affine(const Polynomial& f, const std::array<int, 3>& relabel) {
  return permute_vars(f, {0, relabel[0], relabel[1], relabel[2]});
}

inline VpTrace run_toric_description(const NormalizedQuartic& q, const WeightVector& w) {
  check_reducibility(q);
  VpTrace t;
  t.assignment = w;
  t.relabel = weight_relabeling(w);
  std::array<long, 3> sorted{w[0], w[1], w[2]};
  std::sort(sorted.begin(), sorted.end());
  if (sorted[0] != 1) throw ArithmeticError("assignment must contain weight 1");
  t.a = sorted[1];
  t.b = sorted[2];
  Polynomial f = relabel_affine(q.affine(), t.relabel);
  t.strict_transforms.push_back(f);
  t.overall_vp = true;
  for (const RayStep& s : ray_sequence(t.a, t.b)) {
    StepVerdict v = step_vp(f, s.kind);
    if (s.kind == StepKind::Curve && v.order >= 2)
      throw ReducibleInput("the line x1 = x3 = 0 has multiplicity " + std::to_string(v.order) + " on the strict transform at ray (" +
                           std::to_string(s.ray[0]) + "," + std::to_string(s.ray[1]) + "," + std::to_string(s.ray[2]) +
                           "): x1 divides the transform and the exceptional divisor became a component");
    t.steps.push_back({s, v});
    t.overall_vp = t.overall_vp && v.vp;
    t.non_canonical = t.non_canonical || v.non_canonical;
    f = step_transform(f, s.kind);
    t.strict_transforms.push_back(f);
  }
  if (t.non_canonical) t.overall_vp = false;
  return t;
}

}  // namespace duval
