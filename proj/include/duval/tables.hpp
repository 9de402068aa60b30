#pragma once

#include <array>
#include <string>
#include <vector>

#include "duval/blowup.hpp"
#include "duval/quartic.hpp"
#include "duval/singclass.hpp"

namespace duval {

using Weight = std::array<long, 3>;

// vp weights up to permutation; colored ones need closed conditions.
struct VpRow {
  TypeTag type;
  std::vector<Weight> black;
  std::vector<Weight> colored;
};

inline std::vector<VpRow> table_vp_weights() {
  const Weight w111{1, 1, 1}, w112{1, 1, 2}, w113{1, 1, 3}, w123{1, 2, 3}, w125{1, 2, 5}, w134{1, 3, 4}, w135{1, 3, 5},
      w145{1, 4, 5};
  std::vector<VpRow> t;
  t.push_back({TypeTag::A(1), {w111}, {}});
  t.push_back({TypeTag::A(2), {w111, w112}, {}});
  t.push_back({TypeTag::A(3), {w111, w112}, {w113}});
  t.push_back({TypeTag::A(4), {w111, w112}, {w113, w123}});
  t.push_back({TypeTag::A(5), {w111, w112}, {w113, w123}});
  t.push_back({TypeTag::A(6), {w111, w112}, {w113, w123, w125, w134}});
  t.push_back({TypeTag::A(7), {w111, w112}, {w113, w123, w125, w134, w135}});
  t.push_back({TypeTag::D(4), {w111, w112}, {}});
  t.push_back({TypeTag::D(5), {w111, w112}, {w123}});
  t.push_back({TypeTag::D(6), {w111, w112}, {w123}});
  t.push_back({TypeTag::D(7), {w111, w112}, {w123, w134, w135}});
  t.push_back({TypeTag::D(8), {w111, w112}, {w123, w134, w135}});
  t.push_back({TypeTag::D(9), {w111, w112}, {w123, w134, w135, w145}});
  t.push_back({TypeTag::D(10), {w111, w112}, {w123, w134, w135, w145}});
  t.push_back({TypeTag::E(6), {w111, w112}, {w123, w134, w135}});
  t.push_back({TypeTag::E(7), {w111, w112}, {w123, w134, w135}});
  t.push_back({TypeTag::E(8), {w111, w112}, {w123, w134, w135, w145}});
  return t;
}

// Weights initiating Sarkisov links.
struct LinkRow {
  std::string label;
  std::vector<Weight> weights;
};

inline std::vector<LinkRow> table_link_weights() {
  const Weight w111{1, 1, 1}, w112{1, 1, 2}, w123{1, 2, 3}, w125{1, 2, 5};
  return {
      {"A1", {w111}},
      {"A2", {w111, w112}},
      {"A3", {w111, w112}},
      {"A4", {w111, w112, w123}},
      {"A5", {w111, w112, w123}},
      {"A>=6", {w111, w112, w123, w125}},
      {"D4", {w111, w112}},
      {"D>=5", {w111, w112, w123}},
      {"E6", {w111, w112, w123}},
      {"E7", {w111, w112, w123}},
      {"E8", {w111, w112, w123}},
  };
}

inline std::string link_row_label(const TypeTag& t) {
  if (t.family == Family::A) return t.index >= 6 ? "A>=6" : t.to_string();
  if (t.family == Family::D) return t.index >= 5 ? "D>=5" : "D4";
  return t.to_string();
}

// Point blowups to resolve.
inline long table_resolution_count(const TypeTag& t) {
  switch (t.family) {
    case Family::A: return (t.index + 1) / 2;
    case Family::D: return 2 * ((t.index - 2 + 1) / 2);
    case Family::E: return t.index == 6 ? 4 : t.index;
  }
  return 0;
}

// First-blowup descendant carrying the worse singularity.
inline std::string table_first_descendant(const TypeTag& t) {
  if (t.family == Family::D) {
    if (t.index == 4) return "";
    if (t.index == 5) return "A3";
    return "D" + std::to_string(t.index - 2);
  }
  if (t.family == Family::E) return t.index == 6 ? "A5" : t.index == 7 ? "D6" : "E7";
  return "";
}

// Per-ray vp conditions.
struct ConditionRow {
  Weight ray;
  std::vector<int> zero;     // these coefficients vanish
  std::vector<int> nonzero;  // open conditions
  bool reducible = false;    // the equalities force a reducible quartic
  std::string note;
};

inline std::vector<ConditionRow> table_conditions_a() {
  return {
      {{1, 1, 1}, {}, {}, false, "generic"},
      {{1, 1, 2}, {}, {}, false, "generic"},
      {{1, 1, 3}, {b0, beta2, rho2, sigma0}, {}, false, "x3 | B"},
      {{1, 1, 4}, {c0, delta2, eps2, tau0, lambda0}, {}, true, "x3 | C"},
      {{1, 2, 2}, {b0}, {}, false, ""},
      {{1, 2, 3}, {beta2, c0}, {}, false, ""},
      {{1, 2, 4}, {rho2, delta2}, {}, false, ""},
      {{1, 2, 5}, {sigma0, eps2}, {}, false, ""},
      {{1, 3, 3}, {c0, beta2, beta3}, {}, false, ""},
      {{1, 3, 4}, {delta2}, {}, false, ""},
      {{1, 3, 5}, {rho2}, {}, false, ""},
  };
}

inline std::vector<ConditionRow> table_conditions_de() {
  return {
      {{1, 1, 1}, {}, {}, false, "generic"},
      {{1, 1, 2}, {}, {}, false, "generic"},
      {{1, 1, 3}, {b0, beta2, rho2, sigma0}, {}, true, "x3 | B, x1 | f2"},
      {{1, 2, 2}, {b0}, {}, false, ""},
      {{1, 2, 3}, {beta2, c0}, {}, false, ""},
      {{1, 2, 4}, {rho2, delta2}, {beta3}, false, ""},
      {{1, 2, 5}, {sigma0, eps2}, {}, false, ""},
      {{1, 3, 3}, {c0, beta2, beta3}, {}, false, ""},
      {{1, 3, 4}, {delta2}, {}, false, ""},
      {{1, 3, 5}, {rho2}, {delta3}, false, ""},
      {{1, 3, 6}, {eps2}, {}, false, ""},
      {{1, 3, 7}, {sigma0}, {}, false, ""},
      {{1, 4, 4}, {delta2, delta3}, {}, false, ""},
      {{1, 4, 5}, {}, {}, false, "generic"},
      {{1, 4, 6}, {rho2}, {}, true, "x1 | f5"},
  };
}

// Rays inserted before and including (1,c,d) in the toric description.
inline std::vector<Weight> rays_through(const Weight& ray) {
  std::vector<Weight> out;
  long c = ray[1], d = ray[2];
  for (long i = 1; i <= c; ++i) out.push_back({1, i, i});
  for (long j = c + 1; j <= d; ++j) out.push_back({1, c, j});
  return out;
}

inline const ConditionRow* find_row(const std::vector<ConditionRow>& rows, const Weight& ray) {
  for (const auto& r : rows)
    if (r.ray == ray) return &r;
  return nullptr;
}

// Coefficients forced to vanish by every ray up to (1,c,d).
inline std::vector<int> cumulative_zeros(const std::vector<ConditionRow>& rows, const Weight& ray, bool include_last = true) {
  std::vector<int> z;
  auto seq = rays_through(ray);
  if (!include_last) seq.pop_back();
  for (const auto& r : seq) {
    const ConditionRow* row = find_row(rows, r);
    if (!row) continue;
    for (int k : row->zero)
      if (std::find(z.begin(), z.end(), k) == z.end()) z.push_back(k);
  }
  return z;
}

inline std::vector<int> cumulative_nonzeros(const std::vector<ConditionRow>& rows, const Weight& ray, bool include_last = true) {
  std::vector<int> z;
  auto seq = rays_through(ray);
  if (!include_last) seq.pop_back();
  for (const auto& r : seq) {
    const ConditionRow* row = find_row(rows, r);
    if (!row) continue;
    for (int k : row->nonzero) z.push_back(k);
  }
  return z;
}

inline std::string condition_text(const ConditionRow& r) {
  if (r.zero.empty() && r.nonzero.empty()) return "generic";
  std::string s;
  for (std::size_t k = 0; k < r.zero.size(); ++k) s += (k ? " = " : "") + std::string(kCoefNames[r.zero[k]]);
  if (!r.zero.empty()) s += " = 0";
  for (int k : r.nonzero) s += " and " + std::string(kCoefNames[k]) + " != 0";
  return s;
}

}  // namespace duval
