#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "duval/fixtures.hpp"
#include "duval/tables.hpp"
#include "duval/vpanalyzer.hpp"

namespace duval {

struct GenSpec {
  TypeTag target;
  bool specialize = false;
  Weight weight{1, 1, 1};
  std::uint64_t seed = 0;

  std::string to_string() const {
    std::string s = target.to_string() + (specialize ? " specialize (" + std::to_string(weight[0]) + "," +
                                                           std::to_string(weight[1]) + "," + std::to_string(weight[2]) + ")"
                                                     : " generic");
    return s + " seed " + std::to_string(seed);
  }
};

inline bool supported_target(const TypeTag& t) {
  if (!t.valid()) return false;
  return !(t.family == Family::D && !t.exact);
}

class SmallRationals {
 public:
  explicit SmallRationals(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  // p/q with p in [-9,9] \ {0}, q in [1,9].
  GR nonzero() {
    long p = uniform(1, 9) * (uniform(0, 1) ? 1 : -1);
    return GR(make_rational(p, uniform(1, 9)));
  }

 private:
  std::mt19937_64 rng_;
};

namespace gen {

using Values = std::function<std::optional<std::vector<GR>>(const CoefficientTable&)>;

struct Condition {
  std::string name;
  Values eval;
  std::vector<int> preferred;
};

inline Polynomial de_affine(const CoefficientTable& t) { return x(3) * x(3) + t.B() + t.C(); }

// Level j of the refinement before its cone is aligned. Level 0 descends at x2 = t0 in W1,
// deeper levels at the multiple root the classifier would pick.
inline std::optional<Polynomial> raw_level(const CoefficientTable& t, const GR& t0, std::size_t j) {
  Polynomial f = de_affine(t);
  for (std::size_t k = 0; k < j; ++k) {
    Polynomial Q = homogeneous_component(f, 2);
    if (quadric_rank(Q) != 1) return std::nullopt;
    f = align_cone(f, Q, 1);
    CubicData d;
    if (k == 0) {
      d.chart = 1;
      d.root = t0;
    } else {
      try {
        d = cubic_data(homogeneous_component(f, 3));
      } catch (const Error&) {
        return std::nullopt;
      }
      if (d.multiplicity < 2) return std::nullopt;
    }
    f = descend(f, d);
  }
  return f;
}

inline std::optional<Polynomial> aligned_level(const CoefficientTable& t, const GR& t0, std::size_t j) {
  auto f = raw_level(t, t0, j);
  if (!f) return std::nullopt;
  Polynomial Q = homogeneous_component(*f, 2);
  if (quadric_rank(Q) != 1) return std::nullopt;
  return align_cone(*f, Q, 1);
}

// Coefficients of f3(x1, x2, 0), from x1^3 down to x2^3.
inline std::array<GR, 4> binary_cubic(const Polynomial& f) {
  std::array<GR, 4> c;
  Polynomial f3 = homogeneous_component(f, 3);
  for (const auto& [m, a] : f3.terms())
    if (m[3] == 0) c[m[2]] += a;
  return c;
}

inline GR cubic_discriminant(const std::array<GR, 4>& c) {
  const GR &a = c[0], &b = c[1], &cc = c[2], &d = c[3];
  return b * b * cc * cc - GR(4) * a * cc * cc * cc - GR(4) * b * b * b * d - GR(27) * a * a * d * d +
         GR(18) * a * b * cc * d;
}

inline std::vector<GR> cubic_hessian(const std::array<GR, 4>& c) {
  return {c[1] * c[1] - GR(3) * c[0] * c[2], c[1] * c[2] - GR(9) * c[0] * c[3], c[2] * c[2] - GR(3) * c[1] * c[3]};
}

// Triple-root test at a known multiple root is linear; without one fall back to the Hessian.
inline std::vector<GR> triple_root_values(const Polynomial& f, const std::array<GR, 4>& c) {
  CubicData d;
  try {
    d = cubic_data(homogeneous_component(f, 3));
  } catch (const Error&) {
    return cubic_hessian(c);
  }
  if (d.multiplicity < 2) return cubic_hessian(c);
  UPoly u = d.chart == 1 ? d.p1 : d.p2;
  std::vector<GR> v;
  for (int k = 0; k < 3; ++k) {
    v.push_back(u.eval(d.root));
    u = u.derivative();
  }
  return v;
}

inline std::vector<GR> rank_one_minors(const Polynomial& f) {
  Matrix G = gram_matrix(homogeneous_component(f, 2));
  std::vector<GR> out;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = k + 1; l < 3; ++l) out.push_back(G(i, k) * G(j, l) - G(i, l) * G(j, k));
  return out;
}

// Equality constraints whose generic solution set is the target stratum.
inline std::vector<Condition> a_conditions(int n) {
  auto one = [](auto q) -> Values {
    return [q](const CoefficientTable& t) { return std::optional<std::vector<GR>>(std::vector<GR>{q(a_quantities(t))}); };
  };
  std::vector<Condition> all = {
      {"(*1)", one([](const AQuantities& a) { return a.star1; }), {b0}},
      {"(*2)", one([](const AQuantities& a) { return a.star2; }), {c0}},
      {"(*3)", one([](const AQuantities& a) { return a.zeta; }), {delta2, delta3}},
      {"(*4)", one([](const AQuantities& a) { return a.star4; }), {eps2, eps3, eps23}},
      {"(*5)", one([](const AQuantities& a) { return a.theta; }), {tau0, tau3, tau1, tau2}},
      {"(*6)", one([](const AQuantities& a) { return a.star6; }), {lambda0, lambda4, lambda1, lambda3, lambda2}},
  };
  std::vector<Condition> out;
  for (int k = 0; k < n - 2 && k < 6; ++k) out.push_back(all[k]);
  return out;
}

struct Level {
  unsigned mult;   // 2: double root, 3: triple root
  bool rank_one;   // the descendant keeps a rank-1 cone
};

inline std::vector<Level> de_levels(const TypeTag& t) {
  std::vector<Level> lv;
  if (t.family == Family::D) {
    int n = t.index;
    while (n >= 6) {
      lv.push_back({2, true});
      n -= 2;
    }
    if (n == 5) lv.push_back({2, false});
  } else if (t.index == 6) {
    lv = {{3, false}};
  } else if (t.index == 7) {
    lv = {{3, true}, {2, true}};
  } else {
    lv = {{3, true}, {3, true}, {2, true}};
  }
  return lv;
}

inline std::vector<Condition> de_conditions(const std::vector<Level>& levels, const GR& t0) {
  std::vector<Condition> out;
  for (std::size_t j = 0; j < levels.size(); ++j) {
    Level lv = levels[j];
    Values root = [t0, j, lv](const CoefficientTable& t) -> std::optional<std::vector<GR>> {
      auto f = aligned_level(t, t0, j);
      if (!f) return std::nullopt;
      auto c = binary_cubic(*f);
      if (j == 0) {
        UPoly u({c[0], c[1], c[2], c[3]});
        std::vector<GR> v;
        for (unsigned k = 0; k < lv.mult; ++k) {
          v.push_back(u.eval(t0));
          u = u.derivative();
        }
        return v;
      }
      if (lv.mult == 3) return triple_root_values(*f, c);
      return std::vector<GR>{cubic_discriminant(c)};
    };
    out.push_back({"multiple root at level " + std::to_string(j), root,
                   j == 0 ? std::vector<int>{b0, beta2, rho2} : std::vector<int>{}});
    if (!lv.rank_one) continue;
    Values rank = [t0, j](const CoefficientTable& t) -> std::optional<std::vector<GR>> {
      auto f = raw_level(t, t0, j + 1);
      if (!f) return std::nullopt;
      return rank_one_minors(*f);
    };
    out.push_back({"rank-1 cone at level " + std::to_string(j + 1), rank,
                   j == 0 ? std::vector<int>{c0} : std::vector<int>{}});
  }
  return out;
}

inline bool all_zero(const std::vector<GR>& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

inline std::optional<std::vector<GR>> eval_upto(const std::vector<Condition>& conds, std::size_t i,
                                                const CoefficientTable& t) {
  std::vector<GR> v;
  for (std::size_t j = 0; j <= i; ++j) {
    auto c = conds[j].eval(t);
    if (!c) return std::nullopt;
    v.insert(v.end(), c->begin(), c->end());
  }
  return v;
}

inline bool holds_upto(const std::vector<Condition>& conds, std::size_t i, const CoefficientTable& t) {
  auto v = eval_upto(conds, i, t);
  return v && all_zero(*v);
}

// Fallback for a condition quadratic in one coefficient with a root in Q(i).
inline bool solve_quadratic(CoefficientTable& t, std::vector<bool>& solved, const std::vector<Condition>& conds,
                            std::size_t i, const std::vector<int>& order) {
  for (int k : order) {
    GR saved = t[k];
    std::array<std::vector<GR>, 4> probe;
    bool ok = true;
    for (long s = 0; s < 4 && ok; ++s) {
      t[k] = GR(s);
      auto v = eval_upto(conds, i, t);
      ok = v.has_value();
      if (ok) probe[s] = *v;
    }
    t[k] = saved;
    if (!ok) continue;
    std::size_t r = 0;
    while (r < probe[0].size() && probe[0][r].is_zero() && probe[1][r].is_zero() && probe[2][r].is_zero()) ++r;
    if (r == probe[0].size()) continue;
    // g(s) = e0 + e1 s + e2 s^2 from forward differences
    GR d1 = probe[1][r] - probe[0][r], d2 = probe[2][r] - probe[1][r];
    GR e2 = (d2 - d1) * GR(make_rational(1, 2)), e1 = d1 - e2, e0 = probe[0][r];
    if (e2.is_zero() || probe[3][r] != e0 + GR(3) * e1 + GR(9) * e2) continue;
    auto root = sqrt_if_exists(e1 * e1 - GR(4) * e0 * e2);
    if (!root) continue;
    for (GR sign : {GR(1), GR(-1)}) {
      t[k] = (-e1 + sign * *root) / (GR(2) * e2);
      if (holds_upto(conds, i, t)) {
        solved[k] = true;
        return true;
      }
    }
    t[k] = saved;
  }
  return false;
}

// Solves each condition, jointly with the earlier ones, for coefficients in which all of them are affine.
inline bool solve(CoefficientTable& t, const std::vector<bool>& locked, const std::vector<Condition>& conds,
                  SmallRationals& rnd) {
  std::vector<bool> solved(kCoefCount, false);
  for (std::size_t i = 0; i < conds.size(); ++i) {
    auto g0 = eval_upto(conds, i, t);
    if (!g0) return false;
    const std::vector<GR>& g = *g0;
    if (all_zero(g)) continue;
    std::vector<int> order;
    for (int k : conds[i].preferred)
      if (!locked[k]) order.push_back(k);
    std::vector<int> fresh, used;
    for (int k = 0; k < kCoefCount; ++k)
      if (!locked[k] && std::find(order.begin(), order.end(), k) == order.end()) (solved[k] ? used : fresh).push_back(k);
    for (std::size_t k = fresh.size(); k > 1; --k)
      std::swap(fresh[k - 1], fresh[rnd.uniform(0, static_cast<long>(k) - 1)]);
    order.insert(order.end(), fresh.begin(), fresh.end());
    order.insert(order.end(), used.begin(), used.end());

    const std::size_t m = g.size();
    std::vector<int> chosen;
    std::vector<std::vector<GR>> cols;
    auto rank = [&](bool with_rhs) {
      Matrix M(m, cols.size() + (with_rhs ? 1 : 0));
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) M(r, c) = cols[c][r];
        if (with_rhs) M(r, cols.size()) = g[r];
      }
      return M.rank();
    };
    bool solvable = false;
    for (int k : order) {
      GR saved = t[k];
      std::array<std::vector<GR>, 3> probe;
      bool ok = true;
      for (long s = 0; s < 3 && ok; ++s) {
        t[k] = saved + GR(s);
        auto v = eval_upto(conds, i, t);
        ok = v.has_value();
        if (ok) probe[s] = *v;
      }
      t[k] = saved;
      if (!ok) continue;
      std::vector<GR> slope(m);
      bool affine = true;
      for (std::size_t r = 0; r < m && affine; ++r) {
        slope[r] = probe[1][r] - probe[0][r];
        affine = probe[2][r] - probe[1][r] == slope[r];
      }
      if (!affine || all_zero(slope)) continue;
      std::size_t before = rank(false);
      cols.push_back(slope);
      if (rank(false) == before) {
        cols.pop_back();
        continue;
      }
      chosen.push_back(k);
      if (rank(true) == rank(false)) {
        solvable = true;
        break;
      }
    }
    if (!solvable) {
      if (!solve_quadratic(t, solved, conds, i, order)) return false;
      continue;
    }
    Matrix M(m, cols.size() + 1);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < cols.size(); ++c) M(r, c) = cols[c][r];
      M(r, cols.size()) = -g[r];
    }
    auto piv = M.rref();
    for (std::size_t r = 0; r < piv.size(); ++r) t[chosen[piv[r]]] += M(r, cols.size());
    for (int k : chosen) solved[k] = true;
    if (!holds_upto(conds, i, t)) return false;
  }
  return true;
}

inline std::vector<int> specialization_zeros(const TypeTag& target, const Weight& w) {
  return cumulative_zeros(target.family == Family::A ? table_conditions_a() : table_conditions_de(), w);
}

}  // namespace gen

inline bool specialization_allowed(const TypeTag& target, const Weight& w) {
  for (const auto& row : table_vp_weights())
    if (row.type == target) {
      for (const auto& c : row.colored)
        if (c == w) return true;
      for (const auto& b : row.black)
        if (b == w) return true;
    }
  return false;
}

inline constexpr int kMaxRetries = 64;
// Specialized strata that reject this many draws in a row are treated as empty.
inline constexpr int kStableFailures = 8;

inline NormalizedQuartic generate(const GenSpec& spec) {
  using namespace gen;
  const TypeTag& T = spec.target;
  if (!supported_target(T)) throw GenerationFailed("unsupported target " + T.to_string());
  if (spec.specialize && !specialization_allowed(T, spec.weight))
    throw GenerationFailed("weight is not listed for " + T.to_string() + " in the vp tables");
  std::uint64_t mix = spec.seed * 0x9E3779B97F4A7C15ull ^ (static_cast<std::uint64_t>(T.family_char()) << 40) ^
                      (static_cast<std::uint64_t>(T.index) << 32) ^
                      (spec.specialize ? static_cast<std::uint64_t>(spec.weight[1] * 16 + spec.weight[2]) << 48 : 0);
  SmallRationals rnd(mix);
  std::string last_failure = "no draw satisfied the constraints";
  int failures = 0, attempts = 0;
  auto fail = [&](std::string why) {
    ++failures;
    last_failure = std::move(why);
  };

  const bool de = T.family != Family::A;
  std::vector<Level> levels = de ? de_levels(T) : std::vector<Level>{};

  for (; attempts < kMaxRetries; ++attempts) {
    if (spec.specialize && failures >= kStableFailures) break;
    CoefficientTable t;
    for (int k = 0; k < kCoefCount; ++k) t[k] = rnd.nonzero();
    std::vector<bool> locked(kCoefCount, false);
    Polynomial A;
    if (T.family == Family::A && T.index == 1) A = x(1) * x(1) + x(2) * x(3);
    else A = de ? x(3) * x(3) : x(2) * x(3);

    if (spec.specialize)
      for (int k : specialization_zeros(T, spec.weight)) {
        t[k] = GR();
        locked[k] = true;
      }

    std::vector<Condition> conds;
    if (!de) {
      if (T.index >= 2) conds = a_conditions(T.exact ? T.index : 8);
    } else {
      conds = de_conditions(levels, GR());
    }
    if (!solve(t, locked, conds, rnd)) {
      fail("constraints could not be solved linearly");
      continue;
    }
    NormalizedQuartic q = quartic_from_table(A, t);
    if (de && !spec.specialize) {
      // Move the multiple root of p1 off the coordinate point.
      Polynomial shear = x(2) + rnd.nonzero() * x(1);
      q.B = substitute(q.B, 2, shear);
      q.C = substitute(q.C, 2, shear);
    }
    try {
      Classification c = classify(q);
      if (c.tag != T) {
        fail("draw classified as " + c.tag.to_string());
        continue;
      }
      if (spec.specialize && !analyze_weight(q, spec.weight[1], spec.weight[2]).vp) {
        fail("specialized draw is not volume preserving for the requested weight");
        continue;
      }
    } catch (const Error& e) {
      fail(e.what());
      continue;
    }
    return q;
  }
  throw GenerationFailed("generation failed for " + spec.to_string() + " after " + std::to_string(attempts) +
                         " attempts: " + last_failure);
}

struct CorpusEntry {
  GenSpec spec;
  std::string source;  // "generated" or a fixture name
  NormalizedQuartic quartic;
};

struct CorpusFailure {
  GenSpec spec;
  std::string reason;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  std::vector<CorpusFailure> failures;
};

inline std::vector<TypeTag> supported_targets() {
  std::vector<TypeTag> out;
  for (int n = 1; n <= 7; ++n) out.push_back(TypeTag::A(n));
  out.push_back(TypeTag::A(8));
  for (int n = 4; n <= 10; ++n) out.push_back(TypeTag::D(n));
  for (int n = 6; n <= 8; ++n) out.push_back(TypeTag::E(n));
  return out;
}

// Generated rows in table order; the Kato-Naruki quartic is appended when fixtures are given.
inline Corpus corpus(std::uint64_t seed, int seeds_per_row = 3, const std::filesystem::path& fixtures = {}) {
  Corpus c;
  auto add = [&](const GenSpec& s) {
    try {
      c.entries.push_back({s, "generated", generate(s)});
    } catch (const GenerationFailed& e) {
      c.failures.push_back({s, e.what()});
    }
  };
  for (const TypeTag& T : supported_targets()) {
    for (int k = 0; k < seeds_per_row; ++k) add({T, false, {1, 1, 1}, seed * 1000 + static_cast<std::uint64_t>(k)});
    for (const auto& row : table_vp_weights()) {
      if (row.type != T) continue;
      for (const auto& w : row.colored)
        for (int k = 0; k < seeds_per_row; ++k) add({T, true, w, seed * 1000 + static_cast<std::uint64_t>(k)});
    }
  }
  if (!fixtures.empty())
    c.entries.push_back({{TypeTag::A(8), false, {1, 1, 1}, 0}, "kato_naruki", load_a19(fixtures).quartic});
  return c;
}

}  // namespace duval
