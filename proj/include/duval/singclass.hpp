#pragma once

#include <string>
#include <vector>

#include "duval/quartic.hpp"

namespace duval {

enum class Family { A, D, E };

struct TypeTag {
  Family family = Family::A;
  int index = 1;
  bool exact = true;

  static TypeTag A(int n) { return n >= 8 ? TypeTag{Family::A, 8, false} : TypeTag{Family::A, n, true}; }
  static TypeTag D(int n) { return n >= 11 ? TypeTag{Family::D, 11, false} : TypeTag{Family::D, n, true}; }
  static TypeTag E(int n) { return TypeTag{Family::E, n, true}; }

  bool valid() const {
    switch (family) {
      case Family::A: return exact ? (index >= 1 && index <= 7) : index == 8;
      case Family::D: return exact ? (index >= 4 && index <= 10) : index == 11;
      case Family::E: return exact && index >= 6 && index <= 8;
    }
    return false;
  }

  char family_char() const { return family == Family::A ? 'A' : family == Family::D ? 'D' : 'E'; }

  std::string to_string() const { return std::string(1, family_char()) + (exact ? "" : ">=") + std::to_string(index); }

  friend bool operator==(const TypeTag&, const TypeTag&) = default;
  friend auto operator<=>(const TypeTag&, const TypeTag&) = default;
};

inline TypeTag parse_type_tag(std::string_view s) {
  if (s.empty()) throw ParseError("empty type tag", 0);
  TypeTag t;
  switch (s[0]) {
    case 'A': t.family = Family::A; break;
    case 'D': t.family = Family::D; break;
    case 'E': t.family = Family::E; break;
    default: throw ParseError("unknown singularity family", 0);
  }
  std::size_t p = 1;
  if (s.substr(1, 2) == ">=") {
    t.exact = false;
    p = 3;
  }
  try {
    t.index = std::stoi(std::string(s.substr(p)));
  } catch (const std::exception&) {
    throw ParseError("bad type index", p);
  }
  if (!t.valid()) throw ParseError("unsupported type " + std::string(s), 0);
  return t;
}

struct CertEntry {
  std::string name;
  GaussianRational value;
  std::string verdict;
};

struct Certificate {
  std::vector<CertEntry> entries;
  int steps = 0;                    // point blowups implied by the deciding criterion (A chain)
  std::vector<std::string> descent;  // types met along the D/E refinement, outermost first

  void add(std::string name, GaussianRational value, std::string verdict) {
    entries.push_back({std::move(name), std::move(value), std::move(verdict)});
  }
  const CertEntry* find(std::string_view name) const {
    for (const auto& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  }
};

struct Classification {
  TypeTag tag;
  Certificate cert;
};

// ---------------------------------------------------------------------------
// A chain

namespace detail {

inline GR binary3(const CoefficientTable& t, int first, const GR& u, const GR& v) {
  // sum_i t[first+i] u^(3-i) v^i
  GR acc;
  for (int i = 0; i <= 3; ++i) acc += t[first + i] * u.pow(3 - i) * v.pow(i);
  return acc;
}

inline GR binary4(const CoefficientTable& t, const GR& u, const GR& v) {
  GR acc;
  for (int i = 0; i <= 4; ++i) acc += t[lambda0 + i] * u.pow(4 - i) * v.pow(i);
  return acc;
}

inline GR binary2(const GR& p, const GR& q, const GR& r, const GR& u, const GR& v) { return p * u * u + q * u * v + r * v * v; }

}  // namespace detail

struct AQuantities {
  GR star1, star2, zeta, xi2, xi3, alpha, star4, omega, eta, theta, gamma2, gamma3, mu, star6;
};

inline AQuantities a_quantities(const CoefficientTable& t) {
  using detail::binary2;
  using detail::binary3;
  using detail::binary4;
  const GR &B2 = t[beta2], &B3 = t[beta3];
  const GR &R2 = t[rho2], &R23 = t[rho23], &R3 = t[rho3];
  const GR &S0 = t[sigma0], &S1 = t[sigma1], &S2 = t[sigma2], &S3 = t[sigma3];
  const GR &E2 = t[eps2], &E23 = t[eps23], &E3 = t[eps3];
  const GR &T0 = t[tau0], &T1 = t[tau1], &T2 = t[tau2], &T3 = t[tau3];
  const GR two(2), three(3);
  AQuantities a;
  a.star1 = t[b0];
  a.star2 = t[c0] - B2 * B3;
  a.zeta = R2 * B3 * B3 + R23 * B2 * B3 + R3 * B2 * B2 - t[delta2] * B3 - t[delta3] * B2;
  a.xi2 = -two * R2 * B3 - R23 * B2 + t[delta2];
  a.xi3 = -two * R3 * B2 - R23 * B3 + t[delta3];
  a.alpha = -binary3(t, sigma0, B3, B2) + binary2(E2, E23, E3, B3, B2);
  a.star4 = a.xi2 * a.xi3 - a.alpha;
  const GR &X2 = a.xi2, &X3 = a.xi3;
  a.omega = -three * S0 * X3 * B3 * B3 + S1 * (-two * X3 * B2 * B3 - X2 * B3 * B3) +
            S2 * (-X3 * B2 * B2 - two * X2 * B2 * B3) - three * S3 * X2 * B2 * B2;
  a.eta = two * E2 * X3 * B3 + E23 * X3 * B2 + E23 * X2 * B3 + two * E3 * X2 * B2;
  a.theta = binary2(R2, R23, R3, X3, X2) + a.omega + a.eta - binary3(t, tau0, B3, B2);
  a.gamma2 = -two * R2 * X3 - R23 * X2 + three * S0 * B3 * B3 + two * S1 * B2 * B3 + S2 * B2 * B2 - two * E2 * B3 -
             E23 * B2;
  a.gamma3 = -R23 * X3 - two * R3 * X2 + three * S3 * B2 * B2 + two * S2 * B2 * B3 + S1 * B3 * B3 - two * E3 * B2 -
             E23 * B3;
  a.mu = -three * S0 * B3 * X3 * X3 - three * S3 * B2 * X2 * X2 - two * S1 * B3 * X2 * X3 - two * S2 * B2 * X2 * X3 -
         S1 * X3 * X3 * B2 - S2 * X2 * X2 * B3 + E2 * X3 * X3 + E23 * X2 * X3 + E3 * X2 * X2 -
         three * T0 * B3 * B3 * X3 - three * T3 * B2 * B2 * X2 + T1 * (-two * B2 * B3 * X3 - B3 * B3 * X2) +
         T2 * (-X3 * B2 * B2 - two * B2 * B3 * X2) + binary4(t, B3, B2);
  a.star6 = a.gamma2 * a.gamma3 - a.mu;
  return a;
}

inline Classification classify_a(const NormalizedQuartic& q) {
  if (q.A != x(2) * x(3)) throw GeometryError("classify_a expects the tangent cone x2*x3");
  CoefficientTable t = coefficients(q);
  AQuantities a = a_quantities(t);
  Classification r;
  auto& c = r.cert;
  auto decide = [&](int n, int steps) {
    r.tag = TypeTag::A(n);
    c.steps = steps;
    return r;
  };
  c.add("rank", GR(2), "A>=2");
  c.add("(*1) b0", a.star1, a.star1.is_zero() ? "holds" : "fails: A2");
  if (!a.star1.is_zero()) return decide(2, 1);
  c.add("(*2) c0 - beta2*beta3", a.star2, a.star2.is_zero() ? "holds" : "fails: A3");
  if (!a.star2.is_zero()) return decide(3, 2);
  c.add("(*3) zeta", a.zeta, a.zeta.is_zero() ? "holds" : "fails: A4");
  if (!a.zeta.is_zero()) return decide(4, 2);
  c.add("xi2", a.xi2, "");
  c.add("xi3", a.xi3, "");
  c.add("alpha", a.alpha, "");
  c.add("(*4) xi2*xi3 - alpha", a.star4, a.star4.is_zero() ? "holds" : "fails: A5");
  if (!a.star4.is_zero()) return decide(5, 3);
  c.add("omega", a.omega, "");
  c.add("eta", a.eta, "");
  c.add("(*5) theta", a.theta, a.theta.is_zero() ? "holds" : "fails: A6");
  if (!a.theta.is_zero()) return decide(6, 3);
  c.add("gamma2", a.gamma2, "");
  c.add("gamma3", a.gamma3, "");
  c.add("mu", a.mu, "");
  c.add("gamma2*gamma3 - mu", a.star6, a.star6.is_zero() ? "holds: A>=8" : "fails: A7");
  return decide(a.star6.is_zero() ? 8 : 7, 4);
}

// ---------------------------------------------------------------------------
// local chart machinery shared by the D/E refinement

inline Polynomial local_change(const Polynomial& f, const Matrix& N3) {
  Matrix N = Matrix::identity(4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) N(i + 1, j + 1) = N3(i, j);
  return apply_linear(f, N);
}

// Point blowup chart where variable e is exceptional, centered at the chart point
// whose remaining affine coordinate u equals t.
inline Polynomial point_chart(const Polynomial& f, int e, int u, const GR& t) {
  Images im = identity_images();
  for (int v = 1; v <= 3; ++v) {
    if (v == e) continue;
    Polynomial img = x(v);
    if (v == u && !t.is_zero()) img += Polynomial(t);
    im[v] = x(e) * img;
  }
  Polynomial g = substitute(f, im);
  return divide_var_power(g, e, var_power_content(g, e));
}

enum class Coarse { D4, Dgt4, E };

struct CubicData {
  UPoly p1, p2;
  int d1 = 0;
  Coarse coarse = Coarse::D4;
  // W1 hosts the multiple root at x2 = t, W2 hosts it at x1 = t.
  int chart = 0;
  GR root;
  unsigned multiplicity = 1;
};

// Root structure of f3(x1, x2, 0), a binary cubic on the exceptional line.
inline CubicData cubic_data(const Polynomial& f3) {
  CubicData d;
  std::vector<GR> c1(4), c2(4);
  for (const auto& [m, a] : f3.terms()) {
    if (m[3] != 0) continue;
    c1[m[2]] += a;
    c2[m[1]] += a;
  }
  d.p1 = UPoly(c1);
  d.p2 = UPoly(c2);
  if (d.p1.is_zero()) throw NonNormalInput("p1 vanishes identically: the surface is singular along a curve");
  d.d1 = d.p1.degree();
  if (auto r = multiple_root(d.p1)) {
    d.chart = 1;
    d.root = r->root;
    d.multiplicity = r->multiplicity;
  } else if (3 - d.d1 >= 2) {
    auto r2 = multiple_root(d.p2);
    d.chart = 2;
    d.root = r2 ? r2->root : GR();
    d.multiplicity = static_cast<unsigned>(3 - d.d1);
  }
  d.coarse = d.multiplicity == 3 ? Coarse::E : d.multiplicity == 2 ? Coarse::Dgt4 : Coarse::D4;
  return d;
}

// Local equation at the non-A1 point of the first blowup, origin-centered.
inline Polynomial descend(const Polynomial& f, const CubicData& d) {
  return d.chart == 1 ? point_chart(f, 1, 2, d.root) : point_chart(f, 2, 1, d.root);
}

struct LocalType {
  Family family = Family::A;
  int index = 1;
  bool exact = true;
  std::vector<std::string> chain;

  std::string name() const {
    std::string f(1, family == Family::A ? 'A' : family == Family::D ? 'D' : 'E');
    return f + (exact ? "" : ">=") + std::to_string(index);
  }
};

inline constexpr int kMaxADescents = 16;
inline constexpr int kMaxDEDepth = 4;

// Rank-2 cone: move the kernel line to the x1-axis. Rank-1 cone: move the double plane to x3 = 0.
inline Polynomial align_cone(const Polynomial& f, const Polynomial& Q, int rank) {
  Matrix G = gram_matrix(Q);
  if (rank == 2) {
    auto ker = G.kernel();
    const auto& v = ker.at(0);
    Matrix N(3, 3);
    for (int i = 0; i < 3; ++i) N(i, 0) = v[i];
    int pivot = 0;
    while (v[pivot].is_zero()) ++pivot;
    int col = 1;
    for (int j = 0; j < 3; ++j)
      if (j != pivot) N(j, col++) = GR(1);
    return local_change(f, N);
  }
  int j = 0;
  while (G(j, j).is_zero()) ++j;
  Linear m{G(j, 0), G(j, 1), G(j, 2)};
  m = scaled(m, leading_coeff(m).inverse());
  int pivot = 0;
  while (m[pivot].is_zero()) ++pivot;
  Linear r1{}, r2{};
  int k = 0;
  for (int c = 0; c < 3; ++c) {
    if (c == pivot) continue;
    (k++ == 0 ? r1 : r2)[c] = GR(1);
  }
  Matrix T(3, 3);
  for (int c = 0; c < 3; ++c) {
    T(0, c) = r1[c];
    T(1, c) = r2[c];
    T(2, c) = m[c];
  }
  return local_change(f, *T.inverse());
}

inline LocalType local_type(const Polynomial& f, int depth = 0);

namespace detail {

inline LocalType a_chain(Polynomial f) {
  for (int k = 0; k < kMaxADescents; ++k) {
    f = align_cone(f, homogeneous_component(f, 2), 2);
    f = point_chart(f, 1, 2, GR());
    unsigned ord = order_at_origin(f);
    if (ord == 1) return {Family::A, 2 + 2 * k, true, {}};
    if (ord != 2) throw GeometryError("singularity is not canonical (order " + std::to_string(ord) + " after blowup)");
    int r = quadric_rank(homogeneous_component(f, 2));
    if (r == 3) return {Family::A, 3 + 2 * k, true, {}};
    if (r == 1) throw GeometryError("singularity is not canonical (A chain meets a rank-1 cone)");
  }
  return {Family::A, 2 + 2 * kMaxADescents, false, {}};
}

inline LocalType lift(const CubicData& d, const LocalType& child) {
  LocalType r;
  r.chain = child.chain;
  if (d.coarse == Coarse::Dgt4) {
    r.family = Family::D;
    r.exact = child.exact;
    if (child.family == Family::A && child.index == 3 && child.exact) r.index = 5;
    else if (child.family == Family::D) r.index = child.index + 2;
    else throw GeometryError("singularity is not canonical (D branch descends to " + child.name() + ")");
    return r;
  }
  r.family = Family::E;
  if (child.family == Family::A && child.index == 5 && child.exact) r.index = 6;
  else if (child.family == Family::D && child.index == 6 && child.exact) r.index = 7;
  else if (child.family == Family::E && child.index == 7) r.index = 8;
  else throw GeometryError("singularity is not canonical (E branch descends to " + child.name() + ")");
  return r;
}

inline LocalType de_local(Polynomial f, int depth) {
  f = align_cone(f, homogeneous_component(f, 2), 1);
  CubicData d = cubic_data(homogeneous_component(f, 3));
  if (d.coarse == Coarse::D4) return {Family::D, 4, true, {"D4"}};
  if (depth >= kMaxDEDepth) {
    if (d.coarse == Coarse::Dgt4) return {Family::D, 5, false, {"D>=5"}};
    throw GeometryError("E-type refinement exceeded the recursion cap");
  }
  LocalType child = local_type(descend(f, d), depth + 1);
  LocalType r = lift(d, child);
  r.chain.insert(r.chain.begin(), r.name());
  return r;
}

}  // namespace detail

// Type of an isolated surface singularity at the origin of the affine chart x1, x2, x3.
inline LocalType local_type(const Polynomial& f, int depth) {
  if (!f.constant_term().is_zero()) throw GeometryError("origin is not on the surface");
  unsigned ord = order_at_origin(f);
  if (ord == 1) throw GeometryError("origin is a smooth point");
  if (ord >= 3) throw GeometryError("singularity is not canonical (multiplicity " + std::to_string(ord) + ")");
  Polynomial Q = homogeneous_component(f, 2);
  int r = quadric_rank(Q);
  LocalType t;
  if (r == 3) t = {Family::A, 1, true, {}};
  else if (r == 2) t = detail::a_chain(f);
  else return detail::de_local(f, depth);
  t.chain = {t.name()};
  return t;
}

// ---------------------------------------------------------------------------
// D/E criteria

struct CoarseResult {
  Coarse coarse;
  Certificate cert;
};

inline CoarseResult classify_de(const NormalizedQuartic& q) {
  if (q.A != x(3) * x(3)) throw GeometryError("classify_de expects the tangent cone x3^2");
  CoefficientTable t = coefficients(q);
  const GR &B0 = t[b0], &B2 = t[beta2], &R2 = t[rho2], &S0 = t[sigma0];
  CoarseResult out;
  auto& c = out.cert;
  c.add("rank", GR(1), "D-E");
  if (B0.is_zero() && B2.is_zero() && R2.is_zero() && S0.is_zero())
    throw NonNormalInput("p1 = b0 + beta2*t + rho2*t^2 + sigma0*t^3 vanishes: D1 is singular along E1 and D is not normal");
  int d1 = !S0.is_zero() ? 3 : !R2.is_zero() ? 2 : !B2.is_zero() ? 1 : 0;
  c.add("d1", GR(d1), "deg p1");
  if (d1 == 3) {
    GR r1 = (GR(3) * S0 * B2 - R2 * R2) / (GR(3) * S0 * S0);
    GR s1 = (GR(2) * R2.pow(3) - GR(9) * S0 * R2 * B2 + GR(27) * S0 * S0 * B0) / (GR(27) * S0.pow(3));
    GR delta = -(GR(4) * r1.pow(3) + GR(27) * s1 * s1);
    c.add("r1", r1, "");
    c.add("s1", s1, "");
    out.coarse = !delta.is_zero() ? Coarse::D4 : !r1.is_zero() ? Coarse::Dgt4 : Coarse::E;
    c.add("Delta1", delta,
          out.coarse == Coarse::D4 ? "nonzero: D4" : out.coarse == Coarse::Dgt4 ? "zero, r1 nonzero: D>4" : "zero, r1 zero: E");
  } else if (d1 == 2) {
    GR disc = B2 * B2 - GR(4) * R2 * B0;
    out.coarse = disc.is_zero() ? Coarse::Dgt4 : Coarse::D4;
    c.add("beta2^2 - 4*rho2*b0", disc, disc.is_zero() ? "zero: D>4" : "nonzero: D4");
  } else if (d1 == 1) {
    out.coarse = Coarse::Dgt4;
    c.add("beta2", B2, "d1 = 1: D>4");
  } else {
    out.coarse = Coarse::E;
    c.add("b0", B0, "d1 = 0: E");
  }
  return out;
}

inline Classification refine_de(const NormalizedQuartic& q, const CoarseResult& coarse) {
  Classification r;
  r.cert = coarse.cert;
  if (coarse.coarse == Coarse::D4) {
    r.tag = TypeTag::D(4);
    r.cert.descent = {"D4"};
    return r;
  }
  Polynomial f = q.affine();
  CubicData d = cubic_data(q.B);
  if (d.coarse != coarse.coarse) throw ConsistencyViolation("root structure of p1 disagrees with the discriminant criteria");
  r.cert.add(d.chart == 1 ? "multiple root of p1 (chart W1)" : "multiple root of p2 (chart W2)", d.root,
             "multiplicity " + std::to_string(d.multiplicity));
  LocalType child = local_type(descend(f, d), 1);
  LocalType lifted = detail::lift(d, child);
  lifted.chain.insert(lifted.chain.begin(), lifted.name());
  for (std::size_t k = 1; k < lifted.chain.size(); ++k)
    r.cert.add("descent " + std::to_string(k), GR(static_cast<long>(k)), lifted.chain[k]);
  r.cert.descent = lifted.chain;
  r.tag = lifted.family == Family::D ? (lifted.exact ? TypeTag::D(lifted.index) : TypeTag::D(11))
                                     : TypeTag::E(lifted.index);
  if (r.tag.family == Family::D && !r.tag.exact && !r.cert.descent.empty()) r.cert.descent[0] = r.tag.to_string();
  return r;
}

struct NormalizedClassification {
  Classification result;
  NormalizedQuartic normal;
};

inline NormalizedClassification classify_full(const NormalizedQuartic& q) {
  int rank = tangent_cone_rank(q);
  if (rank == 3) {
    Classification r;
    r.tag = TypeTag::A(1);
    r.cert.add("rank", GR(3), "A1");
    r.cert.steps = 1;
    return {r, q};
  }
  NormalizedQuartic nq = normal_form(q).first;
  check_reducibility(nq);
  if (rank == 2) return {classify_a(nq), nq};
  return {refine_de(nq, classify_de(nq)), nq};
}

inline Classification classify(const NormalizedQuartic& q) { return classify_full(q).result; }

// Reevaluates every recorded criterion value; true iff all agree.
inline bool replay_certificate(const NormalizedQuartic& q, const Classification& c) {
  Classification again = classify(q);
  if (again.tag != c.tag || again.cert.entries.size() != c.cert.entries.size()) return false;
  for (std::size_t k = 0; k < c.cert.entries.size(); ++k) {
    const auto& a = c.cert.entries[k];
    const auto& b = again.cert.entries[k];
    if (a.name != b.name || !(a.value == b.value) || a.verdict != b.verdict) return false;
  }
  return true;
}

}  // namespace duval
