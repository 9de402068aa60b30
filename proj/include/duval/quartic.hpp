#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "duval/linalg.hpp"
#include "duval/poly.hpp"

namespace duval {

struct NormalizedQuartic {
  Polynomial A, B, C;            // forms of degree 2, 3, 4 in x1, x2, x3
  Matrix change = Matrix::identity(4);  // F_norm(x) = scale * F_orig(change * x)
  GaussianRational scale{1};

  Polynomial F() const {
    Polynomial x0 = x(0);
    return x0 * x0 * A + x0 * B + C;
  }
  Polynomial affine() const { return A + B + C; }
};

// Substitution of x_i by sum_j M(i,j) x_j.
inline Polynomial apply_linear(const Polynomial& f, const Matrix& m) {
  Images im;
  for (int i = 0; i < kVars; ++i) {
    Polynomial row;
    for (int j = 0; j < kVars; ++j) row += Polynomial::term(Monomial::unit(j), m(i, j));
    im[i] = row;
  }
  return substitute(f, im);
}

inline void require_quartic(const Polynomial& F) {
  if (F.is_zero() || F.degree() != 4 || !is_homogeneous(F))
    throw GeometryError("input is not a homogeneous quartic");
}

// Affine input (no x0) is read in the chart x0 = 1.
inline Polynomial as_projective_quartic(const Polynomial& f) {
  if (!f.is_zero() && f.degree_in(0) == 0 && !(is_homogeneous(f) && f.degree() == 4)) {
    if (f.degree() > 4) throw GeometryError("affine input has degree above 4");
    return homogenize(f, 0, 4);
  }
  return f;
}

inline NormalizedQuartic split_at_origin(const Polynomial& F) {
  NormalizedQuartic q;
  require_quartic(F);
  Polynomial c4, c3;
  for (const auto& [m, c] : F.terms()) {
    Monomial n = m;
    n[0] = 0;
    switch (m[0]) {
      case 4: c4.add_term(n, c); break;
      case 3: c3.add_term(n, c); break;
      case 2: q.A.add_term(n, c); break;
      case 1: q.B.add_term(n, c); break;
      default: q.C.add_term(n, c); break;
    }
  }
  if (!c4.is_zero()) throw GeometryError("point is not on the surface");
  if (!c3.is_zero()) throw GeometryError("point is nonsingular");
  if (q.A.is_zero()) throw GeometryError("point has multiplicity at least 3 (worse than canonical)");
  return q;
}

inline NormalizedQuartic normalize_at_point(const Polynomial& F, const std::array<GaussianRational, 4>& P) {
  require_quartic(F);
  int pivot = -1;
  for (int i = 0; i < 4 && pivot < 0; ++i)
    if (!P[i].is_zero()) pivot = i;
  if (pivot < 0) throw GeometryError("(0:0:0:0) is not a projective point");
  if (!evaluate(F, P).is_zero()) throw GeometryError("point is not on the surface");
  Matrix M(4, 4);
  for (int i = 0; i < 4; ++i) M(i, 0) = P[i];
  int col = 1;
  for (int j = 0; j < 4; ++j)
    if (j != pivot) M(j, col++) = GaussianRational(1);
  NormalizedQuartic q = split_at_origin(apply_linear(F, M));
  q.change = M;
  return q;
}

inline NormalizedQuartic normalize_at_point(const Polynomial& F) {
  return normalize_at_point(F, {GaussianRational(1), GaussianRational(0), GaussianRational(0), GaussianRational(0)});
}

// Symmetric Gram matrix of a quadratic form in x1, x2, x3.
inline Matrix gram_matrix(const Polynomial& A) {
  Matrix G(3, 3);
  GaussianRational half = GaussianRational(make_rational(1, 2));
  for (const auto& [m, c] : A.terms()) {
    if (m.degree() != 2 || m[0] != 0) throw GeometryError("tangent cone is not a quadratic form in x1, x2, x3");
    int v[2], k = 0;
    for (int i = 1; i <= 3; ++i)
      for (unsigned e = 0; e < m[i]; ++e) v[k++] = i - 1;
    if (v[0] == v[1]) G(v[0], v[0]) += c;
    else {
      G(v[0], v[1]) += half * c;
      G(v[1], v[0]) += half * c;
    }
  }
  return G;
}

inline int quadric_rank(const Polynomial& A) { return static_cast<int>(gram_matrix(A).rank()); }

inline int tangent_cone_rank(const NormalizedQuartic& q) { return quadric_rank(q.A); }

struct TangentConeForm {
  int rank = 0;
  Matrix change = Matrix::identity(4);
};

// Linear forms in x1..x3 as coefficient triples.
using Linear = std::array<GaussianRational, 3>;

inline Polynomial linear_poly(const Linear& l) {
  Polynomial p;
  for (int i = 0; i < 3; ++i) p += Polynomial::term(Monomial::unit(i + 1), l[i]);
  return p;
}

inline GaussianRational leading_coeff(const Linear& l) {
  for (const auto& a : l)
    if (!a.is_zero()) return a;
  return GaussianRational();
}

inline Linear scaled(const Linear& l, const GaussianRational& s) { return {l[0] * s, l[1] * s, l[2] * s}; }

namespace detail {

// N with A(N y) in normal form, given new coordinates y = T x for rows of T.
inline Matrix coordinates_from_rows(const Linear& r1, const Linear& r2, const Linear& r3) {
  Matrix T(3, 3);
  const Linear* rows[3] = {&r1, &r2, &r3};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) T(i, j) = (*rows[i])[j];
  auto inv = T.inverse();
  if (!inv) throw ArithmeticError("coordinate change is singular");
  Matrix N = Matrix::identity(4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) N(i + 1, j + 1) = (*inv)(i, j);
  return N;
}

inline Linear first_complement(const Linear& a, const Linear* b) {
  for (int j = 0; j < 3; ++j) {
    Linear e{};
    e[j] = GaussianRational(1);
    Matrix T(b ? 3 : 2, 3);
    for (int k = 0; k < 3; ++k) {
      T(0, k) = e[k];
      T(1, k) = a[k];
      if (b) T(2, k) = (*b)[k];
    }
    if (T.rank() == (b ? 3u : 2u)) return e;
  }
  throw ArithmeticError("no complementary coordinate");
}

// Binary quadratic N(u, v) of rank <= 1 written lambda * m^2 with m monic.
inline std::pair<GaussianRational, std::pair<GaussianRational, GaussianRational>> rank_one_binary(
    const GaussianRational& uu, const GaussianRational& uv, const GaussianRational& vv) {
  if (!uu.is_zero()) return {uu, {GaussianRational(1), uv / (GaussianRational(2) * uu)}};
  return {vv, {GaussianRational(0), GaussianRational(1)}};
}

// Factor a rank-2 ternary form into two linear forms.
inline std::pair<Linear, Linear> factor_rank_two(const Matrix& G) {
  int j = -1;
  for (int k = 0; k < 3 && j < 0; ++k)
    if (!G(k, k).is_zero()) j = k;
  if (j < 0) {
    // a x1x2 + b x1x3 + c x2x3 with abc = 0.
    GaussianRational a = GaussianRational(2) * G(0, 1), b = GaussianRational(2) * G(0, 2),
                     c = GaussianRational(2) * G(1, 2);
    GaussianRational z;
    if (a.is_zero()) return {Linear{z, z, GaussianRational(1)}, Linear{b, c, z}};
    if (b.is_zero()) return {Linear{z, GaussianRational(1), z}, Linear{a, z, c}};
    return {Linear{GaussianRational(1), z, z}, Linear{z, a, b}};
  }
  int u = (j + 1) % 3, v = (j + 2) % 3;
  if (u > v) std::swap(u, v);
  const GaussianRational& g = G(j, j);
  // g*A = L^2 - N(u, v) with L = g x_j + G_ju x_u + G_jv x_v.
  GaussianRational nuu = G(j, u) * G(j, u) - g * G(u, u);
  GaussianRational nvv = G(j, v) * G(j, v) - g * G(v, v);
  GaussianRational nuv = GaussianRational(2) * (G(j, u) * G(j, v) - g * G(u, v));
  auto [lambda, mono] = rank_one_binary(nuu, nuv, nvv);
  auto s = sqrt_if_exists(lambda);
  if (!s) throw FieldExtensionRequired("tangent cone splits only over an extension of Q(i): sqrt(" +
                                       lambda.to_string() + ") is not in Q(i)");
  Linear L{}, m{};
  L[j] = g;
  L[u] = G(j, u);
  L[v] = G(j, v);
  m[u] = mono.first;
  m[v] = mono.second;
  Linear l1{}, l2{};
  GaussianRational ginv = g.inverse();
  for (int k = 0; k < 3; ++k) {
    l1[k] = (L[k] - *s * m[k]) * ginv;
    l2[k] = L[k] + *s * m[k];
  }
  return {l1, l2};
}

}  // namespace detail

inline std::pair<NormalizedQuartic, TangentConeForm> normal_form(const NormalizedQuartic& q) {
  Matrix G = gram_matrix(q.A);
  int rank = static_cast<int>(G.rank());
  TangentConeForm form;
  form.rank = rank;
  if (rank == 3) return {q, form};
  if (rank == 0) throw GeometryError("tangent cone vanishes");
  Polynomial target = rank == 2 ? x(2) * x(3) : x(3) * x(3);
  if (q.A == target) return {q, form};

  Matrix N;
  GaussianRational rescale(1);
  if (rank == 2) {
    auto [l1, l2] = detail::factor_rank_two(G);
    GaussianRational c1 = leading_coeff(l1), c2 = leading_coeff(l2);
    Linear m1 = scaled(l1, c1.inverse()), m2 = scaled(l2, c2.inverse());
    GaussianRational c = c1 * c2;
    if (m1 < m2) std::swap(m1, m2);
    Linear y2 = scaled(m1, c), y3 = m2;
    N = detail::coordinates_from_rows(detail::first_complement(y2, &y3), y2, y3);
  } else {
    int j = 0;
    while (G(j, j).is_zero()) ++j;
    Linear m{};
    for (int k = 0; k < 3; ++k) m[k] = G(j, k);
    GaussianRational lc = leading_coeff(m);
    m = scaled(m, lc.inverse());
    // A = c m^2 and c is absorbed into the global scale.
    GaussianRational c = G(j, j) / (m[j] * m[j]);
    rescale = c.inverse();
    Linear e1 = detail::first_complement(m, nullptr);
    Linear e2{};
    for (int k = 0; k < 3; ++k) {
      Linear e{};
      e[k] = GaussianRational(1);
      Matrix T(3, 3);
      for (int t = 0; t < 3; ++t) {
        T(0, t) = e1[t];
        T(1, t) = e[t];
        T(2, t) = m[t];
      }
      if (T.rank() == 3) {
        e2 = e;
        break;
      }
    }
    N = detail::coordinates_from_rows(e1, e2, m);
  }
  Polynomial Fn = rescale * apply_linear(q.F(), N);
  NormalizedQuartic out = split_at_origin(Fn);
  if (out.A != target) throw ConsistencyViolation("tangent cone normalization failed");
  out.change = q.change * N;
  out.scale = q.scale * rescale;
  form.change = N;
  return {out, form};
}

// ---------------------------------------------------------------------------
// named coefficients

enum Coef : int {
  b0, beta2, beta3, rho2, rho23, rho3, sigma0, sigma1, sigma2, sigma3,
  c0, delta2, delta3, eps2, eps23, eps3, tau0, tau1, tau2, tau3,
  lambda0, lambda1, lambda2, lambda3, lambda4,
  kCoefCount
};

inline constexpr std::array<std::string_view, kCoefCount> kCoefNames = {
    "b0",   "beta2", "beta3", "rho2", "rho23", "rho3",    "sigma0",  "sigma1",  "sigma2",
    "sigma3", "c0",  "delta2", "delta3", "eps2", "eps23", "eps3",  "tau0", "tau1",
    "tau2", "tau3",  "lambda0", "lambda1", "lambda2", "lambda3", "lambda4"};

// Exponents of (x1, x2, x3) for each named coefficient.
inline constexpr std::array<std::array<unsigned, 3>, kCoefCount> kCoefMonomials = {{
    {3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1}, {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3},
    {4, 0, 0}, {3, 1, 0}, {3, 0, 1}, {2, 2, 0}, {2, 1, 1}, {2, 0, 2}, {1, 3, 0}, {1, 2, 1}, {1, 1, 2}, {1, 0, 3},
    {0, 4, 0}, {0, 3, 1}, {0, 2, 2}, {0, 1, 3}, {0, 0, 4},
}};

inline Monomial coef_monomial(int k) {
  const auto& e = kCoefMonomials[k];
  return Monomial(0, e[0], e[1], e[2]);
}

inline int coef_index(std::string_view name) {
  for (int k = 0; k < kCoefCount; ++k)
    if (kCoefNames[k] == name) return k;
  throw ArithmeticError("unknown coefficient name " + std::string(name));
}

struct CoefficientTable {
  std::array<GaussianRational, kCoefCount> v;

  GaussianRational& operator[](int k) { return v[k]; }
  const GaussianRational& operator[](int k) const { return v[k]; }

  Polynomial B() const {
    Polynomial p;
    for (int k = b0; k <= sigma3; ++k) p.add_term(coef_monomial(k), v[k]);
    return p;
  }
  Polynomial C() const {
    Polynomial p;
    for (int k = c0; k < kCoefCount; ++k) p.add_term(coef_monomial(k), v[k]);
    return p;
  }
  friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;
};

inline bool in_normal_form(const NormalizedQuartic& q) {
  return q.A == x(2) * x(3) || q.A == x(3) * x(3);
}

inline CoefficientTable coefficients(const NormalizedQuartic& q) {
  if (!in_normal_form(q)) throw GeometryError("quartic is not in normal form (A must be x2*x3 or x3^2)");
  CoefficientTable t;
  for (int k = 0; k < kCoefCount; ++k) t[k] = (k < c0 ? q.B : q.C).coeff(coef_monomial(k));
  return t;
}

inline NormalizedQuartic quartic_from_table(const Polynomial& A, const CoefficientTable& t) {
  NormalizedQuartic q;
  q.A = A;
  q.B = t.B();
  q.C = t.C();
  return q;
}

// Divisibility traps: a coordinate plane inside the cone that also divides B and C splits off.
inline bool divides_all(int v, const Polynomial& f) { return f.is_zero() || var_power_content(f, v) >= 1; }

inline void check_reducibility(const NormalizedQuartic& q) {
  for (int v = 1; v <= 3; ++v)
    if (divides_all(v, q.A) && divides_all(v, q.B) && divides_all(v, q.C))
      throw ReducibleInput("x" + std::to_string(v) + " divides A, B and C: the quartic is reducible");
}

}  // namespace duval
