#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "duval/field.hpp"

namespace duval {

constexpr int kVars = 4;

struct Monomial {
  std::array<unsigned, kVars> e{0, 0, 0, 0};

  Monomial() = default;
  Monomial(unsigned e0, unsigned e1, unsigned e2, unsigned e3) : e{e0, e1, e2, e3} {}

  static Monomial unit(int v) {
    Monomial m;
    m.e[v] = 1;
    return m;
  }

  unsigned degree() const { return e[0] + e[1] + e[2] + e[3]; }
  unsigned operator[](int v) const { return e[v]; }
  unsigned& operator[](int v) { return e[v]; }

  friend Monomial operator*(Monomial a, const Monomial& b) {
    for (int v = 0; v < kVars; ++v) a.e[v] += b.e[v];
    return a;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lex, descending: higher degree first, then x0 > x1 > x2 > x3.
struct GrlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.e > b.e;
  }
};

struct WeightVector {
  std::array<long, 3> w{1, 1, 1};

  WeightVector() = default;
  WeightVector(long w1, long w2, long w3) : w{w1, w2, w3} {
    if (w1 <= 0 || w2 <= 0 || w3 <= 0) throw ArithmeticError("weights must be positive");
    if (std::min({w1, w2, w3}) != 1) throw ArithmeticError("weight vector must contain 1");
  }
  long operator[](int i) const { return w[i]; }
  long sum() const { return w[0] + w[1] + w[2]; }
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, GaussianRational, GrlexDesc>;

  Polynomial() = default;
  Polynomial(const GaussianRational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
  }
  Polynomial(long c) : Polynomial(GaussianRational(c)) {}

  static Polynomial var(int v) {
    Monomial m;
    m[v] = 1;
    return term(m, GaussianRational(1));
  }
  static Polynomial term(const Monomial& m, const GaussianRational& c) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0); }

  GaussianRational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational() : it->second;
  }

  GaussianRational constant_term() const { return coeff(Monomial{}); }

  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree()); }

  unsigned degree_in(int v) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
    return d;
  }

  void add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator*(const GaussianRational& s, const Polynomial& p) {
    Polynomial r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : p.terms_) r.terms_.emplace(m, s * c);
    return r;
  }

  friend Polynomial operator*(long s, const Polynomial& p) { return GaussianRational(s) * p; }

  Polynomial pow(unsigned e) const {
    Polynomial r(1), b = *this;
    while (e) {
      if (e & 1u) r *= b;
      e >>= 1u;
      if (e) b *= b;
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

inline Polynomial x(int v) { return Polynomial::var(v); }

// ---------------------------------------------------------------------------
// structural queries

inline bool is_homogeneous(const Polynomial& f) {
  if (f.is_zero()) return true;
  unsigned d = f.terms().begin()->first.degree();
  return std::all_of(f.terms().begin(), f.terms().end(), [d](const auto& t) { return t.first.degree() == d; });
}

inline Polynomial homogeneous_component(const Polynomial& f, unsigned d) {
  Polynomial r;
  for (const auto& [m, c] : f.terms())
    if (m.degree() == d) r.add_term(m, c);
  return r;
}

// Homogeneous component in the variables selected by mask, treating others as coefficients.
inline Polynomial component_in(const Polynomial& f, const std::array<bool, kVars>& mask, unsigned d) {
  Polynomial r;
  for (const auto& [m, c] : f.terms()) {
    unsigned s = 0;
    for (int v = 0; v < kVars; ++v)
      if (mask[v]) s += m[v];
    if (s == d) r.add_term(m, c);
  }
  return r;
}

inline Polynomial partial_derivative(const Polynomial& f, int v) {
  Polynomial r;
  for (const auto& [m, c] : f.terms()) {
    if (m[v] == 0) continue;
    Monomial n = m;
    n[v] -= 1;
    r.add_term(n, c * GaussianRational(static_cast<long>(m[v])));
  }
  return r;
}

inline GaussianRational evaluate(const Polynomial& f, const std::array<GaussianRational, kVars>& pt) {
  GaussianRational acc;
  for (const auto& [m, c] : f.terms()) {
    GaussianRational t = c;
    for (int v = 0; v < kVars; ++v)
      if (m[v]) t *= pt[v].pow(m[v]);
    acc += t;
  }
  return acc;
}

using Images = std::array<Polynomial, kVars>;

inline Images identity_images() { return {x(0), x(1), x(2), x(3)}; }

inline Polynomial substitute(const Polynomial& f, const Images& images) {
  std::array<std::vector<Polynomial>, kVars> powers;
  for (int v = 0; v < kVars; ++v) powers[v].push_back(Polynomial(1));
  auto power = [&](int v, unsigned e) -> const Polynomial& {
    auto& pw = powers[v];
    while (pw.size() <= e) pw.push_back(pw.back() * images[v]);
    return pw[e];
  };
  Polynomial r;
  for (const auto& [m, c] : f.terms()) {
    Polynomial t(c);
    for (int v = 0; v < kVars; ++v)
      if (m[v]) t *= power(v, m[v]);
    r += t;
  }
  return r;
}

// Single-variable replacement; other variables fixed.
inline Polynomial substitute(const Polynomial& f, int v, const Polynomial& image) {
  Images im = identity_images();
  im[v] = image;
  return substitute(f, im);
}

inline Polynomial permute_vars(const Polynomial& f, const std::array<int, kVars>& perm) {
  Polynomial r;
  for (const auto& [m, c] : f.terms()) {
    Monomial n;
    for (int v = 0; v < kVars; ++v) n[perm[v]] = m[v];
    r.add_term(n, c);
  }
  return r;
}

inline Polynomial dehomogenize(const Polynomial& f, int v) {
  if (!is_homogeneous(f)) throw ArithmeticError("dehomogenize: polynomial is not homogeneous");
  Polynomial r;
  for (const auto& [m, c] : f.terms()) {
    Monomial n = m;
    n[v] = 0;
    r.add_term(n, c);
  }
  return r;
}

inline Polynomial homogenize(const Polynomial& f, int v, unsigned d) {
  Polynomial r;
  for (const auto& [m, c] : f.terms()) {
    if (m[v] != 0) throw ArithmeticError("homogenize: variable already present");
    if (m.degree() > d) throw ArithmeticError("homogenize: degree exceeds target");
    Monomial n = m;
    n[v] = d - m.degree();
    r.add_term(n, c);
  }
  return r;
}

inline long weighted_order(const Polynomial& f, const WeightVector& w) {
  if (f.is_zero()) throw ArithmeticError("weighted order of the zero polynomial");
  long best = -1;
  for (const auto& [m, c] : f.terms()) {
    if (m[0] != 0) throw ArithmeticError("weighted order expects a dehomogenized polynomial (no x0)");
    long wt = w[0] * m[1] + w[1] * m[2] + w[2] * m[3];
    if (best < 0 || wt < best) best = wt;
  }
  return best;
}

inline unsigned var_power_content(const Polynomial& f, int v) {
  if (f.is_zero()) throw ArithmeticError("content of the zero polynomial");
  unsigned k = ~0u;
  for (const auto& [m, c] : f.terms()) k = std::min(k, m[v]);
  return k;
}

inline Polynomial divide_var_power(const Polynomial& f, int v, unsigned k) {
  if (k == 0) return f;
  Polynomial r;
  for (const auto& [m, c] : f.terms()) {
    if (m[v] < k) throw ArithmeticError("divide_var_power: division is not exact");
    Monomial n = m;
    n[v] -= k;
    r.add_term(n, c);
  }
  return r;
}

using VarSet = std::array<bool, kVars>;

inline unsigned order_along(const Polynomial& f, const VarSet& vars) {
  if (f.is_zero()) throw ArithmeticError("order of the zero polynomial");
  unsigned k = ~0u;
  for (const auto& [m, c] : f.terms()) {
    unsigned s = 0;
    for (int v = 0; v < kVars; ++v)
      if (vars[v]) s += m[v];
    k = std::min(k, s);
  }
  return k;
}

// Multiplicity at the origin of an affine equation in x1,x2,x3.
inline unsigned order_at_origin(const Polynomial& f) { return order_along(f, {false, true, true, true}); }

// ---------------------------------------------------------------------------
// formatting

inline std::string format_monomial(const Monomial& m) {
  std::string s;
  for (int v = 0; v < kVars; ++v) {
    if (m[v] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x';
    s += static_cast<char>('0' + v);
    if (m[v] > 1) s += '^' + std::to_string(m[v]);
  }
  return s;
}

inline std::string format(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    std::string mono = format_monomial(m);
    bool negative = false;
    std::string body;
    if (c.is_real() || sgn(c.re()) == 0) {
      const BigRational& part = c.is_real() ? c.re() : c.im();
      negative = sgn(part) < 0;
      BigRational a = abs(part);
      if (c.is_real()) {
        if (mono.empty()) body = a.get_str();
        else body = (a == 1) ? mono : a.get_str() + "*" + mono;
      } else {
        body = (a == 1) ? "i" : a.get_str() + "*i";
        if (!mono.empty()) body += "*" + mono;
      }
    } else {
      body = "(" + c.to_string() + ")";
      if (!mono.empty()) body += "*" + mono;
    }
    if (first) out += negative ? "-" + body : body;
    else out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << format(f); }

// ---------------------------------------------------------------------------
// parsing

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Polynomial run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected character '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int nesting_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool neg = accept('-');
    Polynomial acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  mpz_class natural() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a natural number", start);
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  unsigned exponent() {
    skip();
    std::size_t at = pos_;
    mpz_class e = natural();
    if (e > 4096) throw ParseError("exponent too large", at);
    return static_cast<unsigned>(e.get_ui());
  }

  bool ident_char(std::size_t p) const {
    return p < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p])) || s_[p] == '_');
  }

  std::size_t ident_end(std::size_t p) const {
    while (ident_char(p)) ++p;
    return p;
  }

  Polynomial factor() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = natural();
      mpz_class den = 1;
      if (peek('/')) {
        ++pos_;
        skip();
        std::size_t at = pos_;
        den = natural();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      BigRational q(num, den);
      q.canonicalize();
      if (pos_ < s_.size() && s_[pos_] == 'i' && !ident_char(pos_ + 1)) {
        ++pos_;
        return Polynomial(GaussianRational(BigRational(0), q));
      }
      return Polynomial(GaussianRational(q));
    }
    if (c == '(') {
      ++pos_;
      ++nesting_;
      if (nesting_ > 256) throw ParseError("nesting too deep", pos_);
      Polynomial p = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      --nesting_;
      if (accept('^')) p = p.pow(exponent());
      return p;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      std::size_t end = ident_end(pos_);
      std::string_view name = s_.substr(start, end - start);
      if (name == "i") {
        pos_ = end;
        return Polynomial(GaussianRational::i());
      }
      if (name.size() == 2 && name[0] == 'x' && name[1] >= '0' && name[1] <= '3') {
        pos_ = end;
        Polynomial v = x(name[1] - '0');
        if (accept('^')) return v.pow(exponent());
        return v;
      }
      throw ParseError("unknown variable '" + std::string(name) + "'", start);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }
};

}  // namespace detail

inline Polynomial parse(std::string_view text) { return detail::Parser(text).run(); }

inline GaussianRational parse_coeff(std::string_view text) {
  Polynomial p = parse(text);
  if (!p.is_constant()) throw ParseError("expected a constant", 0);
  return p.constant_term();
}

// ---------------------------------------------------------------------------
// univariate tools: coefficients c[k] of t^k

class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<GaussianRational> c) : c_(std::move(c)) { trim(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<GaussianRational>& coeffs() const { return c_; }
  GaussianRational operator[](std::size_t k) const { return k < c_.size() ? c_[k] : GaussianRational(); }
  GaussianRational lead() const { return c_.empty() ? GaussianRational() : c_.back(); }

  GaussianRational eval(const GaussianRational& t) const {
    GaussianRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  UPoly derivative() const {
    std::vector<GaussianRational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * GaussianRational(static_cast<long>(k)));
    return UPoly(std::move(d));
  }

  UPoly monic() const {
    if (c_.empty()) return *this;
    GaussianRational inv = c_.back().inverse();
    std::vector<GaussianRational> d;
    for (const auto& a : c_) d.push_back(a * inv);
    return UPoly(std::move(d));
  }

  // Euclidean division: *this = q*d + r.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw ArithmeticError("univariate division by zero");
    std::vector<GaussianRational> r = c_;
    std::vector<GaussianRational> q(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0);
    GaussianRational inv = d.lead().inverse();
    for (int k = degree(); k >= d.degree(); --k) {
      GaussianRational f = r[k] * inv;
      if (f.is_zero()) continue;
      q[k - d.degree()] = f;
      for (int j = 0; j <= d.degree(); ++j) r[k - d.degree() + j] -= f * d.c_[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  std::vector<GaussianRational> c_;
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
};

inline UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

struct MultipleRoot {
  GaussianRational root;
  unsigned multiplicity;
};

// The unique multiple root of p, if p has exactly one.
inline std::optional<MultipleRoot> multiple_root(const UPoly& p) {
  if (p.degree() < 2) return std::nullopt;
  UPoly g = gcd(p, p.derivative());
  if (g.degree() < 1) return std::nullopt;
  UPoly radical = g.divmod(gcd(g, g.derivative())).first.monic();
  if (radical.degree() != 1) return std::nullopt;
  return MultipleRoot{-radical[0], static_cast<unsigned>(g.degree() + 1)};
}

inline UPoly to_univariate(const Polynomial& f, int v) {
  std::vector<GaussianRational> c(f.degree_in(v) + 1);
  for (const auto& [m, a] : f.terms()) {
    for (int u = 0; u < kVars; ++u)
      if (u != v && m[u] != 0) throw ArithmeticError("polynomial is not univariate");
    c[m[v]] += a;
  }
  return UPoly(std::move(c));
}

inline Polynomial from_univariate(const UPoly& p, int v) {
  Polynomial r;
  for (int k = 0; k <= p.degree(); ++k) {
    Monomial m;
    m[v] = static_cast<unsigned>(k);
    r.add_term(m, p[k]);
  }
  return r;
}

}  // namespace duval
