#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>

#include "duval/errors.hpp"

namespace duval {

// Always canonical: gmp keeps mpq_class reduced with a positive denominator.
using BigRational = mpq_class;

inline BigRational make_rational(long num, long den = 1) {
  if (den == 0) throw ArithmeticError("zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

// Exact square root in Q, if any.
inline std::optional<BigRational> rational_sqrt(const BigRational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  BigRational r(rn, rd);
  r.canonicalize();
  return r;
}

inline std::string rational_to_string(const BigRational& q) { return q.get_str(); }

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}
  GaussianRational(BigRational re) : re_(std::move(re)) { re_.canonicalize(); }
  GaussianRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return GaussianRational(BigRational(0), BigRational(1)); }

  const BigRational& re() const { return re_; }
  const BigRational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  BigRational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    BigRational r = re_ * o.re_ - im_ * o.im_;
    BigRational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw ArithmeticError("division by zero in Q(i)");
    BigRational n = o.norm();
    BigRational r = (re_ * o.re_ + im_ * o.im_) / n;
    BigRational m = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }

  GaussianRational inverse() const {
    GaussianRational one(1);
    one /= *this;
    return one;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  // Lexicographic on (re, im); only used for deterministic tie-breaking.
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  GaussianRational pow(unsigned e) const {
    GaussianRational r(1), b = *this;
    while (e) {
      if (e & 1u) r *= b;
      b *= b;
      e >>= 1u;
    }
    return r;
  }

  std::string to_string() const {
    if (is_real()) return re_.get_str();
    std::string imag;
    BigRational a = abs(im_);
    imag = (a == 1) ? "i" : a.get_str() + "*i";
    if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
    return re_.get_str() + (sgn(im_) < 0 ? " - " : " + ") + imag;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

 private:
  BigRational re_{0};
  BigRational im_{0};
};

using GR = GaussianRational;

// s with s*s == a, normalized so re > 0, or re == 0 and im >= 0.
inline std::optional<GaussianRational> sqrt_if_exists(const GaussianRational& a) {
  const BigRational& p = a.re();
  const BigRational& q = a.im();
  if (sgn(q) == 0) {
    if (sgn(p) >= 0) {
      auto r = rational_sqrt(p);
      if (!r) return std::nullopt;
      return GaussianRational(*r);
    }
    auto r = rational_sqrt(-p);
    if (!r) return std::nullopt;
    return GaussianRational(BigRational(0), *r);
  }
  auto n = rational_sqrt(p * p + q * q);
  if (!n) return std::nullopt;
  auto x = rational_sqrt((p + *n) / 2);
  if (!x) return std::nullopt;
  BigRational y = q / (2 * *x);
  return GaussianRational(*x, y);
}

}  // namespace duval
