#pragma once

#include <optional>
#include <vector>

#include "duval/field.hpp"

namespace duval {

// Dense square or rectangular matrix over Q(i), row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = GaussianRational(1);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  GaussianRational& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const GaussianRational& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.c_ != y.r_) throw ArithmeticError("matrix shape mismatch");
    Matrix z(x.r_, y.c_);
    for (std::size_t i = 0; i < x.r_; ++i)
      for (std::size_t k = 0; k < x.c_; ++k) {
        if (x(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < y.c_; ++j) z(i, j) += x(i, k) * y(k, j);
      }
    return z;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  // Reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t col = 0; col < c_ && row < r_; ++col) {
      std::size_t p = row;
      while (p < r_ && (*this)(p, col).is_zero()) ++p;
      if (p == r_) continue;
      for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(p, j), (*this)(row, j));
      GaussianRational inv = (*this)(row, col).inverse();
      for (std::size_t j = 0; j < c_; ++j) (*this)(row, j) *= inv;
      for (std::size_t i = 0; i < r_; ++i) {
        if (i == row || (*this)(i, col).is_zero()) continue;
        GaussianRational f = (*this)(i, col);
        for (std::size_t j = 0; j < c_; ++j) (*this)(i, j) -= f * (*this)(row, j);
      }
      piv.push_back(col);
      ++row;
    }
    return piv;
  }

  std::size_t rank() const {
    Matrix t = *this;
    return t.rref().size();
  }

  std::optional<Matrix> inverse() const {
    if (r_ != c_) return std::nullopt;
    Matrix aug(r_, 2 * c_);
    for (std::size_t i = 0; i < r_; ++i) {
      for (std::size_t j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, c_ + i) = GaussianRational(1);
    }
    auto piv = aug.rref();
    if (piv.size() < r_ || piv[r_ - 1] >= c_) return std::nullopt;
    Matrix inv(r_, c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) inv(i, j) = aug(i, c_ + j);
    return inv;
  }

  // Basis of the right null space.
  std::vector<std::vector<GaussianRational>> kernel() const {
    Matrix t = *this;
    auto piv = t.rref();
    std::vector<bool> is_piv(c_, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<std::vector<GaussianRational>> out;
    for (std::size_t f = 0; f < c_; ++f) {
      if (is_piv[f]) continue;
      std::vector<GaussianRational> v(c_);
      v[f] = GaussianRational(1);
      for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -t(i, f);
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<GaussianRational> a_;
};

}  // namespace duval
