#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "schurlat/error.hpp"

namespace schurlat {

/// Dense row-major matrix over an exact scalar type. T() must be zero.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Row-major entries; also the vectorization used for End(K^N) modules.
  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  static Matrix from_data(std::size_t rows, std::size_t cols, std::vector<T> data) {
    if (data.size() != rows * cols) fail(ErrorCode::kShapeMismatch, "matrix data size mismatch");
    Matrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = std::move(data);
    return m;
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::kShapeMismatch, "matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    T prod;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (bkj == T()) continue;
          prod = aik * bkj;
          out(i, j) += prod;
        }
      }
    }
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::kShapeMismatch, "matrix sum shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::kShapeMismatch, "matrix difference shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }

  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix out = a;
    for (auto& x : out.data_) x = s * x;
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

template <class F>
Matrix<typename F::Elem> identity_matrix(const F& field, std::size_t n) {
  Matrix<typename F::Elem> out(n, n, field.zero());
  for (std::size_t i = 0; i < n; ++i) out(i, i) = field.one();
  return out;
}

template <class F>
std::vector<typename F::Elem> mat_vec(const Matrix<typename F::Elem>& a,
                                      const std::vector<typename F::Elem>& v) {
  using E = typename F::Elem;
  if (a.cols() != v.size()) fail(ErrorCode::kShapeMismatch, "matrix-vector shape mismatch");
  std::vector<E> out(a.rows());
  E prod;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      prod = a(i, j) * v[j];
      out[i] += prod;
    }
  }
  return out;
}

/// Gauss-Jordan inverse over the field. Throws Singular.
template <class F>
Matrix<typename F::Elem> inverse(const F& field, const Matrix<typename F::Elem>& a) {
  using E = typename F::Elem;
  if (!a.square()) fail(ErrorCode::kShapeMismatch, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<E> work = a;
  Matrix<E> inv = identity_matrix(field, n);
  E factor, tmp;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = n;
    for (std::size_t r = c; r < n; ++r) {
      if (!field.is_zero(work(r, c))) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) fail(ErrorCode::kSingular, "matrix is singular");
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(c, j));
        std::swap(inv(pivot, j), inv(c, j));
      }
    }
    E scale = field.one() / work(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      work(c, j) = work(c, j) * scale;
      inv(c, j) = inv(c, j) * scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || field.is_zero(work(r, c))) continue;
      factor = work(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        tmp = factor * work(c, j);
        work(r, j) -= tmp;
        tmp = factor * inv(c, j);
        inv(r, j) -= tmp;
      }
    }
  }
  return inv;
}

template <class F>
typename F::Elem determinant(const F& field, const Matrix<typename F::Elem>& a) {
  using E = typename F::Elem;
  if (!a.square()) fail(ErrorCode::kShapeMismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<E> work = a;
  E det = field.one();
  E factor, tmp;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = n;
    for (std::size_t r = c; r < n; ++r) {
      if (!field.is_zero(work(r, c))) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) return field.zero();
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(work(pivot, j), work(c, j));
      det = -det;
    }
    det = det * work(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (field.is_zero(work(r, c))) continue;
      factor = work(r, c) / work(c, c);
      for (std::size_t j = c; j < n; ++j) {
        tmp = factor * work(c, j);
        work(r, j) -= tmp;
      }
    }
  }
  return det;
}

}  // namespace schurlat
