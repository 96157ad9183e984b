#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ggm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense row-major matrix over arbitrary-precision integers. No floating
/// point anywhere. Matrices with 0 rows and/or 0 columns are legal values.
class IntMatrix {
 public:
  IntMatrix() = default;

  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_)
        throw std::invalid_argument("IntMatrix: ragged initializer");
      for (const auto& e : row) data_.push_back(e);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Copy of the r x c submatrix with top-left corner (i0, j0).
  IntMatrix block(std::size_t i0, std::size_t j0, std::size_t r,
                  std::size_t c) const {
    if (i0 + r > rows_ || j0 + c > cols_)
      throw std::invalid_argument("IntMatrix::block: out of range");
    IntMatrix b(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
    return b;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i)
      std::swap((*this)(i, a), (*this)(i, b));
  }

  bool is_square() const { return rows_ == cols_; }

  bool is_zero() const {
    for (const auto& e : data_)
      if (e != 0) return false;
    return true;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("IntMatrix: product shape mismatch");
    IntMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Int& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
      }
    return p;
  }

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("IntMatrix: sum shape mismatch");
    IntMatrix s = a;
    for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
    return s;
  }

  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("IntMatrix: difference shape mismatch");
    IntMatrix d = a;
    for (std::size_t i = 0; i < d.data_.size(); ++i) d.data_[i] -= b.data_[i];
    return d;
  }

  friend IntMatrix operator-(const IntMatrix& a) {
    IntMatrix n = a;
    for (auto& e : n.data_) e = -e;
    return n;
  }

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << '[';
      for (std::size_t j = 0; j < m.cols_; ++j) {
        if (j) os << ", ";
        os << m(i, j);
      }
      os << ']';
      if (i + 1 < m.rows_) os << ", ";
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

}  // namespace ggm
