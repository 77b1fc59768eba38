#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3g2 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

// x mod 1, result in [0, 1)
inline Rat frac_part(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int f = n % d;
  if (f < 0) f += d;
  return Rat(f, d);
}

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

// Dense row-major matrix over an exact scalar type (Int, Rat, or a builtin
// integer for throwaway computations). All arithmetic is exact.
template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {
    assert(rows >= 0 && cols >= 0);
  }
  Matrix(int rows, int cols, std::initializer_list<T> entries)
      : rows_(rows), cols_(cols), data_(entries) {
    assert(data_.size() == size_t(rows) * cols);
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int r, int c) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return data_[size_t(r) * cols_ + c];
  }
  const T& operator()(int r, int c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return data_[size_t(r) * cols_ + c];
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Matrix out = a;
    for (size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Matrix out = a;
    for (size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }
  Matrix operator-() const {
    Matrix out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  // Row-major lexicographic order; shorter shapes compare first.
  bool operator<(const Matrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    for (size_t i = 0; i < data_.size(); ++i)
      if (data_[i] != o.data_[i]) return data_[i] < o.data_[i];
    return false;
  }

  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& x : data_) if (x != 0) return false;
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if ((*this)(i, j) != T(i == j ? 1 : 0)) return false;
    return true;
  }

  // Columns [c0, c0+n) as a new matrix.
  Matrix columns(int c0, int n) const {
    assert(c0 >= 0 && c0 + n <= cols_);
    Matrix out(rows_, n);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < n; ++j) out(i, j) = (*this)(i, c0 + j);
    return out;
  }

  void set_block(int r0, int c0, const Matrix& b) {
    assert(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_);
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Matrix block(int r0, int c0, int nr, int nc) const {
    assert(r0 + nr <= rows_ && c0 + nc <= cols_);
    Matrix out(nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }

  template <class U>
  Matrix<U> cast() const {
    Matrix<U> out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(i, j) = U((*this)(i, j));
    return out;
  }

  std::string str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
      os << (i == 0 ? "[" : " ");
      for (int j = 0; j < cols_; ++j) os << (*this)(i, j) << (j + 1 < cols_ ? " " : "");
      os << (i + 1 < rows_ ? "\n" : "]");
    }
    return os.str();
  }

  const std::vector<T>& data() const { return data_; }

 private:
  int rows_, cols_;
  std::vector<T> data_;
};

using IntMat = Matrix<Int>;
using RatMat = Matrix<Rat>;

inline IntMat block_diag(const IntMat& a, const IntMat& b) {
  IntMat out(a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

// Vertical stack [a; b].
inline IntMat vstack(const IntMat& a, const IntMat& b) {
  assert(a.cols() == b.cols());
  IntMat out(a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

// Exact determinant by fraction-free Bareiss elimination.
inline Int determinant(const IntMat& a) {
  assert(a.rows() == a.cols());
  int n = a.rows();
  if (n == 0) return 1;
  IntMat m = a;
  Int prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

inline bool is_unimodular(const IntMat& a) {
  if (a.rows() != a.cols()) return false;
  Int d = determinant(a);
  return d == 1 || d == -1;
}

}  // namespace k3g2
