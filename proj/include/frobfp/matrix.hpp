#ifndef FROBFP_MATRIX_HPP
#define FROBFP_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "frobfp/rational.hpp"

namespace frobfp {

/// Dense row-major matrix of exact rationals. Zero-sized shapes are legal
/// (empty Hom spaces show up as 0xN blocks).
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rat(1);
    return m;
  }

  static RatMatrix from_rows(std::initializer_list<std::initializer_list<Rat>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    RatMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw std::invalid_argument("RatMatrix: ragged rows");
      std::size_t j = 0;
      for (const auto& x : row) m(i, j++) = x;
      ++i;
    }
    return m;
  }

  static RatMatrix column(const std::vector<Rat>& v) {
    RatMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  RatMatrix transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<Rat> col_vector(std::size_t j) const {
    std::vector<Rat> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    a.require_same_shape(b, "operator+");
    RatMatrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
    return r;
  }

  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    a.require_same_shape(b, "operator-");
    RatMatrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
    return r;
  }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("RatMatrix: product shape mismatch " + a.shape_str() + " * " + b.shape_str());
    RatMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }

  friend RatMatrix operator*(const Rat& s, const RatMatrix& m) {
    RatMatrix r(m.rows_, m.cols_);
    for (std::size_t k = 0; k < m.data_.size(); ++k) r.data_[k] = s * m.data_[k];
    return r;
  }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i == 0 ? "[" : " [");
      for (std::size_t j = 0; j < cols_; ++j) os << (j == 0 ? "" : ", ") << (*this)(i, j).str();
      os << "]" << (i + 1 == rows_ ? "" : "\n");
    }
    os << "]";
    return os.str();
  }

 private:
  std::string shape_str() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }
  void require_same_shape(const RatMatrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument(std::string("RatMatrix: shape mismatch in ") + op);
  }

  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

inline Rat trace(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("trace: matrix not square");
  Rat t;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

/// Kronecker product; block (i,j) of the result is a(i,j) * b.
inline RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          r(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return r;
}

}  // namespace frobfp

#endif  // FROBFP_MATRIX_HPP
