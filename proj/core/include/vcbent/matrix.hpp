#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace vcbent {

/// Row-major dense matrix; only what the spectral code needs.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<T>& data() const noexcept { return data_; }
  std::vector<T>& data() noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Stacks the columns of a square matrix: [[a,b],[c,d]] -> [a,c,b,d].
template <class T>
std::vector<T> vec_columns(const Matrix<T>& m) {
  if (!m.square()) throw std::invalid_argument("vec_columns: matrix is not square");
  std::vector<T> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m(i, j));
  return out;
}

/// Inverse of vec_columns.
template <class T>
Matrix<T> un_vec(const std::vector<T>& v, std::size_t side) {
  if (side * side != v.size()) throw std::invalid_argument("un_vec: length is not side^2");
  Matrix<T> m(side, side, side ? v.front() : T{});
  for (std::size_t j = 0; j < side; ++j)
    for (std::size_t i = 0; i < side; ++i) m(i, j) = v[j * side + i];
  return m;
}

}  // namespace vcbent
