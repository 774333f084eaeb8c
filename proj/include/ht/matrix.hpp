#pragma once
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "ht/rational.hpp"

namespace ht {

// Dense row-major matrix over the rationals.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<long>> rows);

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat operator*(const Rat& c) const;
  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  // column vector access helpers
  std::vector<Rat> col(std::size_t j) const;
  std::vector<Rat> row_vec(std::size_t i) const;

  // block-diagonal sum of two square matrices
  static Mat block_diag(const Mat& a, const Mat& b);

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> e_;
};

std::vector<Rat> mat_vec(const Mat& m, const std::vector<Rat>& v);

}  // namespace ht
