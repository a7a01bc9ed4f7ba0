#pragma once

#include "ladder/exact/rat.hpp"

#include <string>
#include <vector>

namespace ladder::exact {

// Dense square matrix over Q. Used for finite-dimensional representations,
// where dimensions stay small (tens), so no sparsity tricks.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n, Rat(0)) {}
  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<Rat>& d);

  std::size_t size() const { return n_; }
  Rat& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  bool is_zero() const;
  bool is_diagonal() const;
  std::vector<Rat> column(std::size_t c) const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rat& c, Matrix a);
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

  std::string to_string() const;  // rows separated by ';', entries by ' '

 private:
  void check_size(const Matrix& o) const;
  std::size_t n_ = 0;
  std::vector<Rat> a_;
};

}  // namespace ladder::exact
