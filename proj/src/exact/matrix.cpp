#include "ladder/exact/matrix.hpp"

#include <stdexcept>

namespace ladder::exact {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const std::vector<Rat>& d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

std::vector<Rat> Matrix::column(std::size_t c) const {
  std::vector<Rat> v(n_);
  for (std::size_t r = 0; r < n_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::check_size(const Matrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
}

Matrix Matrix::operator-() const {
  Matrix m(*this);
  for (auto& x : m.a_) x = -x;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  check_size(o);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  check_size(o);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  a.check_size(b);
  const std::size_t n = a.n_;
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Rat& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b(k, j) != 0) m(i, j) += x * b(k, j);
    }
  return m;
}

Matrix operator*(const Rat& c, Matrix a) {
  for (auto& x : a.a_) x *= c;
  return a;
}

std::string Matrix::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < n_; ++r) {
    if (r) s += ';';
    for (std::size_t c = 0; c < n_; ++c) {
      if (c) s += ' ';
      s += exact::to_string((*this)(r, c));
    }
  }
  return s;
}

}  // namespace ladder::exact
