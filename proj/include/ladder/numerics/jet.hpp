#pragma once

#include <complex>
#include <vector>

namespace ladder::numerics {

using cd = std::complex<double>;

// Truncated Taylor expansion f(x0 + h) = sum_j c_j h^j, j <= order, with
// complex coefficients. Differentiation drops one order; binary operations
// truncate to the smaller order.
class Jet {
 public:
  Jet() : c_(1, cd(0)) {}
  explicit Jet(int order) : c_(static_cast<std::size_t>(order) + 1, cd(0)) {}
  static Jet constant(cd v, int order);
  static Jet variable(cd x0, int order);  // x0 + h

  int order() const { return static_cast<int>(c_.size()) - 1; }
  cd& operator[](int j) { return c_[static_cast<std::size_t>(j)]; }
  cd operator[](int j) const { return c_[static_cast<std::size_t>(j)]; }
  cd value() const { return c_[0]; }
  cd derivative(int k) const;  // k! c_k
  Jet d() const;               // derivative as a jet of order - 1
  Jet truncated(int order) const;

  Jet operator-() const;
  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(cd s);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator*(Jet a, cd s) { return a *= s; }
  friend Jet operator*(cd s, Jet a) { return a *= s; }
  friend Jet operator+(Jet a, cd s) {
    a.c_[0] += s;
    return a;
  }
  friend Jet operator+(cd s, Jet a) { return a + s; }
  friend Jet operator-(Jet a, cd s) { return a + (-s); }
  friend Jet operator-(cd s, const Jet& a) { return (-a) + s; }
  friend Jet operator/(Jet a, cd s) { return a *= (cd(1) / s); }
  friend Jet operator/(cd s, const Jet& a) { return constant(s, a.order()) / a; }

 private:
  std::vector<cd> c_;
};

Jet exp(const Jet& f);
Jet log(const Jet& f);              // principal branch at the base point
Jet pow(const Jet& f, double s);    // exp(s log f)
Jet sin(const Jet& f);
Jet cos(const Jet& f);
Jet sqrt(const Jet& f);

// g(z(x)) for g given by Taylor coefficients g_j at z(x0), j <= z.order().
Jet compose(const std::vector<cd>& g, const Jet& z);

// Neumaier-compensated complex sum.
class CompensatedSum {
 public:
  void add(cd x);
  cd value() const { return {re_ + cre_, im_ + cim_}; }

 private:
  static void step(double& s, double& c, double x);
  double re_ = 0, im_ = 0, cre_ = 0, cim_ = 0;
};

}  // namespace ladder::numerics
