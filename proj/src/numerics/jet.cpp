#include "ladder/numerics/jet.hpp"

#include <algorithm>
#include <cmath>

namespace ladder::numerics {

Jet Jet::constant(cd v, int order) {
  Jet j(order);
  j.c_[0] = v;
  return j;
}

Jet Jet::variable(cd x0, int order) {
  Jet j(order);
  j.c_[0] = x0;
  if (order >= 1) j.c_[1] = 1;
  return j;
}

cd Jet::derivative(int k) const {
  double f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return (*this)[k] * f;
}

Jet Jet::d() const {
  Jet r(std::max(order() - 1, 0));
  for (int j = 1; j <= order(); ++j) r[j - 1] = (*this)[j] * double(j);
  return r;
}

Jet Jet::truncated(int n) const {
  Jet r(std::min(n, order()));
  for (int j = 0; j <= r.order(); ++j) r[j] = (*this)[j];
  return r;
}

Jet Jet::operator-() const {
  Jet r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Jet& Jet::operator+=(const Jet& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
  return *this;
}

Jet& Jet::operator*=(cd s) {
  for (auto& v : c_) v *= s;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet r(std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) {
    cd s = 0;
    for (int j = 0; j <= k; ++j) s += a[j] * b[k - j];
    r[k] = s;
  }
  return r;
}

Jet operator/(const Jet& a, const Jet& b) {
  Jet r(std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) {
    cd s = a[k];
    for (int j = 1; j <= k; ++j) s -= b[j] * r[k - j];
    r[k] = s / b[0];
  }
  return r;
}

Jet exp(const Jet& f) {
  Jet g(f.order());
  g[0] = std::exp(f[0]);
  for (int k = 1; k <= f.order(); ++k) {
    cd s = 0;
    for (int j = 1; j <= k; ++j) s += double(j) * f[j] * g[k - j];
    g[k] = s / double(k);
  }
  return g;
}

Jet log(const Jet& f) {
  Jet g(f.order());
  g[0] = std::log(f[0]);
  for (int k = 1; k <= f.order(); ++k) {
    cd s = 0;
    for (int j = 1; j < k; ++j) s += double(j) * g[j] * f[k - j];
    g[k] = (f[k] - s / double(k)) / f[0];
  }
  return g;
}

Jet pow(const Jet& f, double s) { return exp(log(f) * cd(s)); }

Jet sin(const Jet& f) {
  const cd i(0, 1);
  return (exp(f * i) - exp(f * (-i))) / (2.0 * i);
}

Jet cos(const Jet& f) {
  const cd i(0, 1);
  return (exp(f * i) + exp(f * (-i))) / cd(2);
}

Jet sqrt(const Jet& f) { return pow(f, 0.5); }

Jet compose(const std::vector<cd>& g, const Jet& z) {
  Jet delta = z;
  delta[0] = 0;
  int n = std::min(z.order(), static_cast<int>(g.size()) - 1);
  Jet r = Jet::constant(g[static_cast<std::size_t>(n)], z.order());
  for (int j = n - 1; j >= 0; --j) r = r * delta + g[static_cast<std::size_t>(j)];
  return r;
}

void CompensatedSum::step(double& s, double& c, double x) {
  double t = s + x;
  if (std::abs(s) >= std::abs(x)) c += (s - t) + x;
  else c += (x - t) + s;
  s = t;
}

void CompensatedSum::add(cd x) {
  step(re_, cre_, x.real());
  step(im_, cim_, x.imag());
}

}  // namespace ladder::numerics
