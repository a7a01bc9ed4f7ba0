#include "ladder/exact/rfunc.hpp"

namespace ladder::exact {

RFunc::RFunc(MPoly num, MPoly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  Symbols syms = num.symbols() ? num.symbols() : den.symbols();
  num.adopt(syms);
  den.adopt(syms);
  if (num.is_zero()) {
    num_ = MPoly(syms);
    den_ = MPoly(syms, Rat(1));
    return;
  }
  if (!den.is_constant()) {
    MPoly g = gcd(num, den);
    if (!g.is_constant()) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
  }
  Rat lc = den.leading().second;
  if (lc != 1) {
    Rat inv = 1 / lc;
    num *= inv;
    den *= inv;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

MPoly RFunc::as_polynomial() const {
  if (!den_.is_constant()) throw std::logic_error("not a polynomial: " + to_string());
  return num_;  // den is the constant 1 after normalization
}

RFunc RFunc::operator-() const { return RFunc(-num_, den_, Trusted{}); }

RFunc operator+(const RFunc& a, const RFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_constant()) return RFunc(a.num_ + b.num_, a.den_, RFunc::Trusted{});
    return RFunc(a.num_ + b.num_, a.den_);
  }
  if (a.den_.is_constant()) return RFunc(a.num_ * b.den_ + b.num_, b.den_, RFunc::Trusted{});
  if (b.den_.is_constant()) return RFunc(a.num_ + b.num_ * a.den_, a.den_, RFunc::Trusted{});
  MPoly g = gcd(a.den_, b.den_);
  MPoly ad = g.is_constant() ? a.den_ : exact_div(a.den_, g);
  MPoly bd = g.is_constant() ? b.den_ : exact_div(b.den_, g);
  MPoly num = a.num_ * bd + b.num_ * ad;
  if (g.is_constant()) {
    // Coprime denominators with reduced inputs give a reduced sum.
    return RFunc(std::move(num), a.den_ * b.den_, RFunc::Trusted{});
  }
  return RFunc(std::move(num), ad * b.den_);
}

RFunc operator-(const RFunc& a, const RFunc& b) { return a + (-b); }

RFunc operator*(const RFunc& a, const RFunc& b) {
  if (a.is_zero() || b.is_zero()) {
    Symbols s = a.symbols() ? a.symbols() : b.symbols();
    return RFunc(s, Rat(0));
  }
  MPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!bd.is_constant()) {
    MPoly g = gcd(an, bd);
    if (!g.is_constant()) {
      an = exact_div(an, g);
      bd = exact_div(bd, g);
    }
  }
  if (!ad.is_constant()) {
    MPoly g = gcd(bn, ad);
    if (!g.is_constant()) {
      bn = exact_div(bn, g);
      ad = exact_div(ad, g);
    }
  }
  MPoly num = an * bn;
  MPoly den = ad * bd;
  Rat lc = den.leading().second;
  if (lc != 1) {
    Rat inv = 1 / lc;
    num *= inv;
    den *= inv;
  }
  return RFunc(std::move(num), std::move(den), RFunc::Trusted{});
}

RFunc operator*(const RFunc& a, const Rat& c) {
  if (sgn(c) == 0) return RFunc(a.symbols(), Rat(0));
  MPoly n = a.num_;
  n *= c;
  return RFunc(std::move(n), a.den_, RFunc::Trusted{});
}

RFunc operator/(const RFunc& a, const RFunc& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  return a * RFunc(b.den_, b.num_);
}

RFunc RFunc::shifted(std::size_t var, const Rat& delta) const {
  // A shift keeps the leading term and is a ring automorphism, so the result
  // is still reduced and monic.
  return RFunc(num_.shifted(var, delta), den_.shifted(var, delta), Trusted{});
}

RFunc RFunc::substitute(std::size_t var, const MPoly& value) const {
  return RFunc(num_.substitute(var, value), den_.substitute(var, value));
}

RFunc RFunc::evaluate(std::size_t var, const Rat& value) const {
  MPoly d = den_.evaluate(var, value);
  if (d.is_zero()) throw std::domain_error("denominator vanishes at evaluation point");
  return RFunc(num_.evaluate(var, value), d);
}

RFunc RFunc::scaled_variable(std::size_t var, const Rat& c) const {
  return RFunc(num_.scaled_variable(var, c), den_.scaled_variable(var, c));
}

std::string RFunc::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::string RFunc::serialize() const {
  if (den_.is_constant()) return num_.serialize();
  return num_.serialize() + " / (" + den_.serialize() + ")";
}

RFunc RFunc::parse(const Symbols& syms, std::string_view text) {
  auto slash = text.find(" / (");
  if (slash == std::string_view::npos) return RFunc(MPoly::parse(syms, text), MPoly(syms, Rat(1)));
  auto close = text.rfind(')');
  if (close == std::string_view::npos || close < slash) throw std::invalid_argument("unbalanced rational function text");
  MPoly num = MPoly::parse(syms, text.substr(0, slash));
  MPoly den = MPoly::parse(syms, text.substr(slash + 4, close - slash - 4));
  num.adopt(syms);
  return RFunc(num, den);
}

RFunc substitute(const MPoly& p, std::size_t var, const RFunc& value) {
  if (value.is_polynomial()) return RFunc(p.substitute(var, value.as_polynomial()));
  // p(N/D) = sum c_d N^d D^(deg-d) / D^deg
  auto coeffs = p.coefficients_in(var);
  if (coeffs.empty()) return RFunc(p);
  std::size_t deg = coeffs.size() - 1;
  const MPoly& n = value.num();
  const MPoly& d = value.den();
  std::vector<MPoly> dpow{MPoly(p.symbols(), Rat(1))};
  for (std::size_t i = 0; i < deg; ++i) dpow.push_back(dpow.back() * d);
  MPoly num(p.symbols());
  MPoly npow(p.symbols(), Rat(1));
  for (std::size_t i = 0; i <= deg; ++i) {
    if (!coeffs[i].is_zero()) num += coeffs[i] * npow * dpow[deg - i];
    if (i < deg) npow = npow * n;
  }
  return RFunc(num, dpow[deg]);
}

RFunc substitute(const RFunc& f, std::size_t var, const RFunc& value) {
  return substitute(f.num(), var, value) / substitute(f.den(), var, value);
}

}  // namespace ladder::exact
