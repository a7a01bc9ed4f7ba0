#include "ladder/shift/shiftop.hpp"

#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

namespace ladder::shift {

namespace {

Rat twist_power(const Rat& twist, int m, int step) {
  if (twist == 1) return Rat(1);
  if (m % step != 0) throw std::invalid_argument("shift not a multiple of the twist step");
  int e = m / step;
  return exact::rat_pow(e >= 0 ? twist : Rat(1 / twist), static_cast<unsigned>(e >= 0 ? e : -e));
}

}  // namespace

ShiftOp ShiftOp::diagonal(const Symbols& syms, std::size_t index, const RFunc& c) { return single(syms, index, 0, c); }

ShiftOp ShiftOp::single(const Symbols& syms, std::size_t index, int shift, const RFunc& c) {
  ShiftOp r(syms, index);
  if (!c.is_zero()) {
    RFunc cc = c;
    cc.adopt(syms);
    r.terms_.emplace(shift, std::move(cc));
  }
  return r;
}

ShiftOp ShiftOp::identity(const Symbols& syms, std::size_t index) {
  return diagonal(syms, index, RFunc(syms, Rat(1)));
}

RFunc ShiftOp::coefficient(int shift) const {
  auto it = terms_.find(shift);
  return it == terms_.end() ? RFunc(syms_, Rat(0)) : it->second;
}

void ShiftOp::check_compat(const ShiftOp& o) const {
  if (index_ != o.index_ || !exact::same_symbols(syms_, o.syms_))
    throw SymbolMismatch("shift operators over different index or symbol sets");
}

ShiftOp ShiftOp::operator-() const {
  ShiftOp r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

ShiftOp& ShiftOp::operator+=(const ShiftOp& o) {
  check_compat(o);
  for (const auto& [m, c] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

ShiftOp& ShiftOp::operator-=(const ShiftOp& o) { return *this += -o; }

bool operator==(const ShiftOp& a, const ShiftOp& b) {
  return a.index_ == b.index_ && exact::same_symbols(a.syms_, b.syms_) && a.terms_ == b.terms_;
}

ShiftOp ShiftOp::scaled(const Rat& c) const {
  if (sgn(c) == 0) return ShiftOp(syms_, index_);
  ShiftOp r = *this;
  for (auto& [m, coeff] : r.terms_) coeff = coeff * c;
  return r;
}

ShiftOp ShiftOp::scaled(const RFunc& c) const {
  for (const auto& v : c.num().variables())
    if (v == index_) throw std::invalid_argument("scalar factor depends on the index; use composition");
  for (const auto& v : c.den().variables())
    if (v == index_) throw std::invalid_argument("scalar factor depends on the index; use composition");
  if (c.is_zero()) return ShiftOp(syms_, index_);
  ShiftOp r = *this;
  for (auto& [m, coeff] : r.terms_) coeff = coeff * c;
  return r;
}

ShiftOp ShiftOp::right_divided(const RFunc& d) const {
  if (d.is_zero()) throw std::domain_error("division of a shift operator by zero");
  ShiftOp r = *this;
  for (auto& [m, coeff] : r.terms_) coeff = coeff / d;
  return r;
}

ShiftOp ShiftOp::substituted(std::size_t var, const RFunc& value) const {
  if (var == index_) throw std::invalid_argument("cannot substitute the index symbol");
  ShiftOp r(syms_, index_);
  for (const auto& [m, c] : terms_) {
    RFunc v = exact::substitute(c, var, value);
    if (!v.is_zero()) r.terms_.emplace(m, std::move(v));
  }
  return r;
}

ShiftOp ShiftOp::evaluated(std::size_t var, const Rat& value) const {
  if (var == index_) throw std::invalid_argument("cannot evaluate the index symbol");
  ShiftOp r(syms_, index_);
  for (const auto& [m, c] : terms_) {
    RFunc v = c.evaluate(var, value);
    if (!v.is_zero()) r.terms_.emplace(m, std::move(v));
  }
  return r;
}

std::string ShiftOp::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c.to_string() << "]*T^" << m;
  }
  return os.str();
}

ShiftOp compose(const ShiftOp& a, const ShiftOp& b) {
  a.check_compat(b);
  ShiftOp r(a.syms_, a.index_);
  // (A B) e_s = sum_{m2} cB_{m2}(s) A e_{s+m2} = sum cB_{m2}(s) cA_{m1}(s+m2) e_{s+m1+m2}
  for (const auto& [m2, c2] : b.terms_) {
    for (const auto& [m1, c1] : a.terms_) {
      RFunc term = c2 * c1.shifted(a.index_, Rat(m2));
      auto it = r.terms_.find(m1 + m2);
      if (it == r.terms_.end()) {
        if (!term.is_zero()) r.terms_.emplace(m1 + m2, std::move(term));
      } else {
        it->second += term;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  return r;
}

ShiftOp power(const ShiftOp& a, unsigned e) {
  ShiftOp r = ShiftOp::identity(a.symbols(), a.index());
  for (unsigned i = 0; i < e; ++i) r = compose(r, a);
  return r;
}

ShiftOp commutator(const ShiftOp& a, const ShiftOp& b) { return compose(a, b) - compose(b, a); }
ShiftOp anticommutator(const ShiftOp& a, const ShiftOp& b) { return compose(a, b) + compose(b, a); }

ShiftOp symmetrizer3(const ShiftOp& a, const ShiftOp& b, const ShiftOp& c) {
  return compose(a, anticommutator(b, c)) + compose(b, anticommutator(a, c)) + compose(c, anticommutator(a, b));
}

ShiftOp reflect(const ShiftOp& a, const MPoly& center, const Rat& twist, int step) {
  std::size_t idx = a.index();
  const Symbols& syms = a.symbols();
  MPoly s = MPoly::variable(syms, idx);
  MPoly image = center * Rat(2) - s;
  image.adopt(syms);
  bool rational_center = center.is_constant();
  Rat shift2 = rational_center ? Rat(2 * center.constant_value()) : Rat(0);
  ShiftOp r(syms, idx);
  for (const auto& [m, c] : a.terms()) {
    RFunc v = rational_center ? c.shifted(idx, shift2).scaled_variable(idx, Rat(-1)) : c.substitute(idx, image);
    v = v * twist_power(twist, m, step);
    r += ShiftOp::single(syms, idx, -m, v);
  }
  return r;
}

RFunc apply_transpose(const ShiftOp& a, const RFunc& f, const Rat& twist, int step) {
  RFunc out(a.symbols(), Rat(0));
  for (const auto& [m, c] : a.terms()) out += c * f.shifted(a.index(), Rat(m)) * twist_power(twist, m, step);
  return out;
}

MPoly rewrite_polynomial(const MPoly& p, const std::vector<DiagonalRewrite>& rewrites) {
  RFunc cur(p);
  for (const auto& rw : rewrites) {
    MPoly poly = cur.as_polynomial();
    if (!rw.center.is_zero()) {
      MPoly x = MPoly::variable(poly.symbols(), rw.symbol);
      poly = rw.center.is_constant() ? poly.shifted(rw.symbol, rw.center.constant_value())
                                     : poly.substitute(rw.symbol, x + rw.center);
    }
    if (rw.even) {
      if (!exact::is_even_in(poly, rw.symbol))
        throw exact::NotEven("not even in " + poly.symbols()->name(rw.symbol) + " about its center: " + poly.to_string());
      poly = exact::even_part_in(poly, rw.symbol);
    }
    cur = exact::substitute(poly, rw.symbol, rw.value);
    if (!cur.is_polynomial()) throw NotPolynomial("rewrite leaves a denominator: " + cur.to_string());
  }
  return cur.as_polynomial();
}

MPoly to_diagonal(const ShiftOp& a, const std::vector<DiagonalRewrite>& rewrites) {
  for (const auto& [m, c] : a.terms())
    if (m != 0) throw NotDiagonal("operator has a term at shift " + std::to_string(m));
  RFunc c = a.coefficient(0);
  if (!c.is_polynomial()) throw NotPolynomial("diagonal coefficient has a denominator: " + c.to_string());
  MPoly p = c.as_polynomial();
  p.adopt(a.symbols());
  return rewrite_polynomial(p, rewrites);
}

nlohmann::ordered_json to_json(const ShiftOp& a) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [m, c] : a.terms()) {
    nlohmann::ordered_json t;
    t["shift"] = m;
    t["coefficient"] = c.serialize();
    arr.push_back(std::move(t));
  }
  return arr;
}

ShiftOp shiftop_from_json(const Symbols& syms, std::size_t index, const nlohmann::ordered_json& j) {
  ShiftOp r(syms, index);
  for (const auto& t : j) r += ShiftOp::single(syms, index, t.at("shift").get<int>(),
                                               RFunc::parse(syms, t.at("coefficient").get<std::string>()));
  return r;
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  unsigned n = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  for (unsigned t = 0; t < n; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace ladder::shift
