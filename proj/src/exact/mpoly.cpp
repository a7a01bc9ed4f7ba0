#include "ladder/exact/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <unordered_map>

namespace ladder::exact {

// ---------------------------------------------------------------- symbols

SymbolTable::SymbolTable(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxSymbols)
    throw std::invalid_argument("too many symbols (max " + std::to_string(kMaxSymbols) + ")");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty symbol name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate symbol '" + n + "'");
  }
}

std::optional<std::size_t> SymbolTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t SymbolTable::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw std::invalid_argument("unknown symbol '" + std::string(name) + "'");
  return *i;
}

Symbols make_symbols(std::vector<std::string> names) {
  return std::make_shared<const SymbolTable>(std::move(names));
}

bool same_symbols(const Symbols& a, const Symbols& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->names() == b->names();
}

// ---------------------------------------------------------------- monomials

bool Monomial::divides(const Monomial& other) const {
  if (degree > other.degree) return false;
  for (std::size_t i = 0; i < kMaxSymbols; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree > b.degree;
  for (std::size_t i = 0; i < kMaxSymbols; ++i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
  return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto e : m.exp) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxSymbols; ++i) {
    unsigned e = unsigned(a.exp[i]) + b.exp[i];
    if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
    r.exp[i] = static_cast<std::uint8_t>(e);
  }
  r.degree = static_cast<std::uint16_t>(a.degree + b.degree);
  return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxSymbols; ++i) r.exp[i] = static_cast<std::uint8_t>(a.exp[i] - b.exp[i]);
  r.degree = static_cast<std::uint16_t>(a.degree - b.degree);
  return r;
}

namespace {

using TermMap = std::unordered_map<Monomial, Rat, MonomialHash>;

bool term_less(const MPoly::Term& x, const MPoly::Term& y) { return grlex_greater(x.first, y.first); }

std::vector<MPoly::Term> from_map(TermMap& m) {
  std::vector<MPoly::Term> out;
  out.reserve(m.size());
  for (auto& [mono, c] : m)
    if (sgn(c) != 0) out.emplace_back(mono, std::move(c));
  std::sort(out.begin(), out.end(), term_less);
  return out;
}

void accumulate(TermMap& m, const Monomial& mono, const Rat& c) {
  auto [it, inserted] = m.try_emplace(mono, c);
  if (!inserted) it->second += c;
}

Monomial set_exp(Monomial m, std::size_t var, unsigned e) {
  if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
  m.degree = static_cast<std::uint16_t>(m.degree - m.exp[var] + e);
  m.exp[var] = static_cast<std::uint8_t>(e);
  return m;
}

// Merge two sorted term lists: a + sign*b.
std::vector<MPoly::Term> merge_add(const std::vector<MPoly::Term>& a, const std::vector<MPoly::Term>& b, bool negate_b) {
  std::vector<MPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].first, a[i].first)) {
      out.emplace_back(b[j].first, negate_b ? Rat(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rat c = negate_b ? Rat(a[i].second - b[j].second) : Rat(a[i].second + b[j].second);
      if (sgn(c) != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

// ---------------------------------------------------------------- MPoly basics

MPoly::MPoly(Symbols syms, const Rat& c) : syms_(std::move(syms)) {
  if (sgn(c) != 0) terms_.emplace_back(Monomial{}, c);
}

MPoly::MPoly(Symbols syms, std::vector<Term> terms) : syms_(std::move(syms)) {
  TermMap m;
  m.reserve(terms.size());
  std::size_t n = syms_ ? syms_->size() : 0;
  for (auto& [mono, c] : terms) {
    std::uint16_t deg = 0;
    for (std::size_t i = 0; i < kMaxSymbols; ++i) {
      if (i >= n && mono.exp[i] != 0) throw std::invalid_argument("exponent for nonexistent symbol");
      deg = static_cast<std::uint16_t>(deg + mono.exp[i]);
    }
    Monomial fixed = mono;
    fixed.degree = deg;
    accumulate(m, fixed, c);
  }
  terms_ = from_map(m);
}

MPoly MPoly::variable(const Symbols& syms, std::size_t index) {
  if (!syms || index >= syms->size()) throw std::out_of_range("symbol index out of range");
  Monomial m;
  m.exp[index] = 1;
  m.degree = 1;
  MPoly r(syms);
  r.terms_.emplace_back(m, Rat(1));
  return r;
}

MPoly MPoly::variable(const Symbols& syms, std::string_view name) { return variable(syms, syms->index(name)); }

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree == 0); }

Rat MPoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant: " + to_string());
  return terms_.empty() ? Rat(0) : terms_[0].second;
}

Rat MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.degree == 0) return terms_.back().second;
  return Rat(0);
}

int MPoly::total_degree() const { return terms_.empty() ? -1 : terms_.front().first.degree; }

int MPoly::degree_in(std::size_t var) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.first.exp[var]);
  return d;
}

bool MPoly::depends_on(std::size_t var) const {
  for (const auto& t : terms_)
    if (t.first.exp[var]) return true;
  return false;
}

std::vector<std::size_t> MPoly::variables() const {
  std::array<bool, kMaxSymbols> used{};
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < kMaxSymbols; ++i)
      if (t.first.exp[i]) used[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kMaxSymbols; ++i)
    if (used[i]) out.push_back(i);
  return out;
}

void MPoly::adopt(const Symbols& other) {
  if (!syms_) syms_ = other;
}

void MPoly::check_compat(const MPoly& o) {
  if (!syms_) {
    syms_ = o.syms_;
    return;
  }
  if (!o.syms_) return;
  if (!same_symbols(syms_, o.syms_)) throw std::invalid_argument("polynomials use different symbol tables");
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_compat(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge_add(terms_, o.terms_, false);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_compat(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge_add(terms_, o.terms_, true);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r(a.syms_ ? a.syms_ : b.syms_);
  if (a.syms_ && b.syms_ && !same_symbols(a.syms_, b.syms_))
    throw std::invalid_argument("polynomials use different symbol tables");
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    // Monomial times polynomial keeps the order; no hashing needed.
    const auto& single = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
    const auto& many = a.terms_.size() == 1 ? b.terms_ : a.terms_;
    r.terms_.reserve(many.size());
    for (const auto& t : many) r.terms_.emplace_back(mono_mul(single.first, t.first), single.second * t.second);
    return r;
  }
  TermMap m;
  m.reserve(a.terms_.size() * b.terms_.size());
  Rat prod;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      prod = x.second * y.second;
      accumulate(m, mono_mul(x.first, y.first), prod);
    }
  r.terms_ = from_map(m);
  return r;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly& MPoly::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.syms_ && b.syms_ && !same_symbols(a.syms_, b.syms_)) return false;
  return a.terms_ == b.terms_;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(syms_, Rat(1));
  MPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------- substitution

MPoly MPoly::shifted(std::size_t var, const Rat& delta) const {
  if (sgn(delta) == 0 || !depends_on(var)) return *this;
  TermMap m;
  m.reserve(terms_.size() * 2);
  std::vector<Rat> dpow{Rat(1)};
  for (const auto& [mono, c] : terms_) {
    unsigned e = mono.exp[var];
    while (dpow.size() <= e) dpow.push_back(dpow.back() * delta);
    for (unsigned j = 0; j <= e; ++j) {
      Rat coeff = c * dpow[e - j];
      coeff *= binomial(e, j);
      accumulate(m, set_exp(mono, var, j), coeff);
    }
  }
  return raw(syms_, from_map(m));
}

MPoly MPoly::substitute(std::size_t var, const MPoly& value) const {
  auto coeffs = coefficients_in(var);
  MPoly r(syms_);
  for (std::size_t d = coeffs.size(); d-- > 0;) {
    r = r * value;
    r += coeffs[d];
  }
  r.adopt(syms_);
  return r;
}

MPoly MPoly::evaluate(std::size_t var, const Rat& value) const {
  if (!depends_on(var)) return *this;
  TermMap m;
  m.reserve(terms_.size());
  std::vector<Rat> vpow{Rat(1)};
  for (const auto& [mono, c] : terms_) {
    unsigned e = mono.exp[var];
    while (vpow.size() <= e) vpow.push_back(vpow.back() * value);
    accumulate(m, set_exp(mono, var, 0), c * vpow[e]);
  }
  return raw(syms_, from_map(m));
}

MPoly MPoly::scaled_variable(std::size_t var, const Rat& c) const {
  if (sgn(c) == 0) return evaluate(var, Rat(0));
  MPoly r = *this;
  std::vector<Rat> cpow{Rat(1)};
  for (auto& [mono, coeff] : r.terms_) {
    unsigned e = mono.exp[var];
    while (cpow.size() <= e) cpow.push_back(cpow.back() * c);
    coeff *= cpow[e];
  }
  return r;
}

std::vector<MPoly> MPoly::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets;
  for (const auto& [mono, c] : terms_) {
    unsigned e = mono.exp[var];
    if (buckets.size() <= e) buckets.resize(e + 1);
    buckets[e].emplace_back(set_exp(mono, var, 0), c);
  }
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    // Removing one variable's exponent can reorder terms; stable re-sort suffices.
    std::sort(b.begin(), b.end(), term_less);
    MPoly p(syms_);
    p.terms_ = std::move(b);
    out.push_back(std::move(p));
  }
  return out;
}

MPoly MPoly::from_coefficients(const Symbols& syms, std::size_t var, const std::vector<MPoly>& coeffs) {
  TermMap m;
  for (std::size_t d = 0; d < coeffs.size(); ++d)
    for (const auto& [mono, c] : coeffs[d].terms_) {
      if (mono.exp[var]) throw std::invalid_argument("coefficient depends on the collection variable");
      accumulate(m, set_exp(mono, var, static_cast<unsigned>(d)), c);
    }
  return raw(syms, from_map(m));
}

std::map<std::vector<int>, MPoly> MPoly::collect(const std::vector<std::size_t>& vars) const {
  std::map<std::vector<int>, std::vector<Term>> groups;
  for (const auto& [mono, c] : terms_) {
    std::vector<int> key;
    key.reserve(vars.size());
    Monomial rest = mono;
    for (auto v : vars) {
      key.push_back(mono.exp[v]);
      rest = set_exp(rest, v, 0);
    }
    groups[key].emplace_back(rest, c);
  }
  std::map<std::vector<int>, MPoly> out;
  for (auto& [key, ts] : groups) {
    std::sort(ts.begin(), ts.end(), term_less);
    MPoly p(syms_);
    p.terms_ = std::move(ts);
    out.emplace(key, std::move(p));
  }
  return out;
}

MPoly MPoly::monic() const {
  if (terms_.empty() || terms_.front().second == 1) return *this;
  Rat inv = 1 / terms_.front().second;
  MPoly r = *this;
  r *= inv;
  return r;
}

// ---------------------------------------------------------------- text

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    Rat mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mono.degree == 0 || mag != 1) {
      os << exact::to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < kMaxSymbols; ++i) {
      if (!mono.exp[i]) continue;
      if (wrote) os << "*";
      os << (syms_ ? syms_->name(i) : "x" + std::to_string(i));
      if (mono.exp[i] > 1) os << "^" << int(mono.exp[i]);
      wrote = true;
    }
  }
  return os.str();
}

std::string MPoly::serialize() const {
  std::string out;
  std::size_t n = syms_ ? syms_->size() : 0;
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    if (t) out += "; ";
    for (std::size_t i = 0; i < n; ++i) {
      if (i) out += ",";
      out += std::to_string(int(terms_[t].first.exp[i]));
    }
    out += ":";
    out += exact::to_string(terms_[t].second);
  }
  return out;
}

MPoly MPoly::parse(const Symbols& syms, std::string_view text) {
  std::vector<Term> terms;
  std::size_t n = syms->size();
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  while (pos <= text.size()) {
    auto end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    auto item = trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (item.empty()) {
      if (end == text.size()) break;
      throw std::invalid_argument("empty term in polynomial text");
    }
    auto colon = item.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("term without ':' in polynomial text");
    Monomial mono;
    std::string_view exps = item.substr(0, colon);
    std::size_t count = 0, epos = 0;
    if (n == 0 && !trim(exps).empty()) throw std::invalid_argument("exponents given for empty symbol table");
    while (n > 0 && epos <= exps.size()) {
      auto comma = exps.find(',', epos);
      if (comma == std::string_view::npos) comma = exps.size();
      auto e = trim(exps.substr(epos, comma - epos));
      epos = comma + 1;
      if (count >= n) throw std::invalid_argument("too many exponents in term");
      if (e.empty() || e.size() > 3 || !std::all_of(e.begin(), e.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
        throw std::invalid_argument("bad exponent '" + std::string(e) + "'");
      int v = std::stoi(std::string(e));
      if (v > 255) throw std::overflow_error("exponent exceeds 255");
      mono.exp[count++] = static_cast<std::uint8_t>(v);
      if (comma == exps.size()) break;
    }
    if (count != n) throw std::invalid_argument("exponent vector length does not match symbol count");
    Rat c = parse_rat(item.substr(colon + 1));
    if (sgn(c) == 0) throw std::invalid_argument("zero coefficient in polynomial text");
    terms.emplace_back(mono, c);
    if (end == text.size()) break;
  }
  MPoly r(syms, std::move(terms));
  return r;
}

// ---------------------------------------------------------------- division

std::optional<MPoly> try_exact_div(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  Symbols syms = a.symbols() ? a.symbols() : b.symbols();
  if (a.is_zero()) return MPoly(syms);
  if (b.is_constant()) {
    MPoly r = a;
    r *= Rat(1 / b.constant_value());
    r.adopt(syms);
    return r;
  }
  // Cheap rejections: per-variable degrees and total degree.
  if (a.total_degree() < b.total_degree()) return std::nullopt;
  for (auto v : b.variables())
    if (a.degree_in(v) < b.degree_in(v)) return std::nullopt;

  const auto& bt = b.terms();
  const Monomial& lead = bt.front().first;
  Rat lead_inv = 1 / bt.front().second;
  std::vector<MPoly::Term> rem = a.terms();
  std::vector<MPoly::Term> quot;
  std::vector<MPoly::Term> scaled;
  while (!rem.empty()) {
    const auto& top = rem.front();
    if (!lead.divides(top.first)) return std::nullopt;
    Monomial qm = mono_div(top.first, lead);
    Rat qc = top.second * lead_inv;
    scaled.clear();
    scaled.reserve(bt.size());
    for (const auto& t : bt) scaled.emplace_back(mono_mul(qm, t.first), qc * t.second);
    rem = merge_add(rem, scaled, true);
    quot.emplace_back(qm, std::move(qc));
  }
  MPoly q(syms, std::move(quot));
  return q;
}

MPoly exact_div(const MPoly& a, const MPoly& b) {
  auto q = try_exact_div(a, b);
  if (!q) throw NotDivisible("not divisible: (" + a.to_string() + ") / (" + b.to_string() + ")");
  return *q;
}

// ---------------------------------------------------------------- gcd

namespace {

MPoly univariate_gcd(MPoly a, MPoly b, std::size_t var) {
  // Euclid over Q with monic remainders.
  a = a.monic();
  b = b.monic();
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  while (!b.is_zero()) {
    auto ac = a.coefficients_in(var);
    auto bc = b.coefficients_in(var);
    std::vector<Rat> ar, br;
    for (auto& c : ac) ar.push_back(c.constant_value());
    for (auto& c : bc) br.push_back(c.constant_value());
    int db = static_cast<int>(br.size()) - 1;
    Rat lb_inv = 1 / br.back();
    while (static_cast<int>(ar.size()) - 1 >= db && !ar.empty()) {
      Rat f = ar.back() * lb_inv;
      int shift = static_cast<int>(ar.size()) - 1 - db;
      for (int i = 0; i <= db; ++i) ar[shift + i] -= f * br[i];
      ar.pop_back();
      while (!ar.empty() && sgn(ar.back()) == 0) ar.pop_back();
    }
    std::vector<MPoly> rc;
    for (auto& c : ar) rc.emplace_back(a.symbols(), c);
    MPoly r = MPoly::from_coefficients(a.symbols(), var, rc);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

MPoly poly_gcd(const MPoly& a, const MPoly& b);

// Specializes all variables but `keep` at fixed small integers. For inputs
// primitive in `keep`: if both degrees survive and the images are coprime, so
// are the inputs. A cheap certificate for the common coprime case.
bool coprime_by_evaluation(const MPoly& a, const MPoly& b, std::size_t keep) {
  static const long kPoints[] = {3, -5, 7, 11, -13, 17, 19, -23, 29, 31, -37, 41};
  for (std::size_t attempt = 0; attempt < 2; ++attempt) {
    MPoly ea = a, eb = b;
    std::size_t k = attempt * 5;
    for (std::size_t v = 0; v < kMaxSymbols; ++v) {
      if (v == keep) continue;
      if (!ea.depends_on(v) && !eb.depends_on(v)) continue;
      Rat val(kPoints[k++ % 12]);
      ea = ea.evaluate(v, val);
      eb = eb.evaluate(v, val);
    }
    if (ea.degree_in(keep) != a.degree_in(keep) || eb.degree_in(keep) != b.degree_in(keep)) continue;
    if (univariate_gcd(ea, eb, keep).is_constant()) return true;
  }
  return false;
}

MPoly content_in(const std::vector<MPoly>& coeffs) {
  MPoly g;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : poly_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

// Pseudo-remainder of a by b as polynomials in var.
std::vector<MPoly> prem(std::vector<MPoly> a, const std::vector<MPoly>& b) {
  std::size_t db = b.size() - 1;
  const MPoly& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    MPoly la = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c = c * lb;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= la * b[i];
    a.pop_back();
    while (!a.empty() && a.back().is_zero()) a.pop_back();
  }
  return a;
}

std::vector<MPoly> divide_all(std::vector<MPoly> v, const MPoly& d) {
  if (d.is_constant()) return v;
  for (auto& c : v) c = exact_div(c, d);
  return v;
}

MPoly poly_gcd(const MPoly& a, const MPoly& b) {
  Symbols syms = a.symbols() ? a.symbols() : b.symbols();
  if (a.is_zero()) {
    MPoly r = b.monic();
    r.adopt(syms);
    return r;
  }
  if (b.is_zero()) {
    MPoly r = a.monic();
    r.adopt(syms);
    return r;
  }
  if (a.is_constant() || b.is_constant()) return MPoly(syms, Rat(1));
  if (a.size() == 1 && b.size() == 1) {
    Monomial m;
    const auto& x = a.leading().first;
    const auto& y = b.leading().first;
    for (std::size_t i = 0; i < kMaxSymbols; ++i) {
      m.exp[i] = std::min(x.exp[i], y.exp[i]);
      m.degree = static_cast<std::uint16_t>(m.degree + m.exp[i]);
    }
    return MPoly(syms, {{m, Rat(1)}});
  }
  auto va = a.variables();
  auto vb = b.variables();
  std::vector<std::size_t> only_a, only_b;
  std::set_difference(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(only_a));
  std::set_difference(vb.begin(), vb.end(), va.begin(), va.end(), std::back_inserter(only_b));
  if (!only_a.empty() || !only_b.empty()) {
    const MPoly& wide = only_a.empty() ? b : a;
    const MPoly& narrow = only_a.empty() ? a : b;
    const auto& extra = only_a.empty() ? only_b : only_a;
    MPoly g = narrow.monic();
    for (auto& [key, c] : wide.collect(extra)) {
      g = poly_gcd(g, c);
      if (g.is_constant()) break;
    }
    g.adopt(syms);
    return g;
  }
  if (va.size() == 1) return univariate_gcd(a, b, va[0]);

  // Main variable: the one of smallest combined degree keeps the PRS short.
  std::size_t var = va[0];
  int best = a.degree_in(var) + b.degree_in(var);
  for (auto v : va) {
    int d = a.degree_in(v) + b.degree_in(v);
    if (d < best) {
      best = d;
      var = v;
    }
  }
  auto ac = a.coefficients_in(var);
  auto bc = b.coefficients_in(var);
  MPoly ca = content_in(ac), cb = content_in(bc);
  MPoly c = poly_gcd(ca, cb);
  ac = divide_all(std::move(ac), ca);
  bc = divide_all(std::move(bc), cb);
  if (ac.size() < bc.size()) std::swap(ac, bc);
  if (bc.size() == 1 ||
      coprime_by_evaluation(MPoly::from_coefficients(syms, var, ac), MPoly::from_coefficients(syms, var, bc), var))
    return c.monic();
  while (!bc.empty()) {
    if (bc.size() == 1) {
      // Nonzero remainder of degree 0 in var: primitive parts are coprime.
      ac = {MPoly(syms, Rat(1))};
      break;
    }
    auto r = prem(ac, bc);
    if (!r.empty()) {
      MPoly cr = content_in(r);
      r = divide_all(std::move(r), cr);
    }
    ac = std::move(bc);
    bc = std::move(r);
  }
  MPoly g = MPoly::from_coefficients(syms, var, ac);
  g = g * c;
  return g.monic();
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.symbols() && b.symbols() && !same_symbols(a.symbols(), b.symbols()))
    throw std::invalid_argument("gcd of polynomials with different symbol tables");
  return poly_gcd(a, b);
}

// ---------------------------------------------------------------- helpers

MPoly pochhammer(const MPoly& base, unsigned length) {
  MPoly r(base.symbols(), Rat(1));
  for (unsigned j = 0; j < length; ++j) r *= base + MPoly(base.symbols(), Rat(j));
  return r;
}

bool is_even_in(const MPoly& p, std::size_t var) {
  for (const auto& t : p.terms())
    if (t.first.exp[var] % 2) return false;
  return true;
}

bool is_odd_in(const MPoly& p, std::size_t var) {
  for (const auto& t : p.terms())
    if (t.first.exp[var] % 2 == 0) return false;
  return true;
}

MPoly even_part_in(const MPoly& p, std::size_t var) {
  if (!is_even_in(p, var))
    throw NotEven("polynomial is not even in " + (p.symbols() ? p.symbols()->name(var) : std::string("variable")) + ": " +
                  p.to_string());
  std::vector<MPoly::Term> out;
  out.reserve(p.size());
  for (const auto& [mono, c] : p.terms()) out.emplace_back(set_exp(mono, var, mono.exp[var] / 2u), c);
  return MPoly(p.symbols(), std::move(out));
}

MPoly remap(const MPoly& p, const Symbols& target, const std::vector<MPoly>& images) {
  if (p.symbols() && images.size() != p.symbols()->size())
    throw std::invalid_argument("remap needs one image per symbol");
  MPoly out(target);
  // Cache powers per symbol; most model polynomials reuse low exponents.
  std::vector<std::vector<MPoly>> powers(images.size());
  for (const auto& [mono, c] : p.terms()) {
    MPoly t(target, c);
    for (std::size_t v = 0; v < images.size(); ++v) {
      unsigned e = mono.exp[v];
      if (e == 0) continue;
      auto& pw = powers[v];
      if (pw.empty()) pw.push_back(MPoly(target, Rat(1)));
      while (pw.size() <= e) pw.push_back(pw.back() * images[v]);
      t = t * pw[e];
    }
    out += t;
  }
  return out;
}

}  // namespace ladder::exact
