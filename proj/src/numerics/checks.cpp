#include "ladder/numerics/checks.hpp"

#include "ladder/shift/shiftop.hpp"
#include "ladder/systems/ladders.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <random>
#include <sstream>

namespace ladder::numerics {

namespace {

using Rng = std::mt19937_64;
using exact::Rat;

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Rng rng_for(const NumericConfig& cfg, const std::string& key) { return Rng(cfg.seed ^ fnv1a(key)); }

// Non-integral rational in [lo, hi] with a small denominator.
Rat draw_rat(Rng& g, double lo, double hi) {
  std::uniform_int_distribution<long> den(2, 9);
  for (;;) {
    long d = den(g);
    long nlo = static_cast<long>(std::ceil(lo * d)), nhi = static_cast<long>(std::floor(hi * d));
    if (nlo > nhi) continue;
    long n = std::uniform_int_distribution<long>(nlo, nhi)(g);
    if (n % d == 0) continue;
    Rat r(n, d);
    r.canonicalize();
    return r;
  }
}

double draw(Rng& g, double lo, double hi) { return draw_rat(g, lo, hi).get_d(); }
double uniform(Rng& g, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g); }

double rel(std::initializer_list<cd> terms, cd rhs) {
  cd sum = 0;
  double scale = 0;
  for (cd t : terms) {
    sum += t;
    scale += std::abs(t);
  }
  scale = std::max(scale, std::abs(rhs));
  return scale == 0 ? 0 : std::abs(sum - rhs) / scale;
}

double rel_scaled(cd lhs, double lhs_scale, cd rhs) {
  double scale = std::max(lhs_scale, std::abs(rhs));
  return scale == 0 ? 0 : std::abs(lhs - rhs) / scale;
}

// Coefficientwise modulus: running a chain on these bounds the magnitude of
// the terms that cancel in the actual chain.
Jet absj(const Jet& f) {
  Jet r(f.order());
  for (int j = 0; j <= f.order(); ++j) r[j] = std::abs(f[j]);
  return r;
}

// c1 f' + c0 f
Jet step1(const Jet& f, const Jet& c1, const Jet& c0) { return c1 * f.d() + c0 * f.truncated(f.order() - 1); }
// c2 f'' + c1 f' + c0 f
Jet step2(const Jet& f, const Jet& c2, const Jet& c1, const Jet& c0) {
  Jet d1 = f.d();
  return c2 * d1.d() + c1 * d1.truncated(f.order() - 2) + c0 * f.truncated(f.order() - 2);
}

struct Chain {
  Jet f, bound;
  void apply1(const Jet& c1, const Jet& c0) {
    f = step1(f, c1, c0);
    bound = step1(bound, absj(c1), absj(c0));
  }
  void apply2(const Jet& c2, const Jet& c1, const Jet& c0) {
    f = step2(f, c2, c1, c0);
    bound = step2(bound, absj(c2), absj(c1), absj(c0));
  }
};

Chain start(const Jet& f) { return {f, absj(f)}; }

std::string describe(const std::vector<std::pair<std::string, double>>& kv) {
  std::ostringstream os;
  os << std::setprecision(10);
  bool first = true;
  for (const auto& [k, v] : kv) {
    os << (first ? "" : ", ") << k << " = " << v;
    first = false;
  }
  return os.str();
}

// Draws parameters with `setup` (returning their description), then samples
// `points` residuals. A DomainError (pole of a normalization, integral order)
// redraws the parameters.
CheckResult sampled(CheckResult r, const NumericConfig& cfg, Rng& g, const std::function<std::string(Rng&)>& setup,
                    const std::function<double(Rng&)>& point) {
  std::string last_error;
  for (int attempt = 0; attempt < 25; ++attempt) {
    try {
      r.detail = setup(g);
      double worst = 0;
      for (int i = 0; i < cfg.points; ++i) {
        double v = point(g);
        worst = std::isfinite(v) ? std::max(worst, v) : kInf;
      }
      r.points = cfg.points;
      r.max_residual = worst;
      r.passed = worst <= r.tolerance;
      return r;
    } catch (const DomainError& e) {
      last_error = e.what();
    }
  }
  r.detail = "no admissible parameters found: " + last_error;
  r.passed = false;
  r.max_residual = kInf;
  return r;
}

Jet legendre(double nu, double mu, const Jet& x) { return eval_jet({Family::LegendreP, nu, mu, 0, 0}, x); }
Jet laguerre(double m, double alpha, const Jet& z) { return eval_jet({Family::LaguerreL, m, alpha, 0, 0}, z); }
Jet bessel(double nu, const Jet& z) { return eval_jet({Family::BesselJ, 0, nu, 0, 0}, z); }
// X_n(x) = P^(b,a)_n(-x): the solution on which the displayed J+- hold.
Jet jacobi_x(double n, double a, double b, const Jet& x) { return eval_jet({Family::JacobiP, n, 0, b, a}, -x); }
// e^{-mu x^2/2} x^{a+1/2} L^a_n(mu x^2)
Jet caged_fn(double n, double a, double mu, const Jet& x) {
  Jet x2 = x * x;
  return exp(x2 * cd(-mu / 2)) * pow(x, a + 0.5) * laguerre(n, a, x2 * cd(mu));
}
// omega^{A/2} e^{-omega R/2} R^{A/2} L^A_m(omega R)
Jet radial_fn(double m, double A, double omega, const Jet& R) {
  return exp(R * cd(-omega / 2)) * pow(R, A / 2) * laguerre(m, A, R * cd(omega)) * cd(std::pow(omega, A / 2));
}

double recurrence_residual(Recurrence id, const FnSpec& s, double scale, cd z) {
  const int order = (id == Recurrence::CagedDPlus || id == Recurrence::CagedDMinus) ? 2 : 1;
  Jet x = Jet::variable(z, order);
  switch (id) {
    case Recurrence::LegendreDPlus:
    case Recurrence::LegendreDMinus:
    case Recurrence::LegendreCPlus:
    case Recurrence::LegendreCMinus: {
      const double nu = s.degree, mu = s.order;
      Jet T = legendre(nu, mu, x);
      cd t = T[0], dt = T[1], sq = std::sqrt(1.0 - z * z);
      if (id == Recurrence::LegendreDPlus)
        return rel({(1.0 - z * z) * dt, -(nu + 1) * z * t}, -(nu - mu + 1) * legendre(nu + 1, mu, x)[0]);
      if (id == Recurrence::LegendreDMinus)
        return rel({(1.0 - z * z) * dt, nu * z * t}, (nu + mu) * legendre(nu - 1, mu, x)[0]);
      if (id == Recurrence::LegendreCPlus) return rel({sq * dt, mu * z / sq * t}, -legendre(nu, mu + 1, x)[0]);
      return rel({sq * dt, -mu * z / sq * t}, (nu + mu) * (nu - mu + 1) * legendre(nu, mu - 1, x)[0]);
    }
    case Recurrence::LaguerreLower:
    case Recurrence::LaguerreRaise: {
      const double p = s.degree, al = s.order;
      Jet L = laguerre(p, al, x);
      if (id == Recurrence::LaguerreLower)
        return rel({z * L[1], -p * L[0], (p + al) * laguerre(p - 1, al, x)[0]}, 0.0);
      return rel({z * L[1], -(p + 1) * laguerre(p + 1, al, x)[0], (p + 1 + al - z) * L[0]}, 0.0);
    }
    case Recurrence::CagedDPlus:
    case Recurrence::CagedDMinus: {
      const double n = s.degree, a1 = s.order, mu = scale;
      Jet X = caged_fn(n, a1, mu, x);
      cd v = X[0], d1 = X.derivative(1), d2 = X.derivative(2);
      cd inv = (0.25 - a1 * a1) / (z * z);
      if (id == Recurrence::CagedDPlus)
        return rel({d2, -2.0 * z * mu * d1, -mu * v, mu * mu * z * z * v, inv * v},
                   -4 * mu * (n + 1) * caged_fn(n + 1, a1, mu, x)[0]);
      return rel({d2, 2.0 * z * mu * d1, mu * v, mu * mu * z * z * v, inv * v},
                 -4 * mu * (n + a1) * caged_fn(n - 1, a1, mu, x)[0]);
    }
    case Recurrence::JacobiJPlus:
    case Recurrence::JacobiJMinus: {
      const double n = s.degree, a = s.a, b = s.b;
      Jet X = jacobi_x(n, a, b, x);
      if (id == Recurrence::JacobiJPlus)
        return rel({(2 * n + a + b + 2) * (1.0 - z * z) * X[1], (n + a + b + 1) * (-(2 * n + a + b + 2) * z - (a - b)) * X[0]},
                   2 * (n + 1) * (n + a + b + 1) * jacobi_x(n + 1, a, b, x)[0]);
      return rel({-(2 * n + a + b) * (1.0 - z * z) * X[1], -n * ((2 * n + a + b) * z - (a - b)) * X[0]},
                 2 * (n + a) * (n + b) * jacobi_x(n - 1, a, b, x)[0]);
    }
    case Recurrence::RadialKPlus:
    case Recurrence::RadialKMinus: {
      const double m = s.degree, A = s.order, w = scale, E = -2 * w * (2 * m + A + 1);
      Jet Y = radial_fn(m, A, w, x);
      if (id == Recurrence::RadialKPlus)
        return rel({(A + 1) * Y[1], -E / 4 * Y[0], -A * (A + 1) / (2.0 * z) * Y[0]},
                   -w * radial_fn(m - 1, A + 2, w, x)[0]);
      return rel({(1 - A) * Y[1], -E / 4 * Y[0], A * (1 - A) / (2.0 * z) * Y[0]},
                 -w * (m + 1) * (m + A) * radial_fn(m + 1, A - 2, w, x)[0]);
    }
    case Recurrence::BesselRadialUp:
    case Recurrence::BesselRadialDown: {
      const double nu = s.order, beta = scale;
      Jet J = bessel(nu, x * cd(beta));
      if (id == Recurrence::BesselRadialUp)
        return rel({-J[1], nu / z * J[0]}, beta * bessel(nu + 1, x * cd(beta))[0]);
      return rel({J[1], nu / z * J[0]}, beta * bessel(nu - 1, x * cd(beta))[0]);
    }
    case Recurrence::BesselComplexUp:
    case Recurrence::BesselComplexDown: {
      const double nu = s.order;
      Jet J = bessel(nu, x);
      if (id == Recurrence::BesselComplexUp) return rel({-J[1], nu / z * J[0]}, bessel(nu + 1, x)[0]);
      return rel({J[1], nu / z * J[0]}, bessel(nu - 1, x)[0]);
    }
  }
  return kInf;
}

cd determinant(std::vector<std::vector<cd>> m) {
  const std::size_t n = m.size();
  cd det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    if (m[piv][c] == cd(0)) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      cd f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

std::string key(const std::string& id, const std::string& sys, int p, int q) {
  return id + "|" + sys + "|" + std::to_string(p) + "|" + std::to_string(q);
}

}  // namespace

const std::vector<Recurrence>& all_recurrences() {
  static const std::vector<Recurrence> r{
      Recurrence::LegendreDPlus,   Recurrence::LegendreDMinus,   Recurrence::LegendreCPlus,  Recurrence::LegendreCMinus,
      Recurrence::LaguerreLower,   Recurrence::LaguerreRaise,    Recurrence::CagedDPlus,     Recurrence::CagedDMinus,
      Recurrence::JacobiJPlus,     Recurrence::JacobiJMinus,     Recurrence::RadialKPlus,    Recurrence::RadialKMinus,
      Recurrence::BesselRadialUp,  Recurrence::BesselRadialDown, Recurrence::BesselComplexUp, Recurrence::BesselComplexDown};
  return r;
}

std::string recurrence_name(Recurrence r) {
  switch (r) {
    case Recurrence::LegendreDPlus: return "legendre D+ (degree raise)";
    case Recurrence::LegendreDMinus: return "legendre D- (degree lower)";
    case Recurrence::LegendreCPlus: return "legendre C+ (order raise)";
    case Recurrence::LegendreCMinus: return "legendre C- (order lower)";
    case Recurrence::LaguerreLower: return "laguerre z L' = p L - (p+alpha) L_{p-1}";
    case Recurrence::LaguerreRaise: return "laguerre z L' = (p+1) L_{p+1} - (p+1+alpha-z) L";
    case Recurrence::CagedDPlus: return "caged D+(mu1,x) X_n = -4mu1(n+1) X_{n+1}";
    case Recurrence::CagedDMinus: return "caged D-(mu1,x) X_n = -4mu1(n+a1) X_{n-1}";
    case Recurrence::JacobiJPlus: return "jacobi J+";
    case Recurrence::JacobiJMinus: return "jacobi J-";
    case Recurrence::RadialKPlus: return "radial K+";
    case Recurrence::RadialKMinus: return "radial K-";
    case Recurrence::BesselRadialUp: return "bessel (-d/dr + Omega/r) J_Omega(beta r) = beta J_{Omega+1}";
    case Recurrence::BesselRadialDown: return "bessel (d/dr + Omega/r) J_Omega(beta r) = beta J_{Omega-1}";
    case Recurrence::BesselComplexUp: return "bessel (-d/dw + nu/w) J_nu(w) = J_{nu+1}, complex w";
    case Recurrence::BesselComplexDown: return "bessel (d/dw + nu/w) J_nu(w) = J_{nu-1}, complex w";
  }
  return "?";
}

CheckResult check_recurrence(Recurrence id, const FnSpec& spec, double scale, const std::vector<cd>& points,
                             double tol) {
  CheckResult r;
  r.id = recurrence_name(id);
  r.group = "recurrence";
  r.tolerance = tol;
  r.points = static_cast<int>(points.size());
  try {
    for (cd z : points) {
      double v = recurrence_residual(id, spec, scale, z);
      r.max_residual = std::isfinite(v) ? std::max(r.max_residual, v) : kInf;
    }
    r.passed = r.max_residual <= tol;
  } catch (const std::exception& e) {
    r.detail = e.what();
    r.max_residual = kInf;
    r.passed = false;
  }
  return r;
}

CheckResult check_recurrence(Recurrence id, const NumericConfig& cfg) {
  CheckResult base;
  base.id = recurrence_name(id);
  base.group = "recurrence";
  base.tolerance = cfg.tol;
  Rng g = rng_for(cfg, key(base.id, "", 0, 0));
  FnSpec spec;
  double scale = 1;
  double lo = -0.95, hi = 0.95;  // real sample range
  bool complex_points = false;
  auto setup = [&](Rng& r) -> std::string {
    switch (id) {
      case Recurrence::LegendreDPlus:
      case Recurrence::LegendreDMinus:
      case Recurrence::LegendreCPlus:
      case Recurrence::LegendreCMinus:
        spec = {Family::LegendreP, draw(r, 0.2, 3.5), draw(r, -1.8, 1.8), 0, 0};
        return describe({{"nu", spec.degree}, {"mu", spec.order}});
      case Recurrence::LaguerreLower:
      case Recurrence::LaguerreRaise:
        spec = {Family::LaguerreL, draw(r, 0.2, 5), draw(r, -0.8, 3), 0, 0};
        lo = 0.1, hi = 6;
        return describe({{"p", spec.degree}, {"alpha", spec.order}});
      case Recurrence::CagedDPlus:
      case Recurrence::CagedDMinus:
        spec = {Family::LaguerreL, draw(r, 0.2, 4), draw(r, -0.45, 2.5), 0, 0};
        scale = draw(r, 0.2, 2);
        lo = kRadialMin, hi = 2.5;
        return describe({{"n", spec.degree}, {"a1", spec.order}, {"mu1", scale}});
      case Recurrence::JacobiJPlus:
      case Recurrence::JacobiJMinus:
        spec = {Family::JacobiP, draw(r, 0.2, 4), 0, draw(r, -0.8, 2.5), draw(r, -0.8, 2.5)};
        return describe({{"n", spec.degree}, {"a", spec.a}, {"b", spec.b}});
      case Recurrence::RadialKPlus:
      case Recurrence::RadialKMinus:
        spec = {Family::LaguerreL, draw(r, 0.2, 4), draw(r, 0.2, 4), 0, 0};
        scale = draw(r, 0.3, 2);
        lo = kRadialMin, hi = 4;
        return describe({{"m", spec.degree}, {"A", spec.order}, {"omega", scale}});
      case Recurrence::BesselRadialUp:
      case Recurrence::BesselRadialDown:
        spec = {Family::BesselJ, 0, draw(r, -2.5, 3.5), 0, 0};
        scale = draw(r, 0.3, 2);
        lo = kRadialMin, hi = 4;
        return describe({{"Omega", spec.order}, {"beta", scale}});
      case Recurrence::BesselComplexUp:
      case Recurrence::BesselComplexDown:
        spec = {Family::BesselJ, 0, draw(r, -2.5, 3.5), 0, 0};
        complex_points = true;
        return describe({{"nu", spec.order}});
    }
    return "";
  };
  auto point = [&](Rng& r) {
    cd z = complex_points ? std::polar(uniform(r, 0.3, 3), uniform(r, -2.5, 2.5)) : cd(uniform(r, lo, hi));
    return recurrence_residual(id, spec, scale, z);
  };
  return sampled(base, cfg, g, setup, point);
}

const std::vector<Ode>& all_odes() {
  static const std::vector<Ode> o{Ode::SpherePolar, Ode::SphereAzimuthal, Ode::CagedX,   Ode::CagedY,    Ode::JacobiEquation,
                                  Ode::TTWPolar,    Ode::TTWRadial,       Ode::CERadial, Ode::CEAngular};
  return o;
}

std::string ode_name(Ode o) {
  switch (o) {
    case Ode::SpherePolar: return "sphere polar equation";
    case Ode::SphereAzimuthal: return "sphere azimuthal equation";
    case Ode::CagedX: return "caged L1 eigen-equation";
    case Ode::CagedY: return "caged L2 eigen-equation";
    case Ode::JacobiEquation: return "jacobi equation";
    case Ode::TTWPolar: return "TTW angular equation";
    case Ode::TTWRadial: return "TTW radial equation";
    case Ode::CERadial: return "complex-Euclidean radial Bessel equation";
    case Ode::CEAngular: return "complex-Euclidean angular equation";
  }
  return "?";
}

std::string ode_system(Ode o) {
  switch (o) {
    case Ode::SpherePolar:
    case Ode::SphereAzimuthal: return "sphere";
    case Ode::CagedX:
    case Ode::CagedY: return "caged";
    case Ode::JacobiEquation:
    case Ode::TTWPolar:
    case Ode::TTWRadial: return "ttw";
    case Ode::CERadial:
    case Ode::CEAngular: return "complex-euclidean";
  }
  return "";
}

CheckResult check_ode(Ode id, int p, int q, const NumericConfig& cfg) {
  CheckResult base;
  base.id = ode_name(id);
  base.group = "ode";
  base.system = ode_system(id);
  base.p = p;
  base.q = q;
  base.tolerance = cfg.tol;
  const double k = double(p) / double(q);
  Rng g = rng_for(cfg, key(base.id, base.system, p, q));
  std::map<std::string, double> v;
  auto setup = [&](Rng& r) -> std::string {
    v.clear();
    switch (id) {
      case Ode::SpherePolar: {
        Rat N = draw_rat(r, 0.2, 3), kk(p, q);
        kk.canonicalize();
        Rat mu = kk * (N + Rat(1, 2));
        if (mu.get_den() == 1) throw DomainError("integral order");
        v = {{"N", N.get_d()}, {"n", draw(r, 0.2, 3.5)}, {"mu", mu.get_d()}};
        break;
      }
      case Ode::SphereAzimuthal: v = {{"N", draw(r, 0.2, 3)}, {"a", draw(r, -1.8, 1.8)}}; break;
      case Ode::CagedX:
      case Ode::CagedY: v = {{"n", draw(r, 0.2, 4)}, {"a", draw(r, -0.45, 2.5)}, {"mu", draw(r, 0.2, 1.2)}}; break;
      case Ode::JacobiEquation:
      case Ode::TTWPolar: v = {{"n", draw(r, 0.2, 3.5)}, {"a", draw(r, -0.8, 2.5)}, {"b", draw(r, -0.8, 2.5)}}; break;
      case Ode::TTWRadial:
        v = {{"n", draw(r, 0.2, 3)}, {"m", draw(r, 0.2, 3)}, {"a", draw(r, -0.8, 2.5)}, {"b", draw(r, -0.8, 2.5)},
             {"omega", draw(r, 0.3, 2)}};
        break;
      case Ode::CERadial: v = {{"Omega", draw(r, -2.5, 3.5)}, {"beta", draw(r, 0.3, 2)}}; break;
      case Ode::CEAngular: v = {{"Omega", draw(r, -2.5, 3.5)}, {"delta", draw(r, 0.3, 2)}}; break;
    }
    std::vector<std::pair<std::string, double>> kv(v.begin(), v.end());
    return describe(kv);
  };
  auto point = [&](Rng& r) -> double {
    switch (id) {
      case Ode::SpherePolar: {
        double th = uniform(r, std::acos(0.95), std::acos(-0.95));
        Jet t = Jet::variable(th, 2);
        Jet T = legendre(v["n"], v["mu"], cos(t));
        double mu = v["mu"], n = v["n"];
        return rel({T.derivative(2), std::cos(th) / std::sin(th) * T[1],
                    -mu * mu / (std::sin(th) * std::sin(th)) * T[0], n * (n + 1) * T[0]},
                   0.0);
      }
      case Ode::SphereAzimuthal: {
        double psi = uniform(r, -1.2, 1.2);
        Jet phi = Jet::variable(psi / k, 2);
        Jet ps = phi * cd(k);
        Jet F = sqrt(cos(ps)) * legendre(v["N"], v["a"], sin(ps));
        double a = v["a"], N = v["N"];
        return rel({F.derivative(2), k * k * (0.25 - a * a) / (std::cos(psi) * std::cos(psi)) * F[0],
                    k * k * (N + 0.5) * (N + 0.5) * F[0]},
                   0.0);
      }
      case Ode::CagedX:
      case Ode::CagedY: {
        double mu1 = (id == Ode::CagedX ? p : q) * v["mu"], n = v["n"], a = v["a"];
        double x = uniform(r, kRadialMin, 2.5);
        Jet X = caged_fn(n, a, mu1, Jet::variable(x, 2));
        return rel({X.derivative(2), -mu1 * mu1 * x * x * X[0], (0.25 - a * a) / (x * x) * X[0],
                    2 * mu1 * (2 * n + a + 1) * X[0]},
                   0.0);
      }
      case Ode::JacobiEquation: {
        double x = uniform(r, -0.95, 0.95), n = v["n"], a = v["a"], b = v["b"];
        Jet X = jacobi_x(n, a, b, Jet::variable(x, 2));
        return rel({(1 - x * x) * X.derivative(2), (b - a - (a + b + 2) * x) * X[1], n * (n + a + b + 1) * X[0]}, 0.0);
      }
      case Ode::TTWPolar: {
        double psi = uniform(r, 0.5 * std::acos(0.95), 0.5 * std::acos(-0.95));
        double n = v["n"], a = v["a"], b = v["b"];
        Jet th = Jet::variable(psi / k, 2);
        Jet ps = th * cd(k);
        Jet Th = pow(sin(ps), a + 0.5) * pow(cos(ps), b + 0.5) *
                 eval_jet({Family::JacobiP, n, 0, a, b}, cos(ps * cd(2)));
        double al = k * k * (0.25 - a * a), be = k * k * (0.25 - b * b), A = k * (2 * n + a + b + 1);
        double s = std::sin(psi), c = std::cos(psi);
        return rel({Th.derivative(2), al / (s * s) * Th[0], be / (c * c) * Th[0], A * A * Th[0]}, 0.0);
      }
      case Ode::TTWRadial: {
        double n = v["n"], m = v["m"], a = v["a"], b = v["b"], w = v["omega"];
        double A = k * (2 * n + a + b + 1), E = -2 * w * (2 * m + A + 1);
        double x = uniform(r, kRadialMin, 2.2);
        Jet rr = Jet::variable(x, 2);
        Jet Y = exp(rr * rr * cd(-w / 2)) * pow(rr, A) * laguerre(m, A, rr * rr * cd(w));
        return rel({Y.derivative(2), Y[1] / x, -w * w * x * x * Y[0], -A * A / (x * x) * Y[0], -E * Y[0]}, 0.0);
      }
      case Ode::CERadial: {
        double Om = v["Omega"], be = v["beta"], x = uniform(r, kRadialMin, 4);
        Jet R = bessel(Om, Jet::variable(x, 2) * cd(be));
        return rel({R.derivative(2), R[1] / x, be * be * R[0], -Om * Om / (x * x) * R[0]}, 0.0);
      }
      case Ode::CEAngular: {
        double Om = v["Omega"], de = v["delta"];
        double th = uniform(r, -2.5, 2.5) / k;
        Jet t = Jet::variable(th, 2);
        const cd i(0, 1);
        Jet w = exp(t * (i * k)) * cd(de);
        Jet T = bessel(Om / k, w);
        cd w0 = w[0];
        return rel({T.derivative(2), -k * k * w0 * w0 * T[0], Om * Om * T[0]}, 0.0);
      }
    }
    return kInf;
  };
  return sampled(base, cfg, g, setup, point);
}

CheckResult check_composition(SystemId system, bool raise, int p, int q, const NumericConfig& cfg) {
  CheckResult base;
  base.id = std::string(raise ? "raising" : "lowering") + " chain";
  base.group = "composition";
  base.system = systems::system_name(system);
  base.p = p;
  base.q = q;
  base.tolerance = system == SystemId::ComplexEuclidean ? cfg.tol : cfg.composition_tol;
  const systems::SystemModel model = systems::build_model(system, p, q);
  const systems::LadderPair lp = systems::build_ladders(model);
  const exact::MPoly& action = raise ? lp.raw_raise_action : lp.raw_lower_action;
  const double k = double(p) / double(q);
  Rat kr(p, q);
  kr.canonicalize();
  Rng g = rng_for(cfg, key(base.id, base.system, p, q));

  std::map<std::string, Rat> exact_values;
  std::map<std::string, double> v;
  double mult = 0;
  auto setup = [&](Rng& r) -> std::string {
    exact_values.clear();
    switch (system) {
      case SystemId::Sphere: {
        Rat N = draw_rat(r, 0.2, 2.5);
        if (Rat(kr * (N + Rat(1, 2))).get_den() == 1) throw DomainError("integral order");
        exact_values = {{"N", N}, {"n", draw_rat(r, 0.2, 3)}, {"a", draw_rat(r, -1.5, 1.5)}};
        break;
      }
      case SystemId::CagedOscillator: {
        Rat n = draw_rat(r, 0.3, 3), m = draw_rat(r, 0.3, 3);
        exact_values = {{"t", n},
                        {"u", m + kr * n},
                        {"a1", draw_rat(r, -0.4, 2)},
                        {"a2", draw_rat(r, -0.4, 2)},
                        {"mu", draw_rat(r, 0.2, 1.2)}};
        break;
      }
      case SystemId::TTW:
      case SystemId::KeplerDeformed: {
        Rat n = draw_rat(r, 0.2, 3), m = draw_rat(r, 0.2, 3), a = draw_rat(r, -0.8, 2.5), b = draw_rat(r, -0.8, 2.5);
        exact_values = {{"s", n + (a + b + 1) / 2}, {"u", m + kr * n}, {"a", a}, {"b", b},
                        {system == SystemId::TTW ? "omega" : "w", draw_rat(r, 0.3, 2)}};
        break;
      }
      case SystemId::ComplexEuclidean:
        exact_values = {{"Omega", draw_rat(r, -2.5, 3.5)}, {"beta", draw_rat(r, 0.3, 2)}};
        break;
    }
    exact::MPoly val = action;
    for (const auto& [name, value] : exact_values) val = val.evaluate(model.sym(name), value);
    mult = val.constant_value().get_d();
    v.clear();
    for (const auto& [name, value] : exact_values) v[name] = value.get_d();
    std::vector<std::pair<std::string, double>> kv(v.begin(), v.end());
    return describe(kv);
  };

  auto point = [&](Rng& r) -> double {
    switch (system) {
      case SystemId::Sphere: {
        const double N = v["N"], n = v["n"], a = v["a"], mu = k * (N + 0.5);
        const double x0 = uniform(r, -0.9, 0.9), y0 = uniform(r, -0.9, 0.9);
        Jet x = Jet::variable(x0, p), y = Jet::variable(y0, q);
        Jet sq = sqrt(1.0 - x * x);
        Chain fx = start(legendre(n, mu, x)), gy = start(legendre(N, a, y));
        for (int j = 0; j < p; ++j) {
          double m = raise ? mu + j : mu - j;
          fx.apply1(sq, x / sq * cd(raise ? m : -m));
        }
        for (int j = 0; j < q; ++j) {
          double nu = raise ? N + j : N - j;
          gy.apply1(1.0 - y * y, y * cd(raise ? -(nu + 1) : nu));
        }
        cd rhs = mult * legendre(n, raise ? mu + p : mu - p, x)[0] * legendre(raise ? N + q : N - q, a, y)[0];
        return rel_scaled(fx.f[0] * gy.f[0], std::abs(fx.bound[0] * gy.bound[0]), rhs);
      }
      case SystemId::CagedOscillator: {
        const double n = v["t"], m = v["u"] - k * n, a1 = v["a1"], a2 = v["a2"];
        const double mu1 = p * v["mu"], mu2 = q * v["mu"];
        const double x0 = uniform(r, 0.3, 2), y0 = uniform(r, 0.3, 2);
        Jet x = Jet::variable(x0, 2 * q), y = Jet::variable(y0, 2 * p);
        Chain fx = start(caged_fn(n, a1, mu1, x)), gy = start(caged_fn(m, a2, mu2, y));
        // D+-(mu, x) = d^2 -+ 2 x mu d -+ mu + mu^2 x^2 + (1/4 - a^2)/x^2
        auto D = [](Chain& c, const Jet& x, double mu, double a, int sign) {
          Jet one = Jet::constant(1, x.order());
          c.apply2(one, x * cd(-2.0 * sign * mu), x * x * cd(mu * mu) + (0.25 - a * a) / (x * x) - cd(sign * mu));
        };
        for (int j = 0; j < q; ++j) D(fx, x, mu1, a1, raise ? 1 : -1);
        for (int j = 0; j < p; ++j) D(gy, y, mu2, a2, raise ? -1 : 1);
        cd rhs = mult * caged_fn(raise ? n + q : n - q, a1, mu1, x)[0] * caged_fn(raise ? m - p : m + p, a2, mu2, y)[0];
        return rel_scaled(fx.f[0] * gy.f[0], std::abs(fx.bound[0] * gy.bound[0]), rhs);
      }
      case SystemId::TTW:
      case SystemId::KeplerDeformed: {
        const double a = v["a"], b = v["b"], w = v[system == SystemId::TTW ? "omega" : "w"];
        const double n = v["s"] - (a + b + 1) / 2, m = v["u"] - k * n;
        const double A = k * (2 * n + a + b + 1), E = -2 * w * (2 * m + A + 1);
        const double x0 = uniform(r, -0.9, 0.9), R0 = uniform(r, kRadialMin, 3);
        Jet x = Jet::variable(x0, q), R = Jet::variable(R0, p);
        Chain fx = start(jacobi_x(n, a, b, x)), gy = start(radial_fn(m, A, w, R));
        for (int j = 0; j < q; ++j) {
          double nu = raise ? n + j : n - j;
          if (raise)
            fx.apply1((1.0 - x * x) * cd(2 * nu + a + b + 2), (x * cd(-(2 * nu + a + b + 2)) - cd(a - b)) * cd(nu + a + b + 1));
          else
            fx.apply1((1.0 - x * x) * cd(-(2 * nu + a + b)), (x * cd(2 * nu + a + b) - cd(a - b)) * cd(-nu));
        }
        for (int i = 0; i < p; ++i) {
          double Ai = raise ? A + 2 * i : A - 2 * i;
          Jet one = Jet::constant(1, R.order());
          if (raise)
            gy.apply1(one * cd(Ai + 1), one * cd(-E / 4) - cd(Ai * (Ai + 1) / 2) / R);
          else
            gy.apply1(one * cd(1 - Ai), one * cd(-E / 4) + cd(Ai * (1 - Ai) / 2) / R);
        }
        cd rhs = mult * jacobi_x(raise ? n + q : n - q, a, b, x)[0] *
                 radial_fn(raise ? m - p : m + p, raise ? A + 2 * p : A - 2 * p, w, R)[0];
        return rel_scaled(fx.f[0] * gy.f[0], std::abs(fx.bound[0] * gy.bound[0]), rhs);
      }
      case SystemId::ComplexEuclidean: {
        const double Om = v["Omega"], be = v["beta"], nu = Om / k;
        const double r0 = uniform(r, kRadialMin, 4);
        const cd w0 = std::polar(uniform(r, 0.3, 2.5), uniform(r, -2.5, 2.5));
        Jet rr = Jet::variable(r0, p), w = Jet::variable(w0, q);
        Chain fr = start(bessel(Om, rr * cd(be))), gw = start(bessel(nu, w));
        const double sgn = raise ? -1 : 1;
        for (int j = 0; j < p; ++j) {
          double o = raise ? Om + j : Om - j;
          fr.apply1(Jet::constant(sgn, p), cd(o) / rr);
        }
        for (int j = 0; j < q; ++j) {
          double o = raise ? nu + j : nu - j;
          gw.apply1(Jet::constant(sgn, q), cd(o) / w);
        }
        cd rhs = mult * bessel(raise ? Om + p : Om - p, rr * cd(be))[0] * bessel(raise ? nu + q : nu - q, w)[0];
        return rel_scaled(fr.f[0] * gw.f[0], std::abs(fr.bound[0] * gw.bound[0]), rhs);
      }
    }
    return kInf;
  };
  return sampled(base, cfg, g, setup, point);
}

cd wronskian(const FnValue& f1, const FnValue& f2) { return f1.value * f2.derivative - f2.value * f1.derivative; }

cd wronskian_product(const FnValue& f1, const FnValue& g1, const FnValue& f2, const FnValue& g2) {
  auto row = [](const FnValue& f, const FnValue& g) {
    return std::vector<cd>{f.derivative * g.derivative, f.derivative * g.value, f.value * g.derivative,
                           f.value * g.value};
  };
  return determinant({row(f1, g1), row(f1, g2), row(f2, g1), row(f2, g2)});
}

CheckResult check_wronskian(const NumericConfig& cfg) {
  CheckResult base;
  base.id = "determinant factorization W = Wx^2 Wy^2";
  base.group = "wronskian";
  base.system = "sphere";
  base.tolerance = cfg.tol;
  Rng g = rng_for(cfg, key(base.id, "", 0, 0));
  double nu = 0, mu = 0, N = 0, a = 0;
  cd abel0 = 0;
  bool have_abel = false;
  auto setup = [&](Rng& r) -> std::string {
    nu = draw(r, 0.2, 3);
    mu = draw(r, 0.2, 1.8);
    N = draw(r, 0.2, 3);
    a = draw(r, 0.2, 1.8);
    have_abel = false;
    return describe({{"nu", nu}, {"mu", mu}, {"N", N}, {"a", a}});
  };
  auto point = [&](Rng& r) -> double {
    const double x = uniform(r, -0.9, 0.9), y = uniform(r, -0.9, 0.9);
    FnValue f1 = eval_fn({Family::LegendreP, nu, mu, 0, 0}, x), f2 = eval_fn({Family::LegendreP, nu, -mu, 0, 0}, x);
    FnValue g1 = eval_fn({Family::LegendreP, N, a, 0, 0}, y), g2 = eval_fn({Family::LegendreP, N, -a, 0, 0}, y);
    cd W = wronskian_product(f1, g1, f2, g2);
    cd wx = wronskian(f1, f2), wy = wronskian(g1, g2);
    cd prod = wx * wx * wy * wy;
    double res = std::abs(W - prod) / std::max(std::abs(W), std::abs(prod));
    if (std::abs(W) < 1e-12) res = kInf;  // independent solutions must give W != 0
    // Abel: (1 - x^2) Wx is constant.
    cd abel = (1 - x * x) * wx;
    if (!have_abel) {
      abel0 = abel;
      have_abel = true;
    }
    res = std::max(res, std::abs(abel - abel0) / std::abs(abel0));
    // A dependent pair gives a vanishing determinant.
    FnValue f2dep{f1.value * 2.5, f1.derivative * 2.5};
    cd Wdep = wronskian_product(f1, g1, f2dep, g2);
    double entry = std::max(std::abs(f1.value), std::abs(f1.derivative)) * 2.5 *
                   std::max({std::abs(g1.value), std::abs(g1.derivative), std::abs(g2.value), std::abs(g2.derivative)});
    res = std::max(res, std::abs(Wdep) / (24 * std::pow(entry, 4)));
    return res;
  };
  return sampled(base, cfg, g, setup, point);
}

CheckResult check_derivatives(const NumericConfig& cfg) {
  CheckResult base;
  base.id = "series derivative vs central differences";
  base.group = "derivative";
  base.tolerance = cfg.derivative_tol;
  Rng g = rng_for(cfg, key(base.id, "", 0, 0));
  std::vector<FnSpec> specs;
  auto setup = [&](Rng& r) -> std::string {
    specs = {{Family::LegendreP, draw(r, 0.2, 3.5), draw(r, -1.8, 1.8), 0, 0},
             {Family::JacobiP, draw(r, 0.2, 4), 0, draw(r, -0.8, 2.5), draw(r, -0.8, 2.5)},
             {Family::LaguerreL, draw(r, 0.2, 4), draw(r, -0.8, 3), 0, 0},
             {Family::BesselJ, 0, draw(r, -2.5, 3.5), 0, 0},
             {Family::ConfluentSeries, 0, 0, draw(r, -3, 3), draw(r, 0.2, 4)}};
    return "families LegendreP, JacobiP, LaguerreL, BesselJ (real and complex), ConfluentSeries";
  };
  int counter = 0;
  auto point = [&](Rng& r) -> double {
    const FnSpec& s = specs[static_cast<std::size_t>(counter++) % specs.size()];
    cd x;
    switch (s.family) {
      case Family::LegendreP:
      case Family::JacobiP: x = uniform(r, -0.9, 0.9); break;
      case Family::BesselJ: x = counter % 2 ? cd(uniform(r, 0.3, 4)) : std::polar(uniform(r, 0.3, 3), uniform(r, -2.5, 2.5)); break;
      default: x = uniform(r, 0.1, 4);
    }
    const double h = 1e-5;
    FnValue f = eval_fn(s, x);
    cd fd = (eval_fn(s, x + h).value - eval_fn(s, x - h).value) / (2 * h);
    double scale = std::max(std::abs(f.derivative), std::abs(f.value));
    return scale == 0 ? 0 : std::abs(f.derivative - fd) / scale;
  };
  return sampled(base, cfg, g, setup, point);
}

std::vector<CheckResult> run_suite(const NumericConfig& cfg, const std::vector<std::pair<int, int>>& pq) {
  std::vector<std::function<CheckResult()>> tasks;
  for (Recurrence id : all_recurrences()) tasks.push_back([=] { return check_recurrence(id, cfg); });
  tasks.push_back([=] { return check_ode(Ode::JacobiEquation, 1, 1, cfg); });
  tasks.push_back([=] { return check_ode(Ode::CERadial, 1, 1, cfg); });
  for (auto [p, q] : pq)
    for (Ode o : {Ode::SpherePolar, Ode::SphereAzimuthal, Ode::CagedX, Ode::CagedY, Ode::TTWPolar, Ode::TTWRadial,
                  Ode::CEAngular})
      tasks.push_back([=] { return check_ode(o, p, q, cfg); });
  for (auto [p, q] : pq)
    for (SystemId s : {SystemId::Sphere, SystemId::ComplexEuclidean, SystemId::CagedOscillator, SystemId::TTW})
      for (bool raise : {true, false}) tasks.push_back([=] { return check_composition(s, raise, p, q, cfg); });
  tasks.push_back([=] { return check_wronskian(cfg); });
  tasks.push_back([=] { return check_derivatives(cfg); });

  std::vector<CheckResult> out(tasks.size());
  shift::parallel_for(tasks.size(), cfg.jobs, [&](std::size_t i) { out[i] = tasks[i](); });
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

nlohmann::ordered_json to_json(const CheckResult& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["group"] = r.group;
  if (!r.system.empty()) j["system"] = r.system;
  if (r.p) {
    j["p"] = r.p;
    j["q"] = r.q;
  }
  j["points"] = r.points;
  if (std::isfinite(r.max_residual)) j["max_residual"] = r.max_residual;
  else j["max_residual"] = "inf";
  j["tolerance"] = r.tolerance;
  j["status"] = r.passed ? "passed" : "failed";
  j["parameters"] = r.detail;
  return j;
}

nlohmann::ordered_json to_json(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : results) arr.push_back(to_json(r));
  return arr;
}

}  // namespace ladder::numerics
