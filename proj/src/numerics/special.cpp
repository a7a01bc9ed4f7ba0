#include "ladder/numerics/special.hpp"

#include <cmath>
#include <limits>

namespace ladder::numerics {

namespace {

constexpr int kMaxTerms = 200000;
constexpr double kEps = std::numeric_limits<double>::epsilon();

bool nonpositive_integer(double x) { return x <= 0 && std::floor(x) == x; }

void check_endpoints(cd x, const char* what) {
  if (std::abs(x - 1.0) < kEndpointGap || std::abs(x + 1.0) < kEndpointGap)
    throw DomainError(std::string(what) + ": argument within the excluded neighborhood of x = +-1");
  if (std::abs(1.0 - x) >= 2.0)
    throw DomainError(std::string(what) + ": series in (1-x)/2 requires |1-x| < 2");
}

}  // namespace

double rgamma(double x) {
  if (nonpositive_integer(x)) return 0;
  return 1.0 / std::tgamma(x);
}

cd hypergeometric(const std::vector<double>& a, const std::vector<double>& b, cd z) {
  for (double bj : b)
    if (nonpositive_integer(bj)) throw DomainError("hypergeometric series with a nonpositive integer lower parameter");
  bool terminating = false;
  for (double ai : a) terminating = terminating || nonpositive_integer(ai);
  if (!terminating && a.size() > b.size() && std::abs(z) >= 1.0)
    throw DomainError("hypergeometric series outside its disk of convergence");

  CompensatedSum sum;
  cd term = 1;
  sum.add(term);
  int small = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    cd ratio = z / double(k + 1);
    for (double ai : a) ratio *= ai + k;
    for (double bj : b) ratio /= bj + k;
    term *= ratio;
    if (term == cd(0)) return sum.value();
    sum.add(term);
    // Stop once terms are decreasing and negligible for a few steps.
    if (std::abs(ratio) < 1.0 && std::abs(term) <= kEps * 0.25 * std::abs(sum.value())) {
      if (++small >= 3) return sum.value();
    } else {
      small = 0;
    }
  }
  throw SeriesNonconvergence("hypergeometric series did not converge in " + std::to_string(kMaxTerms) + " terms");
}

std::vector<cd> hypergeometric_taylor(const std::vector<double>& a, const std::vector<double>& b, cd z0, int order) {
  std::vector<cd> g;
  std::vector<double> aj = a, bj = b;
  double factor = 1;
  for (int j = 0; j <= order; ++j) {
    g.push_back(factor * hypergeometric(aj, bj, z0));
    for (double x : aj) factor *= x;
    for (double x : bj) factor /= x;
    factor /= double(j + 1);
    for (double& x : aj) x += 1;
    for (double& x : bj) x += 1;
  }
  return g;
}

Jet hypergeometric(const std::vector<double>& a, const std::vector<double>& b, const Jet& z) {
  return compose(hypergeometric_taylor(a, b, z.value(), z.order()), z);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::LegendreP: return "LegendreP";
    case Family::JacobiP: return "JacobiP";
    case Family::LaguerreL: return "LaguerreL";
    case Family::BesselJ: return "BesselJ";
    case Family::ConfluentSeries: return "ConfluentSeries";
  }
  return "?";
}

Jet eval_jet(const FnSpec& s, const Jet& x) {
  switch (s.family) {
    case Family::LegendreP: {
      check_endpoints(x.value(), "LegendreP");
      Jet z = (1.0 - x) / cd(2);
      Jet F = hypergeometric({-s.degree, s.degree + 1}, {1 - s.order}, z);
      if (nonpositive_integer(1 - s.order))
        throw DomainError("LegendreP: order must not be a positive integer for this normalization");
      Jet prefactor = pow((1.0 + x) / (1.0 - x), s.order / 2);
      return prefactor * F * cd(rgamma(1 - s.order));
    }
    case Family::JacobiP: {
      check_endpoints(x.value(), "JacobiP");
      Jet z = (1.0 - x) / cd(2);
      Jet F = hypergeometric({-s.degree, s.degree + s.a + s.b + 1}, {s.a + 1}, z);
      double norm = std::tgamma(s.a + s.degree + 1) * rgamma(s.degree + 1) * rgamma(s.a + 1);
      if (!std::isfinite(norm)) throw DomainError("JacobiP: normalization has a pole");
      return F * cd(norm);
    }
    case Family::LaguerreL: {
      Jet F = hypergeometric({-s.degree}, {s.order + 1}, x);
      double norm = std::tgamma(s.degree + s.order + 1) * rgamma(s.degree + 1) * rgamma(s.order + 1);
      if (!std::isfinite(norm)) throw DomainError("LaguerreL: normalization has a pole");
      return F * cd(norm);
    }
    case Family::BesselJ: {
      if (std::abs(x.value()) == 0.0) throw DomainError("BesselJ: evaluation at the branch point 0");
      if (nonpositive_integer(s.order) && s.order < 0) {
        // J_{-n} = (-1)^n J_n
        FnSpec r = s;
        r.order = -s.order;
        return eval_jet(r, x) * cd(std::fmod(r.order, 2.0) == 0 ? 1.0 : -1.0);
      }
      Jet y = x * x * cd(-0.25);
      Jet F = hypergeometric({}, {s.order + 1}, y);
      return pow(x / cd(2), s.order) * F * cd(rgamma(s.order + 1));
    }
    case Family::ConfluentSeries:
      return hypergeometric({s.a}, {s.b}, x);
  }
  throw DomainError("unknown function family");
}

FnValue eval_fn(const FnSpec& spec, cd x) {
  Jet j = eval_jet(spec, Jet::variable(x, 1));
  return {j[0], j[1]};
}

}  // namespace ladder::numerics
