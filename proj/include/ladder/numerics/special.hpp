#pragma once

#include "ladder/numerics/jet.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ladder::numerics {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};
struct SeriesNonconvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Singular neighborhoods excluded from evaluation.
inline constexpr double kEndpointGap = 0.05;  // |x -+ 1| >= gap for Legendre and Jacobi
inline constexpr double kRadialMin = 0.1;     // r, R >= this for radial sampling

// Generalized hypergeometric series sum_k prod (a_i)_k / prod (b_j)_k z^k / k!
// with compensated summation. Terminates exactly when some a_i is a
// nonpositive integer; otherwise requires |z| < 1 when there are more
// numerator than denominator parameters.
cd hypergeometric(const std::vector<double>& a, const std::vector<double>& b, cd z);

// Taylor coefficients g_j = F^{(j)}(z0)/j!, j <= order, from the derivative
// rule d/dz pFq(a; b; z) = prod a / prod b * pFq(a+1; b+1; z).
std::vector<cd> hypergeometric_taylor(const std::vector<double>& a, const std::vector<double>& b, cd z0, int order);
Jet hypergeometric(const std::vector<double>& a, const std::vector<double>& b, const Jet& z);

// 1/Gamma(x), zero at the poles of Gamma.
double rgamma(double x);

enum class Family { LegendreP, JacobiP, LaguerreL, BesselJ, ConfluentSeries };
std::string family_name(Family f);

// LegendreP: Ferrers P^order_degree(x) = ((1+x)/(1-x))^(order/2) 2F1(-degree, degree+1; 1-order; (1-x)/2) / Gamma(1-order).
// JacobiP:   P^(a,b)_degree(x) via 2F1(-degree, degree+a+b+1; a+1; (1-x)/2).
// LaguerreL: L^order_degree(x) = Gamma(degree+order+1)/(Gamma(degree+1)Gamma(order+1)) 1F1(-degree; order+1; x).
// BesselJ:   J_order(x) = (x/2)^order 0F1(; order+1; -x^2/4) / Gamma(order+1), principal branch.
// ConfluentSeries: 1F1(a; b; x).
// Non-integer degrees use the series definition.
struct FnSpec {
  Family family = Family::LegendreP;
  double degree = 0;
  double order = 0;
  double a = 0, b = 0;
};

struct FnValue {
  cd value;
  cd derivative;
};

// Value and derivatives through the order of the argument jet.
Jet eval_jet(const FnSpec& spec, const Jet& x);
FnValue eval_fn(const FnSpec& spec, cd x);

}  // namespace ladder::numerics
