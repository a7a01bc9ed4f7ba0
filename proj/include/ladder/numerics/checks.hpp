#pragma once

#include "ladder/numerics/special.hpp"
#include "ladder/systems/model.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace ladder::numerics {

using systems::SystemId;

struct NumericConfig {
  int points = 16;
  std::uint64_t seed = 20240607;
  double tol = 1e-10;              // recurrences, ODEs, Wronskian factorization
  double composition_tol = 1e-8;   // composed ladder chains
  double derivative_tol = 1e-6;    // series derivative vs central differences
  unsigned jobs = 1;
};

struct CheckResult {
  std::string id;
  std::string group;   // recurrence, ode, composition, wronskian, derivative
  std::string system;  // empty for system-independent identities
  int p = 0, q = 0;
  int points = 0;
  double max_residual = 0;
  double tolerance = 0;
  bool passed = false;
  std::string detail;  // sampled parameters or the reason for a failure
};

// Residuals are |sum of terms - rhs| / max(sum |terms|, |rhs|): relative to
// the larger side, with the left side measured term by term so that points
// near a zero of both sides are not penalized for cancellation.

enum class Recurrence {
  LegendreDPlus,
  LegendreDMinus,
  LegendreCPlus,
  LegendreCMinus,
  LaguerreLower,
  LaguerreRaise,
  CagedDPlus,
  CagedDMinus,
  JacobiJPlus,
  JacobiJMinus,
  RadialKPlus,
  RadialKMinus,
  BesselRadialUp,
  BesselRadialDown,
  BesselComplexUp,
  BesselComplexDown
};
const std::vector<Recurrence>& all_recurrences();
std::string recurrence_name(Recurrence r);

// Parameters of one recurrence: the function's degree/order/a/b in `spec`
// plus a scale (mu1 for the caged ladders, omega for K, beta for the radial
// Bessel shift). Points are the function argument (x, z, R, r or complex w).
CheckResult check_recurrence(Recurrence id, const FnSpec& spec, double scale, const std::vector<cd>& points,
                             double tol);
// Parameters and points drawn from the configured seed.
CheckResult check_recurrence(Recurrence id, const NumericConfig& cfg);

enum class Ode {
  SpherePolar,      // Legendre equation in theta with order k(N+1/2)
  SphereAzimuthal,  // (d^2/dphi^2 + k^2(1/4-a^2)/cos^2(k phi)) Phi = -k^2(N+1/2)^2 Phi
  CagedX,           // L1 X = -2mu1(2n+a1+1) X
  CagedY,
  JacobiEquation,   // Jacobi equation for X_n(x) = P^(b,a)_n(-x)
  TTWPolar,
  TTWRadial,
  CERadial,
  CEAngular         // (d^2/dtheta^2 - k^2 delta^2 e^(2ip theta/q) + Omega^2) Theta = 0
};
const std::vector<Ode>& all_odes();
std::string ode_name(Ode o);
std::string ode_system(Ode o);
CheckResult check_ode(Ode id, int p, int q, const NumericConfig& cfg);

// Composes the factor operators of one system's raising or lowering ladder on
// separated solutions and compares with the exact multiplier from
// systems::build_ladders, evaluated at the same rational parameters.
CheckResult check_composition(SystemId system, bool raise, int p, int q, const NumericConfig& cfg);

// The 4x4 determinant W(f1(x), g1(y), f2(x), g2(y)) built from values and
// first derivatives.
cd wronskian_product(const FnValue& f1, const FnValue& g1, const FnValue& f2, const FnValue& g2);
cd wronskian(const FnValue& f1, const FnValue& f2);  // f1 f2' - f2 f1'

// Factorization W = Wx^2 Wy^2 on Ferrers pairs P^mu, P^-mu in both variables,
// nonvanishing, Abel's identity for (1-x^2) Wx, and W = 0 for a dependent pair.
CheckResult check_wronskian(const NumericConfig& cfg);
// Series derivatives against central differences for every family.
CheckResult check_derivatives(const NumericConfig& cfg);

std::vector<CheckResult> run_suite(const NumericConfig& cfg, const std::vector<std::pair<int, int>>& pq);
bool all_passed(const std::vector<CheckResult>& results);

nlohmann::ordered_json to_json(const CheckResult& r);
nlohmann::ordered_json to_json(const std::vector<CheckResult>& results);

}  // namespace ladder::numerics
