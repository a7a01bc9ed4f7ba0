#include "ladder/systems/ladders.hpp"

#include <functional>

namespace ladder::systems {

using exact::pochhammer;
using exact::rat;

namespace {

MPoly chain(const SystemModel& m, int steps, const std::function<MPoly(int)>& factor) {
  MPoly r = m.constant(1);
  for (int j = 0; j < steps; ++j) r = r * factor(j);
  return r;
}

Rat sign_pow(int e) { return Rat(e % 2 ? -1 : 1); }

void require_equal(const MPoly& composed, const MPoly& closed, const std::string& what) {
  if (!(composed == closed))
    throw ConstructionMismatch(what + ": composed factors give " + composed.to_string() + " but the closed form is " +
                               closed.to_string());
}

struct Actions {
  MPoly raw_raise, raw_lower, raise, lower;
  std::vector<std::string> checks, notes;
};

// Legendre ladders in y (degree N, order a) and x (degree n, order k(N+1/2)).
Actions sphere_actions(const SystemModel& m) {
  const int p = m.p, q = m.q;
  MPoly N = m.var("N"), n = m.var("n"), a = m.var("a"), one = m.constant(1);
  MPoly knu = (N + m.constant(rat(1, 2))) * m.k;
  Actions r;
  // D+_nu T_nu = -(nu - a + 1) T_{nu+1}; C+_mu T^mu = -T^{mu+1}
  r.raw_raise = chain(m, q, [&](int j) { return -(N + m.constant(j) - a + one); }) *
                chain(m, p, [&](int) { return -one; });
  // D-_nu T_nu = (nu + a) T_{nu-1}; C-_mu T^mu = (n + mu)(n - mu + 1) T^{mu-1}
  r.raw_lower = chain(m, q, [&](int j) { return N - m.constant(j) + a; }) *
                chain(m, p, [&](int j) {
                  MPoly mu = knu - m.constant(j);
                  return (n + mu) * (n - mu + one);
                });
  require_equal(r.raw_raise, pochhammer(N - a + one, q) * sign_pow(p + q), "sphere raising action");
  require_equal(r.raw_lower,
                pochhammer(-N - a, q) * pochhammer(-n - knu, p) * pochhammer(n - knu + one, p) * sign_pow(p + q),
                "sphere lowering action");
  r.checks.push_back("factor chains C+/D+ and C-/D- reproduce the closed-form raising and lowering actions");
  // Gauge g(N)/g(N+q) = (n - k(N+1/2) - p + 1)_p balances the two ladders under N -> -N-1.
  r.raise = r.raw_raise * pochhammer(n - knu - m.constant(p) + one, p);
  r.lower = pochhammer(-N - a, q) * pochhammer(-n - knu, p) * sign_pow(p + q);
  return r;
}

// Bessel shifts: p steps in r, each multiplying by beta, and q steps in w with unit factor.
Actions ce_actions(const SystemModel& m) {
  const int p = m.p, q = m.q;
  MPoly beta = m.var("beta"), one = m.constant(1);
  Actions r;
  r.raw_raise = chain(m, p, [&](int) { return beta; }) * chain(m, q, [&](int) { return one; });
  r.raw_lower = chain(m, p, [&](int) { return beta; }) * chain(m, q, [&](int) { return one; });
  require_equal(r.raw_raise, beta.pow(p), "complex-Euclidean raising action");
  require_equal(r.raw_lower, beta.pow(p), "complex-Euclidean lowering action");
  r.checks.push_back("r-steps (factor beta) and w-steps (factor 1) reproduce beta^p in both directions");
  r.raise = r.raw_raise;
  r.lower = r.raw_lower;
  return r;
}

// Laguerre ladders D+-(mu1, x) on X_n and D+-(mu2, y) on Y_m with m = u - k n.
Actions caged_actions(const SystemModel& m) {
  const int p = m.p, q = m.q;
  MPoly t = m.var("t"), u = m.var("u"), a1 = m.var("a1"), a2 = m.var("a2"), mu = m.var("mu");
  MPoly one = m.constant(1);
  MPoly mu1 = mu * Rat(p), mu2 = mu * Rat(q);
  MPoly mm = u - t * m.k;
  Actions r;
  r.raw_raise = chain(m, q, [&](int j) { return mu1 * Rat(-4) * (t + m.constant(j) + one); }) *
                chain(m, p, [&](int j) { return mu2 * Rat(-4) * (mm - m.constant(j) + a2); });
  r.raw_lower = chain(m, q, [&](int j) { return mu1 * Rat(-4) * (t - m.constant(j) + a1); }) *
                chain(m, p, [&](int j) { return mu2 * Rat(-4) * (mm + m.constant(j) + one); });
  MPoly closed_raise = (mu1 * Rat(-4)).pow(q) * (mu2 * Rat(4)).pow(p) * pochhammer(t + one, q) *
                       pochhammer(-u + t * m.k - a2, p);
  MPoly closed_lower = (mu1 * Rat(4)).pow(q) * (mu2 * Rat(-4)).pow(p) * pochhammer(-t - a1, q) *
                       pochhammer(u - t * m.k + one, p);
  require_equal(r.raw_raise, closed_raise, "caged raising action");
  require_equal(r.raw_lower, closed_lower, "caged lowering action");
  r.checks.push_back("D+(mu1,x)^q D-(mu2,y)^p and D-(mu1,x)^q D+(mu2,y)^p reproduce the closed-form actions");
  MPoly model_section = (mu1 * Rat(-4)).pow(q) * (mu2 * Rat(4)).pow(p) * pochhammer(-t - a1, q) *
                        pochhammer(-u - t * m.k + one, p);
  if (!(model_section == closed_lower))
    r.notes.push_back("the model-section lowering coefficient (-4mu1)^q(4mu2)^p(-t-a1)_q(-u-kt+1)_p differs from the "
                      "eigenbasis action (4mu1)^q(-4mu2)^p(-t-a1)_q(u-kt+1)_p; the eigenbasis action is used");
  r.raise = r.raw_raise;
  r.lower = r.raw_lower;
  return r;
}

// Jacobi ladders J+- in x and radial ladders K+- in R, written in n = s - (a+b+1)/2.
Actions ttw_actions(const SystemModel& m) {
  const int p = m.p, q = m.q;
  const Rat k = m.k;
  const std::string wname = m.id == SystemId::KeplerDeformed ? "w" : "omega";
  MPoly s = m.var("s"), u = m.var("u"), a = m.var("a"), b = m.var("b"), om = m.var(wname);
  MPoly one = m.constant(1);
  MPoly h = (a + b + one) * rat(1, 2);
  MPoly n = s - h;
  MPoly A = (n * Rat(2) + a + b + one) * k;
  MPoly mm = u - n * k;
  Actions r;
  // J+_n X_n = 2(n+1)(n+a+b+1) X_{n+1};  K+_{A,m} Y = -omega Y^{A+2}_{m-1}
  r.raw_raise = chain(m, q, [&](int j) {
                  MPoly nj = n + m.constant(j);
                  return (nj + one) * (nj + a + b + one) * Rat(2);
                }) *
                chain(m, p, [&](int) { return -om; });
  // J-_n X_n = 2(n+a)(n+b) X_{n-1};  K-_{A,m} Y = -omega (m+1)(m+A) Y^{A-2}_{m+1}
  r.raw_lower = chain(m, q, [&](int j) {
                  MPoly nj = n - m.constant(j);
                  return (nj + a) * (nj + b) * Rat(2);
                }) *
                chain(m, p, [&](int j) {
                  MPoly Aj = A - m.constant(2 * j), mj = mm + m.constant(j);
                  return -om * (mj + one) * (mj + Aj);
                });
  MPoly two_q = m.constant(Rat(1u << q));
  require_equal(r.raw_raise, two_q * sign_pow(p) * om.pow(p) * pochhammer(n + one, q) * pochhammer(n + a + b + one, q),
                "TTW raising action");
  require_equal(r.raw_lower,
                two_q * om.pow(p) * pochhammer(-n - a, q) * pochhammer(-n - b, q) * pochhammer(u - n * k + one, p) *
                    pochhammer(-u - (n + a + b + one) * k, p),
                "TTW lowering action");
  r.checks.push_back("J+^q K+^p and J-^q K-^p reproduce the closed-form raising and lowering actions");

  // Gauge Phi_n = g(n) Psi_n with g(n)/g(n-q) = (n-q+1)_q / ((-u-k(n+a+b+1))_p (-n-a)_q).
  auto ratio = [&](const MPoly& x) {
    return RFunc(pochhammer(x - m.constant(q) + one, q),
                 pochhammer(-u - (x + a + b + one) * k, p) * pochhammer(-x - a, q));
  };
  RFunc up = RFunc(r.raw_raise) / ratio(n + m.constant(q));  // times g(n)/g(n+q)
  RFunc dn = RFunc(r.raw_lower) * ratio(n);                   // times g(n)/g(n-q)
  MPoly c = two_q * sign_pow(q) * om.pow(p);
  auto rf = [&](const MPoly& x) {
    return pochhammer(x + (a - b + one) * rat(1, 2), q) * pochhammer(x + h, q) * pochhammer(u + (x + h) * k + one, p);
  };
  MPoly model_up = c * rf(s), model_dn = c * rf(-s);
  if (!(up == RFunc(model_up)) || !(dn == RFunc(model_dn)))
    throw ConstructionMismatch("TTW gauge does not produce the model coefficients: " + up.to_string() + " / " +
                               dn.to_string());
  r.checks.push_back("the gauge g(n)/g(n-q) maps the eigenbasis actions to the model coefficients in s");
  r.raise = model_up;
  r.lower = model_dn;
  return r;
}

}  // namespace

LadderPair build_ladders(const SystemModel& m) {
  Actions a;
  switch (m.id) {
    case SystemId::Sphere: a = sphere_actions(m); break;
    case SystemId::ComplexEuclidean: a = ce_actions(m); break;
    case SystemId::CagedOscillator: a = caged_actions(m); break;
    case SystemId::TTW:
    case SystemId::KeplerDeformed: a = ttw_actions(m); break;
  }
  LadderPair lp{ShiftOp::single(m.syms, m.index, m.step, a.raise),
                ShiftOp::single(m.syms, m.index, -m.step, a.lower),
                a.raise,
                a.lower,
                a.raw_raise,
                a.raw_lower,
                RFunc(a.raise) / RFunc(a.raw_raise),
                std::move(a.checks),
                std::move(a.notes)};
  // A gauge must be a diagonal conjugation: lower/raw_lower = 1/gauge(x - step).
  RFunc lower_gauge = RFunc(a.lower) / RFunc(a.raw_lower);
  if (!(lower_gauge * lp.gauge.shifted(m.index, Rat(-m.step)) == RFunc(m.constant(1))))
    throw ConstructionMismatch("gauge is not a diagonal conjugation for " + system_name(m.id));
  if (!lp.gauge.is_constant() || lp.gauge.num().constant_value() != 1)
    lp.checks.push_back("model ladders are a diagonal conjugation of the eigenbasis actions (products unchanged)");

  if (m.has_reflection) {
    if (m.id == SystemId::ComplexEuclidean) {
      // Omega -> -Omega with the sign character: lower(-Omega) = (-1)^(p+q) raise(Omega).
      if (!(shift::reflect(lp.lower, m.center, m.twist, m.twist_step) == lp.raise.scaled(m.twist)))
        throw ConstructionMismatch("complex-Euclidean ladders are not exchanged by Omega -> -Omega");
      lp.checks.push_back("Phi-(-Omega) = (-1)^(p+q) Phi+(Omega)");
    } else {
      if (!(shift::reflect(lp.raise, m.center, m.twist, m.twist_step) == lp.lower))
        throw ConstructionMismatch("reflection does not map raise to lower for " + system_name(m.id));
      lp.checks.push_back("reflection about " + m.center.to_string() + " maps raise to lower" +
                          (m.twist == 1 ? std::string() : " (with sign character " + exact::to_string(m.twist) + ")"));
    }
  }
  return lp;
}

int polynomial_parity(const SystemModel& m, const ShiftOp& op, int max_power, int input_parity) {
  MPoly x = m.var(m.syms->name(m.index)) - m.center;
  int parity = 0;
  for (int j = 0; j <= max_power; ++j) {
    RFunc image = shift::apply_transpose(op, RFunc(x.pow(2 * j + (input_parity < 0 ? 1 : 0))));
    if (!image.is_polynomial())
      throw exact::NotDivisible("image of a polynomial keeps a denominator: " + image.to_string());
    MPoly centered = image.as_polynomial();
    centered = m.center.is_constant() ? centered.shifted(m.index, m.center.constant_value())
                                      : centered.substitute(m.index, m.var(m.syms->name(m.index)) + m.center);
    int pj = exact::is_even_in(centered, m.index) ? 1 : exact::is_odd_in(centered, m.index) ? -1 : 0;
    if (centered.is_zero()) continue;
    if (pj == 0 || (parity != 0 && pj != parity))
      throw exact::NotEven("image has no definite parity: " + image.to_string());
    parity = pj;
  }
  return parity == 0 ? 1 : parity;
}

SymmetricPair symmetrize(const SystemModel& m, const LadderPair& lp) {
  SymmetricPair r{m.zero(), m.zero(), {}};
  ShiftOp lower = m.id == SystemId::ComplexEuclidean ? lp.lower.scaled(m.twist) : lp.lower;
  r.L3 = lp.raise + lower;
  r.L4 = lp.raise - lower;
  if (m.id != SystemId::CagedOscillator) r.L4 = r.L4.right_divided(RFunc(m.centered));

  if (m.has_reflection) {
    for (const auto* op : {&r.L3, &r.L4}) {
      if (!(shift::reflect(*op, m.center, m.twist, m.twist_step) == *op))
        throw exact::NotEven("symmetrized operator is not reflection invariant: " + op->to_string());
    }
    r.checks.push_back("L3 and L4 are invariant under the reflection");
  }
  switch (m.id) {
    case SystemId::TTW:
    case SystemId::KeplerDeformed:
      if (polynomial_parity(m, r.L3) != 1 || polynomial_parity(m, r.L4) != 1)
        throw exact::NotEven("TTW model operators do not preserve polynomials in s^2");
      r.checks.push_back("L3 and L4 map polynomials in s^2 to polynomials in s^2");
      break;
    case SystemId::ComplexEuclidean: {
      // L3 carries even functions to parity (-1)^(p+q); L4 carries that parity back to even.
      const int eps = m.twist == 1 ? 1 : -1;
      if (polynomial_parity(m, r.L3) != eps || polynomial_parity(m, r.L4, 3, eps) != 1)
        throw exact::NotEven("complex-Euclidean operators do not have the expected parity");
      r.checks.push_back(std::string("L3 maps even polynomials in Omega to ") + (eps == 1 ? "even" : "odd") +
                         " polynomials and L4 maps those back to even polynomials");
      break;
    }
    case SystemId::CagedOscillator: {
      for (int j = 0; j <= 3; ++j)
        for (const auto* op : {&r.L3, &r.L4})
          if (!shift::apply_transpose(*op, RFunc(m.var("t").pow(j))).is_polynomial())
            throw exact::NotDivisible("caged operator image is not polynomial");
      r.checks.push_back("L3 and L4 map polynomials in t to polynomials");
      break;
    }
    case SystemId::Sphere: break;
  }
  return r;
}

}  // namespace ladder::systems
