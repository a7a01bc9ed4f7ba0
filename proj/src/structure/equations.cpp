#include "ladder/structure/equations.hpp"

namespace ladder::structure {

using systems::SystemId;

std::string kind_name(EquationKind k) {
  switch (k) {
    case EquationKind::Displayed: return "displayed";
    case EquationKind::Corrected: return "corrected";
    case EquationKind::Candidate: return "candidate";
    case EquationKind::Convention: return "convention";
    case EquationKind::Example: return "example";
    case EquationKind::Derived: return "derived";
  }
  return "derived";
}

namespace {

using K = EquationKind;

std::vector<EquationSpec> sphere_equations(const SystemModel& m) {
  const Rat k = m.k, q = Rat(m.q);
  const Rat k2 = k * k, qk2 = q * k2, q2k2 = q * q * k2;
  auto R = [=](const auto& o) { return Rat(-2 * qk2) * o("L3") - q2k2 * o("L4"); };
  const std::vector<std::string> base{"L2", "L3", "L4"};
  const std::vector<std::string> full{"L2", "L3", "L4", "P+", "P-"};
  std::vector<EquationSpec> eqs;
  eqs.push_back(make_equation("[L2,L4] = R", "[L2,L4] = -2qk^2 L3 - q^2k^2 L4", K::Displayed, base,
                              [=](const auto& o) { return comm(o("L2"), o("L4")) - R(o); }));
  eqs.push_back(make_equation("[L2,L3] first form", "[L2,L3] = -q^2k^2 L3 + 2q L4 L2", K::Displayed, base,
                              [=](const auto& o) {
                                return comm(o("L2"), o("L3")) - (Rat(-q2k2) * o("L3") + Rat(2 * q) * (o("L4") * o("L2")));
                              }));
  eqs.push_back(make_equation("[L2,L3] symmetrized form", "[L2,L3] = q^2k^2 L3 + q^3k^2 L4 + q{L2,L4}", K::Displayed,
                              base, [=](const auto& o) {
                                return comm(o("L2"), o("L3")) -
                                       (q2k2 * o("L3") + Rat(q * q2k2) * o("L4") + q * acomm(o("L2"), o("L4")));
                              }));
  eqs.push_back(make_equation("[L3,L4]", "[L3,L4] = q L4^2 - 2P-(H,L2)", K::Displayed, full, [=](const auto& o) {
    return comm(o("L3"), o("L4")) - (q * (o("L4") * o("L4")) - Rat(2) * o("P-"));
  }));
  eqs.push_back(make_equation("L4^2 L2", "L4^2 L2 = -k^2 L3^2 + qk^2 L4 L3 + 2k^2 P+(H,L2)", K::Displayed, full,
                              [=](const auto& o) {
                                return o("L4") * o("L4") * o("L2") -
                                       (Rat(-k2) * (o("L3") * o("L3")) + qk2 * (o("L4") * o("L3")) + Rat(2 * k2) * o("P+"));
                              }));
  auto sym_rhs = [=](const auto& o, Rat c44, Rat cm) {
    return Rat(-6 * k2) * (o("L3") * o("L3")) + c44 * (o("L4") * o("L4")) + Rat(-3 * qk2) * acomm(o("L3"), o("L4")) +
           cm * o("P-") + Rat(12 * k2) * o("P+");
  };
  eqs.push_back(make_equation(
      "{L4,L4,L2}", "{L4,L4,L2} = -6k^2 L3^2 - q^2k^2 L4^2 - 3qk^2{L3,L4} - 10qk^2 P-(H,L2) + 12k^2 P+(H,L2)",
      K::Displayed, full,
      [=](const auto& o) { return sym3(o("L4"), o("L4"), o("L2")) - sym_rhs(o, Rat(-q2k2), Rat(-10 * qk2)); }));
  eqs.push_back(make_equation(
      "{L4,L4,L2} corrected", "{L4,L4,L2} = -6k^2 L3^2 - 7q^2k^2 L4^2 - 3qk^2{L3,L4} + 2qk^2 P- + 12k^2 P+",
      K::Corrected, full,
      [=](const auto& o) { return sym3(o("L4"), o("L4"), o("L2")) - sym_rhs(o, Rat(-7 * q2k2), Rat(2 * qk2)); },
      "obtained from L4^2 L2, [L2,L4] = R, [L3,L4] and [L4,R] by symmetrizing"));
  eqs.push_back(make_equation("[L2,R]", "[L2,R] = -2q^2k^2{L2,L4} - q^4k^4 L4", K::Displayed, base,
                              [=](const auto& o) {
                                return comm(o("L2"), R(o)) -
                                       (Rat(-2 * q2k2) * acomm(o("L2"), o("L4")) - Rat(q2k2 * q2k2) * o("L4"));
                              }));
  eqs.push_back(make_equation("[L4,R]", "[L4,R] = 2q^2k^2 L4^2 - 4qk^2 P-(H,L2)", K::Displayed, full,
                              [=](const auto& o) {
                                return comm(o("L4"), R(o)) - (Rat(2 * q2k2) * (o("L4") * o("L4")) - Rat(4 * qk2) * o("P-"));
                              }));
  auto casimir = [=](const auto& o, Rat c44, Rat cm) {
    auto r = R(o);
    return Rat(Rat(3) / (2 * q2k2)) * (r * r) + sym3(o("L4"), o("L4"), o("L2")) + c44 * (o("L4") * o("L4")) +
           Rat(-12 * k2) * o("P+") + cm * o("P-");
  };
  eqs.push_back(make_equation(
      "Casimir", "3R^2/(2q^2k^2) + {L4,L4,L2} - (q^2k^2/2) L4^2 - 12k^2 P+(H,L2) + 10qk^2 P-(H,L2) = 0", K::Displayed,
      full, [=](const auto& o) { return casimir(o, Rat(-q2k2 / 2), Rat(10 * qk2)); }));
  eqs.push_back(make_equation(
      "Casimir corrected", "3R^2/(2q^2k^2) + {L4,L4,L2} + (11/2)q^2k^2 L4^2 - 12k^2 P+ - 2qk^2 P- = 0", K::Corrected,
      full, [=](const auto& o) { return casimir(o, Rat(11 * q2k2 / 2), Rat(-2 * qk2)); },
      "follows from the corrected symmetrizer relation"));
  if (m.p == 1 && m.q == 1)
    eqs.push_back(make_equation("worked example", "2L3 + L4 = [L4,L2]", K::Example, base, [=](const auto& o) {
      return Rat(2) * o("L3") + o("L4") - comm(o("L4"), o("L2"));
    }));
  if (m.p == 1 && m.q == 2)
    eqs.push_back(make_equation("worked example", "L3 + L4 = [L4,L2]", K::Example, base,
                                [=](const auto& o) { return o("L3") + o("L4") - comm(o("L4"), o("L2")); }));
  return eqs;
}

std::vector<EquationSpec> ce_equations(const SystemModel& m) {
  const Rat p = Rat(m.p), p2 = p * p, p4 = p2 * p2;
  const unsigned up = static_cast<unsigned>(m.p);
  const Rat sign_q = Rat(m.q % 2 ? -1 : 1);
  auto R = [=](const auto& o) { return Rat(2 * p) * o("L3") + p2 * o("L4"); };
  const std::vector<std::string> base{"L2", "L3", "L4"};
  const std::vector<std::string> withH{"L2", "L3", "L4", "H"};
  std::vector<EquationSpec> eqs;
  eqs.push_back(make_equation("[L2,L4] = R", "[L2,L4] = R, R = 2p L3 + p^2 L4", K::Displayed, base,
                              [=](const auto& o) { return comm(o("L2"), o("L4")) - R(o); }));
  eqs.push_back(make_equation("[L2,R]", "[L2,R] = 2p^2{L2,L4} - p^4 L4", K::Displayed, base, [=](const auto& o) {
    return comm(o("L2"), R(o)) - (Rat(2 * p2) * acomm(o("L2"), o("L4")) - p4 * o("L4"));
  }));
  eqs.push_back(make_equation("[L4,R]", "[L4,R] = -2p^2 L4^2", K::Displayed, base, [=](const auto& o) {
    return comm(o("L4"), R(o)) + Rat(2 * p2) * (o("L4") * o("L4"));
  }));
  // Everything except the energy term; the term is supplied per reading.
  auto core = [=](const auto& o) {
    auto r = R(o);
    return r * r + Rat(-2 * p2 / 3) * sym3(o("L2"), o("L4"), o("L4")) + Rat(11 * p4 / 3) * (o("L4") * o("L4"));
  };
  const Rat c16 = 16 * p2;
  eqs.push_back(make_equation("Casimir", "R^2 - (2p^2/3){L2,L4,L4} + (11/3)p^4 L4^2 + 16p^2 H^{2p} = 0", K::Displayed,
                              withH, [=](const auto& o) { return core(o) + c16 * pow_op(o("H"), 2 * up); },
                              "read with H = -beta^2 (the energy of the separated Bessel model); H^{2p} is the same for "
                              "H = +beta^2"));
  eqs.push_back(make_equation("Casimir candidate H^p, H = -beta^2", "... + 16p^2 H^p = 0, H = -beta^2", K::Candidate,
                              withH, [=](const auto& o) { return core(o) + c16 * pow_op(o("H"), up); }));
  eqs.push_back(make_equation("Casimir candidate H^p, H = +beta^2", "... + 16p^2 H^p = 0, H = +beta^2", K::Candidate,
                              withH, [=](const auto& o) { return core(o) + c16 * pow_op(Rat(-1) * o("H"), up); }));
  eqs.push_back(make_equation("Casimir candidate -H^{2p}", "... - 16p^2 H^{2p} = 0", K::Candidate, withH,
                              [=](const auto& o) { return core(o) - c16 * pow_op(o("H"), 2 * up); }));
  eqs.push_back(make_equation("Casimir corrected", "R^2 - (2p^2/3){L2,L4,L4} + (11/3)p^4 L4^2 - 16p^2 (-1)^q H^p = 0",
                              K::Corrected, withH,
                              [=](const auto& o) { return core(o) - Rat(c16 * sign_q) * pow_op(o("H"), up); },
                              "H = -beta^2; the residual without an energy term is 16p^2 (-1)^(p+q) beta^(2p)"));
  if (m.p == 1 && m.q == 1)
    eqs.push_back(make_equation("worked example", "[L2,L4] = 2L3 + L4", K::Example, base, [=](const auto& o) {
      return comm(o("L2"), o("L4")) - (Rat(2) * o("L3") + o("L4"));
    }));
  if (m.p == 2 && m.q == 1)
    eqs.push_back(make_equation("worked example", "[L2,L4] = 4(L3 + L4)", K::Example, base, [=](const auto& o) {
      return comm(o("L2"), o("L4")) - Rat(4) * (o("L3") + o("L4"));
    }));
  return eqs;
}

std::vector<EquationSpec> caged_equations(const SystemModel& m) {
  const Rat pq = Rat(m.p * m.q);
  const std::vector<std::string> base{"L1", "L3", "L4", "mu"};
  const std::vector<std::string> full{"L1", "L3", "L4", "mu", "P1", "P2"};
  auto R = [=](const auto& o) { return comm(o("L1"), o("L3")); };
  std::vector<EquationSpec> eqs;
  eqs.push_back(make_equation("[L1,Phi+]", "[L1,Phi+] = -4pq mu Phi+", K::Displayed, {"L1", "raise", "mu"},
                              [=](const auto& o) {
                                return comm(o("L1"), o("raise")) + Rat(4 * pq) * (o("mu") * o("raise"));
                              },
                              "displayed with the label L2; the diagonal operator of the model is L1"));
  eqs.push_back(make_equation("[L1,Phi-]", "[L1,Phi-] = 4pq mu Phi-", K::Derived, {"L1", "lower", "mu"},
                              [=](const auto& o) {
                                return comm(o("L1"), o("lower")) - Rat(4 * pq) * (o("mu") * o("lower"));
                              }));
  eqs.push_back(make_equation("[L1,L3]", "[L1,L3] = -4 mu pq L4", K::Displayed, base, [=](const auto& o) {
    return comm(o("L1"), o("L3")) + Rat(4 * pq) * (o("mu") * o("L4"));
  }));
  eqs.push_back(make_equation("[L1,L4]", "[L1,L4] = -4 mu pq L3", K::Displayed, base, [=](const auto& o) {
    return comm(o("L1"), o("L4")) + Rat(4 * pq) * (o("mu") * o("L3"));
  }));
  eqs.push_back(make_equation("[L3,L4]", "[L3,L4] = -2P1(H,L1) + 2P2(H,L1)", K::Displayed, full, [=](const auto& o) {
    return comm(o("L3"), o("L4")) - (Rat(-2) * o("P1") + Rat(2) * o("P2"));
  }));
  eqs.push_back(make_equation("L3^2", "L3^2 = L4^2 + 2P1(H,L1) + 2P2(H,L1)", K::Displayed, full, [=](const auto& o) {
    return o("L3") * o("L3") - (o("L4") * o("L4") + Rat(2) * o("P1") + Rat(2) * o("P2"));
  }));
  eqs.push_back(make_equation("[L1,R]", "[L1,R] = 16 mu^2 p^2 q^2 L3, R = [L1,L3]", K::Displayed, base,
                              [=](const auto& o) {
                                return comm(o("L1"), R(o)) - Rat(16 * pq * pq) * (o("mu") * o("mu") * o("L3"));
                              }));
  eqs.push_back(make_equation("[L3,R]", "[L3,R] = 8 mu pq P1(H,L1) - 8 mu pq P2(H,L1)", K::Displayed, full,
                              [=](const auto& o) {
                                return comm(o("L3"), R(o)) - Rat(8 * pq) * (o("mu") * (o("P1") - o("P2")));
                              }));
  eqs.push_back(make_equation("Casimir", "R^2/(16 mu^2 p^2 q^2) = L3^2 - 2P1(H,L1) - 2P2(H,L1)", K::Displayed, full,
                              [=](const auto& o) {
                                auto r = R(o);
                                auto rhs = o("L3") * o("L3") - Rat(2) * o("P1") - Rat(2) * o("P2");
                                return r * r - Rat(16 * pq * pq) * (o("mu") * o("mu") * rhs);
                              },
                              "checked multiplied through by 16 mu^2 p^2 q^2"));
  if (m.p == 1 && m.q == 1) {
    eqs.push_back(make_equation("worked example [L1,L3]", "[L1,L3] = -4 mu L4", K::Example, base, [=](const auto& o) {
      return comm(o("L1"), o("L3")) + Rat(4) * (o("mu") * o("L4"));
    }));
    eqs.push_back(make_equation("worked example [L1,L4]", "[L1,L4] = -4 mu L3", K::Example, base, [=](const auto& o) {
      return comm(o("L1"), o("L4")) + Rat(4) * (o("mu") * o("L3"));
    }));
  }
  return eqs;
}

// TTW and its Stackel image share the relations; only the displayed subset and
// the argument list of the P-polynomials differ.
std::vector<EquationSpec> ttw_equations(const SystemModel& m) {
  const bool kepler = m.id == SystemId::KeplerDeformed;
  const Rat k = m.k, q = Rat(m.q);
  const Rat k2q = k * k * q, k2q2 = k2q * q;
  const std::string args = kepler ? "(16Z^2,L2,4H',a,b)" : "(H^2,L2,omega^2,a,b)";
  auto R = [=](const auto& o) { return Rat(-4 * k2q) * o("L3") - Rat(4 * k2q2) * o("L4"); };
  const std::vector<std::string> base{"L2", "L3", "L4"};
  const std::vector<std::string> full{"L2", "L3", "L4", "P+", "P-"};
  const K kd = kepler ? K::Derived : K::Displayed;  // relations printed only for TTW
  std::vector<EquationSpec> eqs;
  eqs.push_back(make_equation("[L2,L4] explicit", "[L2,L4] = -4k^2q L3 - 4k^2q^2 L4", kd, base,
                              [=](const auto& o) { return comm(o("L2"), o("L4")) - R(o); }));
  eqs.push_back(make_equation("[L2,L3]", "[L2,L3] = 2q{L2,L4} + 4k^2q^2 L3 + 8k^2q^3 L4", kd, base,
                              [=](const auto& o) {
                                return comm(o("L2"), o("L3")) - (Rat(2 * q) * acomm(o("L2"), o("L4")) +
                                                                 Rat(4 * k2q2) * o("L3") + Rat(8 * k2q2 * q) * o("L4"));
                              }));
  auto l34 = [=](const auto& o, const std::string& pm) {
    return comm(o("L3"), o("L4")) - (Rat(2 * q) * (o("L4") * o("L4")) - Rat(2) * o(pm));
  };
  eqs.push_back(make_equation("[L3,L4]", "[L3,L4] = 2q L4^2 - 2P-" + args, kd, full,
                              [=](const auto& o) { return l34(o, "P-"); }));
  if (!kepler)
    eqs.push_back(make_equation("[L3,L4] with P- as defined", "[L3,L4] = 2q L4^2 - 2P-, P- = (xi - eta)/(2n+a+b+1)",
                                K::Convention, {"L2", "L3", "L4", "P-def"},
                                [=](const auto& o) { return l34(o, "P-def"); },
                                "the displayed relations hold with P- = (eta - xi)/(2n+a+b+1)"));
  eqs.push_back(make_equation(
      "Casimir (first form)",
      "6k^2 L3^2 + {L2,L4,L4} + 6k^2q{L3,L4} + 28k^2q^2 L4^2 - 4k^2q P-" + args + " - 12k^2 P+" + args + " = 0", kd, full,
      [=](const auto& o) {
        return Rat(6 * k2q / q) * (o("L3") * o("L3")) + sym3(o("L2"), o("L4"), o("L4")) +
               Rat(6 * k2q) * acomm(o("L3"), o("L4")) + Rat(28 * k2q2) * (o("L4") * o("L4")) + Rat(-4 * k2q) * o("P-") +
               Rat(-12 * k2q / q) * o("P+");
      }));
  eqs.push_back(make_equation("[L2,L4] = R", "[L2,L4] = R, R = -4k^2q L3 - 4k^2q^2 L4", K::Displayed, base,
                              [=](const auto& o) { return comm(o("L2"), o("L4")) - R(o); }));
  eqs.push_back(make_equation("[L2,R]", "[L2,R] = -8k^2q^2{L2,L4} - 16k^4q^4 L4", K::Displayed, base,
                              [=](const auto& o) {
                                return comm(o("L2"), R(o)) -
                                       (Rat(-8 * k2q2) * acomm(o("L2"), o("L4")) - Rat(16 * k2q2 * k2q2) * o("L4"));
                              }));
  eqs.push_back(make_equation("[L4,R]", "[L4,R] = 8k^2q^2 L4^2 - 8k^2q P-" + args, K::Displayed, full,
                              [=](const auto& o) {
                                return comm(o("L4"), R(o)) - (Rat(8 * k2q2) * (o("L4") * o("L4")) - Rat(8 * k2q) * o("P-"));
                              }));
  eqs.push_back(make_equation(
      "Casimir",
      "(3/(8k^2q^2)) R^2 + 22k^2q^2 L4^2 + {L2,L4,L4} - 4k^2q P-" + args + " - 12k^2 P+" + args + " = 0",
      K::Displayed, full, [=](const auto& o) {
        auto r = R(o);
        return Rat(Rat(3) / (8 * k2q2)) * (r * r) + Rat(22 * k2q2) * (o("L4") * o("L4")) +
               sym3(o("L2"), o("L4"), o("L4")) + Rat(-4 * k2q) * o("P-") + Rat(-12 * k2q / q) * o("P+");
      }));
  if (!kepler && m.p == 1 && m.q == 1)
    eqs.push_back(make_equation("worked example", "[L2,L4] = -4(L3 + L4)", K::Example, base, [=](const auto& o) {
      return comm(o("L2"), o("L4")) + Rat(4) * (o("L3") + o("L4"));
    }));
  return eqs;
}

}  // namespace

std::vector<EquationSpec> equation_specs(const SystemModel& m) {
  switch (m.id) {
    case SystemId::Sphere: return sphere_equations(m);
    case SystemId::ComplexEuclidean: return ce_equations(m);
    case SystemId::CagedOscillator: return caged_equations(m);
    case SystemId::TTW:
    case SystemId::KeplerDeformed: return ttw_equations(m);
  }
  return {};
}

}  // namespace ladder::structure
