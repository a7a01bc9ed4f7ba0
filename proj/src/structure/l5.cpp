#include "ladder/structure/structure.hpp"

namespace ladder::structure {

using exact::rat;
using systems::SystemId;

namespace {

// Q from the pairing identities at the pole n0 = -(q+a+b+1)/2: the J-steps pair
// up as J-_{n+1} J+_n, the K-steps as K-_{A+2} K+_A; odd counts leave one
// unpaired factor.
MPoly q_from_pairs(const SystemModel& m) {
  const int p = m.p, q = m.q;
  MPoly a = m.var("a"), b = m.var("b"), E = m.var("E"), w = m.var("omega"), one = m.constant(1);
  MPoly n0 = -(m.constant(q) + a + b + one) * rat(1, 2);
  MPoly S = one;
  for (int j = 0; j < q / 2; ++j) {
    MPoly n = n0 + m.constant(j);
    S = S * (n + one) * (n + a + b + one) * (n + a + one) * (n + b + one) * Rat(4);
  }
  if (q % 2) S = S * (a * a - b * b) * rat(-1, 2);
  for (int i = 0; i < p / 2; ++i) {
    Rat A1 = Rat(-p + 2 * i + 1);
    // (omega^2/4)((E/(2 omega))^2 - (A+1)^2)
    S = S * (E * E * rat(1, 16) - w * w * Rat(A1 * A1 / 4));
  }
  if (p % 2) S = S * E * rat(-1, 4);
  return S * Rat(-2);
}

// The three displayed parity cases.
MPoly q_closed(const SystemModel& m, std::string& parity_case) {
  const int p = m.p, q = m.q;
  MPoly a = m.var("a"), b = m.var("b"), H = m.var("E"), w = m.var("omega"), one = m.constant(1);
  MPoly Pl = one;
  if (p % 2) {
    for (int l = 1; l <= (p - 1) / 2; ++l) Pl = Pl * (H * H * rat(-1, 16) + w * w * Rat(l * l));
  } else {
    for (int l = 1; l <= p / 2; ++l) Pl = Pl * (H * H * rat(-1, 16) + w * w * rat((2 * l - 1) * (2 * l - 1), 4));
  }
  MPoly ab = a * a - b * b;
  if (p % 2 == 1 && q % 2 == 0) {
    parity_case = "p odd, q even";
    MPoly prod = one;
    MPoly Q = m.constant(-q);
    for (int h = 0; h < q / 2; ++h) {
      MPoly c = Q + m.constant(2 * h + 1);
      prod = prod * (c - a - b) * (c + a + b) * (c + a - b) * (c - a + b) * rat(1, 4);
    }
    return H * rat(-1, 2) * Pl * prod;
  }
  MPoly qs = one;
  for (int t = 1; t <= (q - 1) / 2; ++t) {
    MPoly c = m.constant(2 * t);
    qs = qs * (c - a - b) * (c + a + b) * (c + a - b) * (c - a + b) * rat(1, 4);
  }
  if (p % 2) {
    parity_case = "p odd, q odd";
    return H * ab * rat(-1, 4) * Pl * qs;
  }
  parity_case = "p even, q odd";
  return ab * Pl * qs;
}

ShiftOp l5_operator(const SystemModel& m, const LadderPair& lp, const MPoly& Q) {
  const Rat q = Rat(m.q), c = Rat(4) * q * m.k * m.k;
  MPoly s = m.var("s");
  MPoly two_s = s * Rat(2), qq = m.constant(q);
  RFunc beta(-m.from_invariants_poly(Q), (two_s + qq) * (two_s - qq) * c);
  ShiftOp ladders = lp.raise.right_divided(RFunc((two_s + qq) * two_s)) + lp.lower.right_divided(RFunc((two_s - qq) * two_s));
  return ladders.scaled(Rat(-1 / c)) + m.diag(beta);
}

bool preserves_polynomials(const SystemModel& m, const ShiftOp& op) {
  try {
    return systems::polynomial_parity(m, op) == 1;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

L5Data build_L5(const StructureReport& r) {
  const SystemModel& m = r.model;
  if (m.id != SystemId::TTW) throw systems::UnsupportedSystem("L5 is constructed for the TTW model");
  L5Data d;
  const Rat k = m.k;
  MPoly E = m.var("E"), w = m.var("omega"), a = m.var("a"), b = m.var("b"), one = m.constant(1);

  // (i) Cancelling the pole at s = -q/2 of the raising part forces
  // Q = -2 * raise_coefficient(-q/2), with u expressed through the energy.
  MPoly at_pole = r.ladders.raise_action.evaluate(m.index, Rat(-m.q, 2));
  RFunc usub(-(E + w * Rat(2) * (one + (a + b + one) * k)), w * Rat(4));
  RFunc Qres = exact::substitute(at_pole * Rat(-2), m.sym("u"), usub);
  if (!Qres.is_polynomial()) throw PoleNotRemovable("residue condition does not give a polynomial Q: " + Qres.to_string());
  d.Q_residue = Qres.as_polynomial();
  d.Q_pair = q_from_pairs(m);
  d.Q_closed = q_closed(m, d.parity_case);
  d.residue_matches_pair = d.Q_residue == d.Q_pair;
  d.closed_matches = d.Q_closed == d.Q_pair;
  if (!d.closed_matches && !d.Q_pair.is_zero()) {
    RFunc ratio = RFunc(d.Q_closed) / RFunc(d.Q_pair);
    if (ratio.is_constant()) d.closed_ratio = ratio.num().constant_value();
  }
  if (!d.residue_matches_pair)
    d.notes.push_back("Q from the pole residue and Q from the pairing identities differ");
  if (!d.closed_matches)
    d.notes.push_back("the displayed closed form for Q in the case " + d.parity_case +
                      " differs from the residue-free Q" +
                      (d.closed_ratio ? " by the factor " + exact::to_string(*d.closed_ratio) : std::string()));

  d.L5 = l5_operator(m, r.ladders, d.Q_residue);
  MPoly s = m.var("s"), qq = m.constant(Rat(m.q));
  d.beta = RFunc(-m.from_invariants_poly(d.Q_residue), (s * Rat(2) + qq) * (s * Rat(2) - qq) * Rat(4 * m.q * k * k));
  d.commutator_is_L4 = comm(r.ops("L2"), d.L5) == r.ops("L4");
  d.polynomial = preserves_polynomials(m, d.L5);

  if (m.p == 1 && m.q == 1) {
    MPoly ab = a * a - b * b;
    MPoly Q_disp = E * ab * rat(1, 8);  // beta_n = -H(a^2-b^2)/(32(2n+a+b+2)(2n+a+b))
    ShiftOp L5_disp = l5_operator(m, r.ladders, Q_disp);
    if (!preserves_polynomials(m, L5_disp))
      d.notes.push_back("with the displayed beta_n = -H(a^2-b^2)/(32(2n+a+b+2)(2n+a+b)), L5 does not map polynomials "
                        "in s^2 to polynomials");
    auto relation = [&](const ShiftOp& L5, const Rat& c) {
      const OpSet<ShiftOp>& o = r.ops;
      ShiftOp constant = m.diag(m.from_invariants_poly(E * ab * c));
      return acomm(L5, o("L2")) + Rat(2) * L5 - rat(1, 2) * (o("L3") + o("L4")) - constant;
    };
    auto add = [&](std::string name, std::string display, EquationKind kind, ShiftOp residual, std::string note) {
      bool ok = residual.is_zero();
      d.checks.push_back({std::move(name), std::move(display), std::move(note), kind, std::move(residual), ok});
    };
    add("{L5,L2} relation", "{L5,L2} = -2L5 + (1/2)(L3+L4) + (H/16)(a^2-b^2)", EquationKind::Displayed,
        relation(L5_disp, rat(1, 16)), "L5 built with the displayed beta_n");
    add("{L5,L2} relation, residue-free beta", "{L5,L2} = -2L5 + (1/2)(L3+L4) + (H/16)(a^2-b^2)",
        EquationKind::Candidate, relation(d.L5, rat(1, 16)), "L5 with the residue-free beta");
    add("{L5,L2} relation corrected", "{L5,L2} = -2L5 + (1/2)(L3+L4) - (H/8)(a^2-b^2)", EquationKind::Corrected,
        relation(d.L5, rat(-1, 8)), "L5 with the residue-free beta");
  }
  return d;
}

void require_consistent(const L5Data& d) {
  if (!d.residue_matches_pair || !d.closed_matches)
    throw QMismatch("Q(H) derivations disagree (" + d.parity_case + ")");
  if (!d.polynomial || !d.commutator_is_L4) throw PoleNotRemovable("L5 keeps poles or fails [L2,L5] = L4");
}

}  // namespace ladder::structure
