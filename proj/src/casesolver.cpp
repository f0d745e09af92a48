#include "braid3/casesolver.hpp"

#include <cstdlib>
#include <stdexcept>

namespace braid3 {

namespace {

BraidWord sandwich(int leftSign, int innerLen, int rightSign) {
  BraidWord w;
  w.letters.push_back({1, leftSign});
  int s = innerLen >= 0 ? 1 : -1;
  for (int i = 0; i < std::abs(innerLen); ++i) w.letters.push_back({2, s});
  w.letters.push_back({1, rightSign});
  return w;
}

std::optional<ZLaurent> to_integer_laurent(const QLaurent& p) {
  ZLaurent out = ZLaurent::zero(p.var());
  for (const auto& [e, c] : p.terms()) {
    if (denominator(c) != 1) return std::nullopt;
    out += ZLaurent::term(p.var(), e, numerator(c));
  }
  return out;
}

RationalFunction rf(const ZLaurent& p) { return RationalFunction(to_rational_poly(p)); }

}  // namespace

CaseSpec build_case(int caseId, int n) {
  if (caseId < 1 || caseId > 3) throw std::invalid_argument("case id must be 1, 2 or 3");
  if (n < 1) throw std::invalid_argument("inner syllable length must be positive");
  CaseSpec spec;
  spec.caseId = caseId;
  spec.n = n;
  int left = (caseId == 1) ? 1 : -1;
  int right = (caseId == 3) ? -1 : 1;
  spec.visible = sandwich(left, n, right);
  spec.switchedWords = {sandwich(-left, n, right), sandwich(left, n - 2, right),
                        sandwich(left, n, -right)};
  spec.requiredTraces = {neg_var_power(Var::t, -left), neg_var_power(Var::t, -1),
                         neg_var_power(Var::t, -right)};
  spec.detExponent = -(left + right + n);
  return spec;
}

CaseReport solve_case(int caseId, int n, int preimageMaxLen) {
  CaseReport rep;
  rep.spec = build_case(caseId, n);

  std::vector<std::array<RationalFunction, 4>> rows;
  std::vector<RationalFunction> rhs;
  for (size_t i = 0; i < rep.spec.switchedWords.size(); ++i) {
    BurauMatrix N = burau(rep.spec.switchedWords[i]);
    // tr([[a,b],[c,d]] N) = a N.a + b N.c + c N.b + d N.d
    rows.push_back({rf(N.a), rf(N.c), rf(N.b), rf(N.d)});
    rhs.push_back(rf(rep.spec.requiredTraces[i]));
  }
  LinearSolution sol = solve_affine(rows, rhs);
  if (sol.kind != LinearSolution::Line)
    throw std::runtime_error("trace system is not a line");
  rep.line = sol.line;
  const auto& base = sol.line->base;
  const auto& dir = sol.line->direction;

  RationalFunction A = dir[0] * dir[3] - dir[1] * dir[2];
  RationalFunction B = base[0] * dir[3] + base[3] * dir[0] - base[1] * dir[2] - base[2] * dir[1];
  RationalFunction C =
      base[0] * base[3] - base[1] * base[2] - rf(neg_var_power(Var::t, rep.spec.detExponent));
  rep.quadratic = {A, B, C};

  rep.discriminant = B * B - RationalFunction::constant(Var::t, 4) * A * C;
  QLaurent G = rep.discriminant.num() * rep.discriminant.den();
  if (!G.is_zero()) rep.squarefreePart = squarefree_decompose(G).squarefree;

  std::vector<RationalFunction> rootValues;
  if (A.is_zero()) {
    rep.discriminantSquare = true;
    if (!B.is_zero()) rootValues.push_back(-C / B);
  } else {
    auto r = poly_sqrt(G);
    rep.discriminantSquare = r.has_value();
    if (r) {
      RationalFunction sq(*r, rep.discriminant.den());
      RationalFunction twoA = RationalFunction::constant(Var::t, 2) * A;
      rootValues.push_back((-B + sq) / twoA);
      if (!sq.is_zero()) rootValues.push_back((-B - sq) / twoA);
    }
  }

  for (const auto& v : rootValues) {
    CaseRoot root;
    root.value = v;
    Matrix2<RationalFunction> m{base[0] + v * dir[0], base[1] + v * dir[1],
                                base[2] + v * dir[2], base[3] + v * dir[3]};
    root.matrix = m;
    root.laurent =
        m.a.is_laurent() && m.b.is_laurent() && m.c.is_laurent() && m.d.is_laurent();
    if (root.laurent) {
      auto ia = to_integer_laurent(m.a.as_laurent());
      auto ib = to_integer_laurent(m.b.as_laurent());
      auto ic = to_integer_laurent(m.c.as_laurent());
      auto id = to_integer_laurent(m.d.as_laurent());
      if (ia && ib && ic && id)
        root.braid = preimage_search({*ia, *ib, *ic, *id}, preimageMaxLen);
    }
    rep.roots.push_back(std::move(root));
  }
  return rep;
}

}  // namespace braid3
