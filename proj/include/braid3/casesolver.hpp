#pragma once

#include <array>
#include <optional>
#include <vector>

#include "braid3/algebra.hpp"
#include "braid3/burau.hpp"
#include "braid3/word.hpp"

namespace braid3 {

// The three shapes of a visible subword with unknotted switches:
//   case 1:  s1      s2^n s1      (determinant (-t)^{-2-n})
//   case 2:  s1^-1   s2^n s1      (determinant (-t)^{-n})
//   case 3:  s1^-1   s2^n s1^-1   (determinant (-t)^{2-n})
struct CaseSpec {
  int caseId = 1;  // 1, 2 or 3
  int n = 1;       // inner syllable length, n >= 1
  BraidWord visible;
  std::vector<BraidWord> switchedWords;       // the three switched visible words
  std::vector<ZLaurent> requiredTraces;       // (-t)^{+-1} per constraint
  int detExponent = 0;                        // det M = (-t)^{detExponent}
};

CaseSpec build_case(int caseId, int n);

struct CaseRoot {
  RationalFunction value;                 // the free coordinate d
  bool laurent = false;                   // all entries of M lie in Z[t, t^-1]?
  std::optional<Matrix2<RationalFunction>> matrix;
  std::optional<BraidWord> braid;         // Burau preimage, when laurent
};

struct CaseReport {
  CaseSpec spec;
  std::optional<AffineLine> line;           // solution line of the trace system
  std::array<RationalFunction, 3> quadratic{};  // a s^2 + b s + c = 0 coefficients
  RationalFunction discriminant;
  QLaurent squarefreePart = QLaurent::zero(Var::t);  // of num*den of the discriminant
  bool discriminantSquare = false;
  std::vector<CaseRoot> roots;  // present only when the discriminant is square
};

CaseReport solve_case(int caseId, int n, int preimageMaxLen = 7);

}  // namespace braid3
