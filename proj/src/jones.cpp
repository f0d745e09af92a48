#include "braid3/jones.hpp"

#include <stdexcept>

namespace braid3 {

LinkProfile link_profile(const BraidWord& w) {
  // total permutation: letter with index i swaps positions i-1, i
  std::array<int, 3> strandAt = {0, 1, 2};  // strandAt[pos] = strand id
  std::array<std::array<int, 3>, 3> half{};  // signed crossing counts between strands
  for (const auto& l : w.letters) {
    int p = l.index - 1;
    int s = strandAt[static_cast<size_t>(p)], t = strandAt[static_cast<size_t>(p + 1)];
    half[static_cast<size_t>(s)][static_cast<size_t>(t)] += l.sign;
    half[static_cast<size_t>(t)][static_cast<size_t>(s)] += l.sign;
    std::swap(strandAt[static_cast<size_t>(p)], strandAt[static_cast<size_t>(p + 1)]);
  }
  // components = cycles of strand -> strandAt position map
  std::array<int, 3> comp = {-1, -1, -1};
  int nc = 0;
  for (int s = 0; s < 3; ++s) {
    if (comp[static_cast<size_t>(s)] >= 0) continue;
    int cur = s;
    while (comp[static_cast<size_t>(cur)] < 0) {
      comp[static_cast<size_t>(cur)] = nc;
      // the strand starting at top position `cur` ends at the bottom position
      // where it sits, which the closure joins to top position of same index
      int endPos = 0;
      for (int p = 0; p < 3; ++p)
        if (strandAt[static_cast<size_t>(p)] == cur) endPos = p;
      cur = endPos;
    }
    ++nc;
  }
  LinkProfile out;
  out.components = nc;
  for (int s = 0; s < 3; ++s) {
    for (int t = s + 1; t < 3; ++t) {
      int cs = comp[static_cast<size_t>(s)], ct = comp[static_cast<size_t>(t)];
      if (cs == ct) continue;
      int i = std::min(cs, ct), j = std::max(cs, ct);
      out.linking[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
          half[static_cast<size_t>(s)][static_cast<size_t>(t)];
    }
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      int& v = out.linking[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (v % 2 != 0) throw std::logic_error("inter-component crossing count must be even");
      v /= 2;
    }
  return out;
}

ZLaurent jones_from_trace(const ZLaurent& trace, int exponentSum) {
  if (trace.var() != Var::t && !trace.is_zero())
    throw std::invalid_argument("trace must be a polynomial in t");
  ZLaurent trq = trace.with_doubled_exponents(Var::q);
  ZLaurent inner = ZLaurent::term(Var::q, 2, 1) * trq + ZLaurent::constant(Var::q, 1) +
                   ZLaurent::term(Var::q, 4, 1);
  return neg_var_power(Var::q, exponentSum - 2) * inner;
}

ZLaurent jones_via_burau(const BraidWord& w) {
  return jones_from_trace(burau_trace(w), w.exponent_sum());
}

ZLaurent skein_residual(const BraidWord& w, int pos) {
  if (pos < 0 || static_cast<size_t>(pos) >= w.size()) throw std::invalid_argument("position out of range");
  BraidWord plus = w, minus = w;
  plus[static_cast<size_t>(pos)].sign = 1;
  minus[static_cast<size_t>(pos)].sign = -1;
  BraidWord zero = delete_letter(w, pos);
  ZLaurent vp = jones_via_burau(plus);
  ZLaurent vm = jones_via_burau(minus);
  ZLaurent v0 = jones_via_burau(zero);
  ZLaurent z = ZLaurent::term(Var::q, 1, 1) + ZLaurent::term(Var::q, -1, -1);
  return ZLaurent::term(Var::q, -2, 1) * vp - ZLaurent::term(Var::q, 2, 1) * vm - z * v0;
}

bool is_unknot_closure(const BraidWord& w) {
  ZLaurent v = jones_via_burau(w);
  bool byJones = (v == ZLaurent::constant(Var::q, 1));
  int s = w.exponent_sum();
  if (s == 2 || s == -2) {
    ZLaurent tr = burau_trace(w);
    bool byTrace = (tr == neg_var_power(Var::t, s / 2));
    if (byTrace != byJones)
      throw std::logic_error("unknot criteria disagree between trace and Jones");
  }
  return byJones;
}

}  // namespace braid3
