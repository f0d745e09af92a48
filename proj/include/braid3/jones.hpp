#pragma once

#include <array>

#include "braid3/burau.hpp"
#include "braid3/laurent.hpp"
#include "braid3/word.hpp"

namespace braid3 {

// Oriented-link data of the closure that is cheap and exact: component count
// (cycles of the underlying permutation) and pairwise linking numbers.
// Components are labelled by their least strand (1-based), in increasing
// order; linking[i][j] pairs the i-th and j-th component in that order.
struct LinkProfile {
  int components = 0;
  std::array<std::array<int, 3>, 3> linking{};  // only [i][j], i<j<components used

  friend bool operator==(const LinkProfile& x, const LinkProfile& y) {
    return x.components == y.components && x.linking == y.linking;
  }
  friend bool operator!=(const LinkProfile& x, const LinkProfile& y) { return !(x == y); }
};

LinkProfile link_profile(const BraidWord& w);

// Jones polynomial of the closure (variable q, q^2 = t), computed from the
// reduced Burau trace:  V = (-q)^{e-2} (t tr psi + 1 + t^2), e = writhe.
ZLaurent jones_via_burau(const BraidWord& w);

// Same formula applied to a precomputed trace.
ZLaurent jones_from_trace(const ZLaurent& trace, int exponentSum);

// q^{-2} V(+) - q^2 V(-) - (q - q^{-1}) V(0) for the crossing at pos;
// identically zero by the skein relation.
ZLaurent skein_residual(const BraidWord& w, int pos);

// V == 1; for words of exponent sum +-2 also cross-checked against the trace
// characterization of the unknot.
bool is_unknot_closure(const BraidWord& w);

}  // namespace braid3
