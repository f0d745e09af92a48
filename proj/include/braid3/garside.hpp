#pragma once

#include "braid3/burau.hpp"
#include "braid3/word.hpp"

namespace braid3 {

// beta = Delta^{-k} alpha with alpha positive; produced from a reduced word
// containing no Delta or Delta^{-1} subword.
struct GarsideForm {
  int k = 0;
  BraidWord alpha;
};

GarsideForm garside_form(const BraidWord& w);

// True when the form proves the closure is not the unknot: k >= 2 and alpha
// has no cyclic trivial syllable (alpha is cyclically adequate as a positive
// word).
bool certify_not_unknot(const GarsideForm& f);

bool cyclically_adequate_positive(const BraidWord& alpha);

}  // namespace braid3
