#include "braid3/garside.hpp"

#include <deque>

namespace braid3 {

GarsideForm garside_form(const BraidWord& w) {
  if (!is_reduced(w, false)) throw std::invalid_argument("input word must be reduced");
  if (!find_pattern(w, Pattern::Delta, false).empty() ||
      !find_pattern(w, Pattern::DeltaInv, false).empty())
    throw std::invalid_argument("input word must contain no half-twist subword");

  GarsideForm f;
  std::deque<Letter> gamma(w.letters.begin(), w.letters.end());
  auto flip_alpha = [&f] { f.alpha = transform(f.alpha, {Symmetry::Flip, 0}); };

  for (;;) {
    while (!gamma.empty() && gamma.front().sign > 0) {
      f.alpha.letters.push_back(gamma.front());
      gamma.pop_front();
    }
    if (gamma.empty()) break;
    Letter tau = gamma.front();
    gamma.pop_front();
    if (!gamma.empty() && gamma.front() == tau.flipped()) {
      // Delta^{-1} absorbs the adjacent pair tau bar(tau):
      // Delta alpha tau bar(tau) = bar(alpha) (Delta tau bar(tau)) and
      // Delta tau bar(tau) = tau^{-1} for negative tau.
      gamma.pop_front();
      flip_alpha();
      f.alpha.letters.push_back(tau.inverse());
    } else {
      // Delta alpha tau = bar(alpha) Delta tau = bar(alpha) tau^{-1} bar(tau)^{-1}
      flip_alpha();
      f.alpha.letters.push_back(tau.inverse());
      f.alpha.letters.push_back(tau.flipped().inverse());
    }
    ++f.k;
  }
  return f;
}

bool cyclically_adequate_positive(const BraidWord& alpha) {
  for (const auto& l : alpha.letters)
    if (l.sign < 0) return false;
  if (alpha.empty()) return true;
  ExponentVector ev = syllables(alpha, true);
  for (int e : ev.entries)
    if (e == 1) return false;
  return true;
}

bool certify_not_unknot(const GarsideForm& f) {
  return f.k >= 2 && cyclically_adequate_positive(f.alpha);
}

}  // namespace braid3
