#pragma once

#include <optional>
#include <vector>

#include "braid3/burau.hpp"
#include "braid3/word.hpp"

namespace braid3 {

// A seed couples a fixed braid alpha (as a word, for symbolic re-checks)
// with the visible suffix gamma it completes.  Every crossing switch of
// gamma inside alpha*gamma must yield an unknot closure.
struct SearchSeed {
  BraidWord alpha;
  BraidWord gamma;
};

const std::vector<SearchSeed>& search_seeds();

struct SearchState {
  BurauMatrixQ M;  // psi(alpha) at t0, updated to psi(tau^-1 ... ) M
  BurauMatrixQ N;  // psi(gamma) at t0
  BraidWord gamma;
  Rational t0;
};

SearchState seed_state(const SearchSeed& seed, const Rational& t0);

// Letters that keep gamma free of cancellations and of syllable shapes that
// can no longer satisfy the neighbor rules.
std::vector<Letter> admissible_extensions(const SearchState& s);

// Append tau if the new crossing also switches to an unknot; nullopt when the
// trace test fails.
std::optional<SearchState> extend(const SearchState& s, Letter tau);

struct SearchResult {
  std::vector<BraidWord> emitted;             // canonical forms, verified symbolically
  std::vector<long long> extendableByLength;  // index = gamma length
  long long statesVisited = 0;
};

SearchResult run_search(const Rational& t0, int maxLen, bool pruneCommutator = false,
                        int threads = 1);

}  // namespace braid3
