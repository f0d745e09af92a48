#include "braid3/search.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "braid3/classify.hpp"

namespace braid3 {

const std::vector<SearchSeed>& search_seeds() {
  static const std::vector<SearchSeed> seeds = {
      // conjugate completions of s1 s2^3 s1
      {BraidWord{-2, -1, -2, -1, -2}, BraidWord{1, 2, 2, 2, 1}},
      {BraidWord{-1, -2, -1, -2, -1}, BraidWord{1, 2, 2, 2, 1}},
      // completions of s1^-1 s2^2 s1
      {BraidWord{-2, -1}, BraidWord{-1, 2, 2, 1}},
      {BraidWord{-1, -2}, BraidWord{-1, 2, 2, 1}},
      // completions of s1^-1 s2 s1
      {BraidWord{-2}, BraidWord{-1, 2, 1}},
      {BraidWord{-2, -1, 2, 1, -2}, BraidWord{-1, 2, 1}},
      // completions of s1^-1 s2 s1^-1
      {BraidWord{1}, BraidWord{-1, 2, -1}},
      {BraidWord{2}, BraidWord{-1, 2, -1}}};
  return seeds;
}

SearchState seed_state(const SearchSeed& seed, const Rational& t0) {
  SearchState s;
  s.t0 = t0;
  s.M = burau_at(seed.alpha, t0);
  s.N = burau_at(seed.gamma, t0);
  s.gamma = seed.gamma;
  return s;
}

namespace {

Rational neg_t_power(const Rational& t0, int e) {
  return ZLaurent::pow_rational(-t0, e);
}

// Check the neighbor rule of a completed syllable: runs of length >= 4 are
// never allowed; length 3 needs both neighbors of the same sign; length 2
// exactly one; length 1 at most one.  Unknown neighbors (beyond the ends of
// gamma) count as satisfiable.
bool closed_syllable_ok(const BraidWord& g, size_t from, size_t to, std::optional<int> leftSign,
                        std::optional<int> rightSign) {
  int len = static_cast<int>(to - from);
  int sign = g[from].sign;
  if (len >= 4) return false;
  int same = 0, known = 0;
  for (const auto& nb : {leftSign, rightSign}) {
    if (!nb) continue;
    ++known;
    if (*nb == sign) ++same;
  }
  int unknown = 2 - known;
  switch (len) {
    case 1: return same <= 1;
    case 2: return same <= 1 && same + unknown >= 1;
    case 3: return same == known;  // the unknown sides can still match
  }
  return true;
}

struct SyllableView {
  size_t from = 0, to = 0;  // current (growing) final syllable of gamma
};

SyllableView last_syllable(const BraidWord& g) {
  SyllableView v;
  v.to = g.size();
  size_t i = g.size();
  while (i > 0 && g[i - 1] == g[g.size() - 1]) --i;
  v.from = i;
  return v;
}

std::optional<int> sign_before(const BraidWord& g, size_t pos) {
  if (pos == 0) return std::nullopt;  // neighbor lies in the unknown prefix
  return g[pos - 1].sign;
}

}  // namespace

std::vector<Letter> admissible_extensions(const SearchState& s) {
  static const Letter alphabet[4] = {{1, 1}, {2, 1}, {1, -1}, {2, -1}};
  std::vector<Letter> out;
  const BraidWord& g = s.gamma;
  if (g.empty()) return {alphabet[0], alphabet[1], alphabet[2], alphabet[3]};
  SyllableView cur = last_syllable(g);
  for (const Letter& tau : alphabet) {
    if (g.letters.back() == tau.inverse()) continue;
    if (tau.index == g.letters.back().index) {
      // growing run: length cap, and a 3-run already needs a same-sign left
      size_t newLen = cur.to - cur.from + 1;
      if (newLen >= 4) continue;
      if (newLen == 3) {
        auto left = sign_before(g, cur.from);
        if (left && *left != tau.sign) continue;
      }
      out.push_back(tau);
    } else {
      // tau closes the current final syllable; its right neighbor is tau
      auto left = sign_before(g, cur.from);
      if (!closed_syllable_ok(g, cur.from, cur.to, left, tau.sign)) continue;
      out.push_back(tau);
    }
  }
  return out;
}

std::optional<SearchState> extend(const SearchState& s, Letter tau) {
  BurauMatrixQ mt = burau_letter_at(tau.inverse(), s.t0);
  BurauMatrixQ M2 = mt * s.M;
  // tr(M2 psi(gamma tau^-1)) must equal (-t0)^{-sign(tau)}
  BurauMatrixQ gt = s.N * mt;
  Rational tr = (M2 * gt).trace();
  if (tr != neg_t_power(s.t0, -tau.sign)) return std::nullopt;
  SearchState next;
  next.t0 = s.t0;
  next.M = M2;
  next.N = s.N * burau_letter_at(tau, s.t0);
  next.gamma = s.gamma;
  next.gamma.letters.push_back(tau);
  return next;
}

namespace {

bool is_identity(const BurauMatrixQ& m) {
  return m.a == 1 && m.d == 1 && m.b == 0 && m.c == 0;
}

bool commutator_prunable(const BraidWord& g) {
  if (g.size() < 4) return false;
  static const std::vector<BraidWord> pats = {BraidWord{1, 2, -1, -2}, BraidWord{2, 1, -2, -1},
                                              BraidWord{-1, -2, 1, 2}, BraidWord{-2, -1, 2, 1}};
  size_t p = g.size() - 4;
  for (const auto& pat : pats) {
    bool hit = true;
    for (size_t i = 0; i < 4; ++i)
      if (g[p + i] != pat[i]) {
        hit = false;
        break;
      }
    if (hit) return true;
  }
  return false;
}

struct SeedRunResult {
  std::vector<BraidWord> candidates;  // raw gamma words with M == I
  std::vector<long long> extendableByLength;
  long long statesVisited = 0;
};

void dfs(const SearchState& s, int maxLen, bool pruneCommutator, SeedRunResult& out) {
  ++out.statesVisited;
  size_t len = s.gamma.size();
  if (out.extendableByLength.size() <= len) out.extendableByLength.resize(len + 1, 0);
  ++out.extendableByLength[len];
  if (is_identity(s.M)) out.candidates.push_back(s.gamma);
  if (static_cast<int>(len) >= maxLen) return;
  for (const Letter& tau : admissible_extensions(s)) {
    auto next = extend(s, tau);
    if (!next) continue;
    if (pruneCommutator && commutator_prunable(next->gamma)) continue;
    dfs(*next, maxLen, pruneCommutator, out);
  }
}

}  // namespace

SearchResult run_search(const Rational& t0, int maxLen, bool pruneCommutator, int threads) {
  if (t0 == 0 || t0 == -1 || t0 == 1)
    throw std::invalid_argument("parameter value must avoid 0 and +-1");
  const auto& seeds = search_seeds();
  std::vector<SeedRunResult> per(seeds.size());

  auto runSeed = [&](size_t i) {
    SeedRunResult r;
    dfs(seed_state(seeds[i], t0), maxLen, pruneCommutator, r);
    return r;
  };

  if (threads <= 1) {
    for (size_t i = 0; i < seeds.size(); ++i) per[i] = runSeed(i);
  } else {
    std::vector<std::future<SeedRunResult>> futs;
    for (size_t i = 0; i < seeds.size(); ++i)
      futs.push_back(std::async(std::launch::async, runSeed, i));
    for (size_t i = 0; i < seeds.size(); ++i) per[i] = futs[i].get();
  }

  SearchResult out;
  std::set<BraidWord> seen;
  for (const auto& r : per) {
    out.statesVisited += r.statesVisited;
    if (out.extendableByLength.size() < r.extendableByLength.size())
      out.extendableByLength.resize(r.extendableByLength.size(), 0);
    for (size_t l = 0; l < r.extendableByLength.size(); ++l)
      out.extendableByLength[l] += r.extendableByLength[l];
    for (const auto& g : r.candidates) {
      BraidWord canon = canonicalize(g);
      if (!seen.insert(canon).second) continue;
      // numeric emissions are only candidates; keep those that verify
      // symbolically as everywhere-trivial
      if (classify_ee(canon).everywhereTrivial) out.emitted.push_back(canon);
    }
  }
  std::sort(out.emitted.begin(), out.emitted.end());
  return out;
}

}  // namespace braid3
