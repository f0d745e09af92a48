#include "braid3/classify.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace braid3 {

std::vector<SwitchedInvariant> switched_invariants(const BraidWord& w) {
  size_t n = w.size();
  std::vector<SwitchedInvariant> out(n);
  if (n == 0) return out;
  // prefix[i] = psi(w[0..i)), suffix[i] = psi(w[i..n))
  std::vector<BurauMatrix> prefix(n + 1, burau_identity()), suffix(n + 1, burau_identity());
  for (size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * burau_letter(w[i]);
  for (size_t i = n; i-- > 0;) suffix[i] = burau_letter(w[i]) * suffix[i + 1];
  int s = w.exponent_sum();
  for (size_t i = 0; i < n; ++i) {
    BurauMatrix m = prefix[i] * burau_letter(w[i].inverse()) * suffix[i + 1];
    out[i].position = static_cast<int>(i);
    out[i].exponentSum = s - 2 * w[i].sign;
    out[i].trace = m.trace();
    out[i].jones = jones_from_trace(out[i].trace, out[i].exponentSum);
    out[i].profile = link_profile(switch_crossing(w, static_cast<int>(i)));
  }
  return out;
}

const std::vector<BraidWord>& nonpositive_family() {
  static const std::vector<BraidWord> words = {
      BraidWord{1, -2},
      BraidWord{1, -2, 1, -2},
      BraidWord{1, 2, -1, -2},
      BraidWord{1, 2, -1, -2, 1, 2, -1, -2},
      BraidWord{1, -2, -1, -1, 2, 2}};
  return words;
}

namespace {

const std::vector<BraidWord>& nonpositive_canonical() {
  static const std::vector<BraidWord> words = [] {
    std::vector<BraidWord> out;
    for (const auto& w : nonpositive_family()) out.push_back(canonicalize(w));
    return out;
  }();
  return words;
}

bool uses_single_index_one_sign(const BraidWord& w) {
  if (w.empty()) return false;
  for (const auto& l : w.letters)
    if (l.index != w[0].index || l.sign != w[0].sign) return false;
  return true;
}

bool constant_sign(const BraidWord& w, int sign) {
  for (const auto& l : w.letters)
    if (l.sign != sign) return false;
  return true;
}

}  // namespace

FamilyLabel family_match(const BraidWord& w) {
  FamilyLabel none;
  if (w.empty()) return {FamilyLabel::Trivial, 0, 0, 0};

  BraidWord canon = canonicalize(w);
  const auto& sporadic = nonpositive_canonical();
  for (size_t i = 0; i < sporadic.size(); ++i)
    if (canon == sporadic[i]) return {FamilyLabel::NonPositive, static_cast<int>(i) + 1, 0, 0};

  // positive/negative words representing a central element
  if (constant_sign(w, 1) || constant_sign(w, -1)) {
    if (auto k = scalar_central(burau(w))) return {FamilyLabel::Central, 0, *k, 0};
  }

  // (s1^l s2^l)^k up to symmetry: after canonicalization this is a positive
  // word with constant cyclic exponent vector of even weight
  if (constant_sign(canon, 1) && canon.size() >= 2) {
    ExponentVector ev = syllables(canon, true);
    if (ev.weight() >= 2 && ev.weight() % 2 == 0) {
      bool constant = true;
      for (int e : ev.entries)
        if (e != ev.entries[0]) constant = false;
      if (constant) return {FamilyLabel::Symmetric, 0, ev.weight() / 2, ev.entries[0]};
    }
  }

  if (uses_single_index_one_sign(w)) return {FamilyLabel::Split, 0, static_cast<long>(w.size()), 0};

  return none;
}

std::string FamilyLabel::str() const {
  std::ostringstream os;
  switch (kind) {
    case None: return "none";
    case Trivial: return "trivial";
    case NonPositive:
      os << "non-positive #" << variant;
      return os.str();
    case Central:
      os << "central k=" << k;
      return os.str();
    case Symmetric:
      os << "symmetric l=" << l << " k=" << k;
      return os.str();
    case Split:
      os << "split k=" << k;
      return os.str();
  }
  return "?";
}

EEReport classify_ee(const BraidWord& w) {
  EEReport r;
  auto inv = switched_invariants(w);
  r.vEE = true;
  r.psiEE = true;
  r.everywhereTrivial = true;
  for (size_t i = 0; i < inv.size(); ++i) {
    if (inv[i].jones != ZLaurent::constant(Var::q, 1)) r.everywhereTrivial = false;
    if (i > 0) {
      if (inv[i].trace != inv[0].trace) r.psiEE = false;
      if (inv[i].jones != inv[0].jones || inv[i].profile != inv[0].profile) r.vEE = false;
    }
  }
  // "everywhere different" needs at least two switched closures, pairwise
  // distinguished by link invariants
  r.everywhereDifferent = inv.size() >= 2;
  for (size_t i = 0; i < inv.size() && r.everywhereDifferent; ++i)
    for (size_t j = i + 1; j < inv.size(); ++j)
      if (inv[i].jones == inv[j].jones && inv[i].profile == inv[j].profile) {
        r.everywhereDifferent = false;
        break;
      }
  r.undetermined = r.vEE && !family_match(w).matched();
  return r;
}

namespace {

BraidWord word_from_code(int len, unsigned long code) {
  static const Letter alphabet[4] = {{1, 1}, {2, 1}, {1, -1}, {2, -1}};
  BraidWord w;
  for (int i = 0; i < len; ++i) {
    w.letters.push_back(alphabet[(code >> (2 * (len - 1 - i))) & 3]);
  }
  return w;
}

}  // namespace

EnumerationSummary enumerate_words(int maxLen, const EnumerateHook& hook, int threads) {
  if (maxLen < 0 || maxLen > 16) throw std::invalid_argument("enumeration depth out of range");
  if (threads < 1) threads = 1;

  auto process_range = [&](int len, unsigned long lo, unsigned long hi) {
    EnumerationSummary s;
    std::vector<std::tuple<BraidWord, EEReport, FamilyLabel>> hits;
    for (unsigned long code = lo; code < hi; ++code) {
      BraidWord w = word_from_code(len, code);
      if (canonicalize(w) != w) continue;
      ++s.visited;
      EEReport r = classify_ee(w);
      FamilyLabel f = family_match(w);
      if (r.vEE) s.vEE.push_back(w);
      if (r.everywhereTrivial) s.everywhereTrivial.push_back(w);
      if (r.undetermined) s.undetermined.push_back(w);
      if (r.everywhereDifferent) s.everywhereDifferent.push_back(w);
      if (r.vEE != f.matched()) s.familyMismatch.push_back(w);
      if (f.matched()) ++s.familyCounts[f.str()];
      if (hook) hits.emplace_back(std::move(w), r, f);
    }
    if (hook)
      for (const auto& [w, r, f] : hits) hook(w, r, f);
    return s;
  };

  EnumerationSummary total;
  auto merge = [&total](const EnumerationSummary& s) {
    total.visited += s.visited;
    auto app = [](std::vector<BraidWord>& a, const std::vector<BraidWord>& b) {
      a.insert(a.end(), b.begin(), b.end());
    };
    app(total.vEE, s.vEE);
    app(total.everywhereTrivial, s.everywhereTrivial);
    app(total.undetermined, s.undetermined);
    app(total.everywhereDifferent, s.everywhereDifferent);
    app(total.familyMismatch, s.familyMismatch);
    for (const auto& [k, v] : s.familyCounts) total.familyCounts[k] += v;
  };

  for (int len = 0; len <= maxLen; ++len) {
    unsigned long count = 1ul << (2 * len);
    if (threads == 1 || len < 6 || hook) {
      merge(process_range(len, 0, count));
      continue;
    }
    unsigned long chunk = (count + static_cast<unsigned long>(threads) - 1) /
                          static_cast<unsigned long>(threads);
    std::vector<std::future<EnumerationSummary>> futs;
    for (int tIdx = 0; tIdx < threads; ++tIdx) {
      unsigned long lo = chunk * static_cast<unsigned long>(tIdx);
      unsigned long hi = std::min(count, lo + chunk);
      if (lo >= hi) break;
      futs.push_back(std::async(std::launch::async, process_range, len, lo, hi));
    }
    for (auto& fu : futs) merge(fu.get());
  }
  return total;
}

}  // namespace braid3
