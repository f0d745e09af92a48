#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "braid3/jones.hpp"
#include "braid3/word.hpp"

namespace braid3 {

struct SwitchedInvariant {
  int position = 0;
  int exponentSum = 0;
  ZLaurent trace = ZLaurent::zero(Var::t);
  ZLaurent jones = ZLaurent::zero(Var::q);
  LinkProfile profile;
};

// One entry per crossing: invariants of the closure after switching it.
std::vector<SwitchedInvariant> switched_invariants(const BraidWord& w);

struct EEReport {
  bool vEE = false;                // all switched closures share (V, profile)
  bool psiEE = false;              // all switched Burau traces agree
  bool everywhereTrivial = false;  // all switched closures have V == 1
  bool everywhereDifferent = false;
  bool undetermined = false;  // vEE holds but no family matches
};

struct FamilyLabel {
  enum Kind { None, NonPositive, Central, Symmetric, Split, Trivial } kind = None;
  int variant = 0;  // NonPositive: 1..5
  long k = 0;       // Central: power of the full twist; Symmetric/Split: repetition
  int l = 0;        // Symmetric: syllable length

  bool matched() const { return kind != None; }
  std::string str() const;
};

FamilyLabel family_match(const BraidWord& w);

EEReport classify_ee(const BraidWord& w);

// The five sporadic mixed-sign words with trivial switched closures.
const std::vector<BraidWord>& nonpositive_family();

struct EnumerationSummary {
  long long visited = 0;
  std::vector<BraidWord> vEE;
  std::vector<BraidWord> everywhereTrivial;
  std::vector<BraidWord> undetermined;
  std::vector<BraidWord> everywhereDifferent;
  std::vector<BraidWord> familyMismatch;  // vEE xor family-matched
  std::map<std::string, long long> familyCounts;
};

// Visit every canonical representative of length <= maxLen.  The emit hook
// (if any) sees each representative with its report and family label.
using EnumerateHook =
    std::function<void(const BraidWord&, const EEReport&, const FamilyLabel&)>;
EnumerationSummary enumerate_words(int maxLen, const EnumerateHook& hook = nullptr,
                                   int threads = 1);

}  // namespace braid3
