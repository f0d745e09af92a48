#pragma once

#include <array>
#include <utility>
#include <vector>

#include "braid3/laurent.hpp"
#include "braid3/word.hpp"

namespace braid3 {

enum class Splice : unsigned char { A, B };

// One splice site of a state: its two endpoints, each located as
// (loop id, position within the loop's cyclic endpoint sequence).
struct TraceSite {
  int crossing = 0;
  std::array<std::pair<int, int>, 2> endpoints;
  bool selfTrace = false;  // both endpoints on the same loop
};

// Result of smoothing every crossing of the closed diagram of a word.
struct SpliceState {
  std::vector<Splice> choice;
  int loops = 0;
  // per loop: endpoint ids in cyclic traversal order (endpoint id of
  // crossing j is 2j or 2j+1)
  std::vector<std::vector<int>> loopStructure;
  std::vector<TraceSite> traces;
};

SpliceState splice(const BraidWord& w, const std::vector<Splice>& choice);

// Loop count only; much cheaper than the full structure.
int splice_loop_count(const BraidWord& w, const std::vector<Splice>& choice);

// A-state = all-A choice, B-state = all-B choice.
std::pair<SpliceState, SpliceState> extreme_states(const BraidWord& w);

struct SelfTraceInfo {
  int crossing = 0;
  bool isolated = false;     // intertwined with no other self-trace of its loop
  bool intertwined = false;  // endpoints alternate with another self-trace
};

// Self-traces of a state, with mutual intertwining classified by endpoint
// alternation along each loop.
std::vector<SelfTraceInfo> self_traces(const SpliceState& s);

struct AdequacyReport {
  bool aAdequate = false;
  bool bAdequate = false;
  bool adequate = false;
  bool semiadequate = false;
  int aLoops = 0;
  int bLoops = 0;
  std::vector<SelfTraceInfo> aSelfTraces;
  std::vector<SelfTraceInfo> bSelfTraces;
};

AdequacyReport adequacy(const BraidWord& w);

// Kauffman bracket of the closed diagram (variable A), by state enumeration.
// Words above the length cap are rejected.
ZLaurent kauffman_bracket(const BraidWord& w, int stateCap = 24);

// Same value computed by sequential tangle composition; no length cap.
ZLaurent bracket_transfer(const BraidWord& w);

// Jones polynomial (variable q, q^2 = t) obtained from the bracket and the
// writhe normalization.
ZLaurent jones_via_bracket(const BraidWord& w, int stateCap = 24);

}  // namespace braid3
